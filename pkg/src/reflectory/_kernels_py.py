"""Pure-numpy implementations of the hot kernels.

Same signatures and semantics as the compiled ``_kernels`` module; used when the
extension is unavailable or ``REFLECTORY_PURE_PYTHON=1`` is set.
"""

import numpy as np


def conjugate(phi, P):
    """Return ``(phi P phi^-1 symmetrized, rcond)`` with rcond in the 1-norm.

    rcond is 0.0 when the LU factorization hits an exactly zero pivot; in that
    case the returned matrix is all zeros and must not be used.
    """
    phi = np.asarray(phi, dtype=complex)
    try:
        inv = np.linalg.inv(phi)
    except np.linalg.LinAlgError:
        return np.zeros_like(phi), 0.0
    rcond = 1.0 / (np.linalg.norm(phi, 1) * np.linalg.norm(inv, 1))
    Q = phi @ P @ inv
    return 0.5 * (Q + Q.conj().T), float(rcond)


def refactor_phi(a1, P1, a2, P2):
    n = P1.shape[0]
    return ((a2 - np.conj(a1)) * np.eye(n) + (np.conj(a2) - a2) * P2
            + (np.conj(a1) - a1) * P1)


def refactor_pair(a1, P1, a2, P2):
    """Solve g(a1,P1) g(a2,P2) = g(a2,Q2) g(a1,Q1); returns (Q1, Q2, phi, rcond)."""
    P1 = np.asarray(P1, dtype=complex)
    P2 = np.asarray(P2, dtype=complex)
    phi = refactor_phi(a1, P1, a2, P2)
    try:
        inv = np.linalg.inv(phi)
    except np.linalg.LinAlgError:
        z = np.zeros_like(phi)
        return z, z, phi, 0.0
    rcond = 1.0 / (np.linalg.norm(phi, 1) * np.linalg.norm(inv, 1))
    Q1 = phi @ P1 @ inv
    Q2 = phi @ P2 @ inv
    return (0.5 * (Q1 + Q1.conj().T), 0.5 * (Q2 + Q2.conj().T), phi,
            float(rcond))


def eval_product(alphas, projectors, z):
    """Evaluate prod_i (I + (conj(a_i)-a_i)/(z-conj(a_i)) P_i) left to right."""
    projectors = np.asarray(projectors, dtype=complex)
    n = projectors.shape[-1]
    out = np.eye(n, dtype=complex)
    for a, P in zip(alphas, projectors):
        ab = np.conj(a)
        out = out + ((ab - a) / (z - ab)) * (out @ P)
    return out


def product_discrepancy(alphas_a, projs_a, alphas_b, projs_b, zs):
    """max over zs of the Frobenius distance between two factor products."""
    worst = 0.0
    for z in zs:
        d = np.linalg.norm(eval_product(alphas_a, projs_a, z)
                           - eval_product(alphas_b, projs_b, z))
        worst = max(worst, float(d))
    return worst
