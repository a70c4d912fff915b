"""Pairwise refactorization of simple elements and the parametric Yang-Baxter maps.

Throughout, ``R(a1, a2)(P1, P2) = (Q1, Q2)`` is defined by

    g_{a1,P1} g_{a2,P2} = g_{a2,Q2} g_{a1,Q1},

with ``Q_i = phi P_i phi^-1`` for the explicit matrix ``phi`` built in the kernels.
"""

from dataclasses import dataclass

import numpy as np

from reflectory import matrix_core as mc
from reflectory._core import kernels
from reflectory.config import RCOND_MIN, sample_z
from reflectory.errors import SingularMatrix
from reflectory.simple_elements import check_parameter, require_disjoint


@dataclass(frozen=True, eq=False)
class YBPairResult:
    p1_tilde: np.ndarray
    p2_tilde: np.ndarray
    phi: np.ndarray
    residual: float
    rcond: float

    def __iter__(self):
        # allows ``Q1, Q2 = yb_map(...)``
        return iter((self.p1_tilde, self.p2_tilde))


def pair_support(a1, a2):
    return {a1, complex(np.conj(a1))}, {a2, complex(np.conj(a2))}


def _solve(a1, P1, a2, P2, check=True):
    """Refactor g_{a1,P1} g_{a2,P2} = g_{a2,Q2} g_{a1,Q1}; returns a YBPairResult."""
    a1 = check_parameter(a1)
    a2 = check_parameter(a2)
    s1, s2 = pair_support(a1, a2)
    require_disjoint(s1, s2)
    Q1, Q2, phi, rcond = kernels.refactor_pair(a1, P1, a2, P2)
    if rcond < RCOND_MIN:
        raise SingularMatrix(f"refactorization matrix is singular (rcond={rcond:.2e})",
                             rcond=rcond)
    residual = 0.0
    if check:
        zs = sample_z(s1 | s2)
        residual = kernels.product_discrepancy(
            np.array([a1, a2]), np.stack([P1, P2]),
            np.array([a2, a1]), np.stack([Q2, Q1]), zs)
    return Q1, Q2, phi, residual, rcond


def yb_map(alpha1, P1, alpha2, P2, check=True):
    """R(alpha1, alpha2)(P1, P2).

    Parameters
    ----------
    alpha1, alpha2 : complex
        Spectral parameters off the real axis with disjoint supports
        {alpha, conj(alpha)}.
    P1, P2 : ndarray
        Hermitian projectors of any ranks.
    check : bool
        Compute the pointwise residual of the refactorization at the sample
        points. Disable only in inner loops that verify the result elsewhere.

    Returns
    -------
    YBPairResult
        ``(p1_tilde, p2_tilde)`` plus ``phi``, the residual and the 1-norm
        reciprocal condition number of ``phi``.
    """
    Q1, Q2, phi, residual, rcond = _solve(alpha1, np.asarray(P1, dtype=complex),
                                          alpha2, np.asarray(P2, dtype=complex), check)
    return YBPairResult(Q1, Q2, phi, residual, rcond)


def r21_map(alpha2, alpha1, P1, P2, check=True):
    """R21(alpha2, alpha1)(P1, P2) = (Q1, Q2) with g_{a2,P2} g_{a1,P1} = g_{a1,Q1} g_{a2,Q2}."""
    Q2, Q1, phi, residual, rcond = _solve(alpha2, np.asarray(P2, dtype=complex),
                                          alpha1, np.asarray(P1, dtype=complex), check)
    return YBPairResult(Q1, Q2, phi, residual, rcond)


def swap_pair(pair):
    """The permutation (P1, P2) -> (P2, P1)."""
    a, b = pair
    return b, a


def apply_r(state, i, j, check=False):
    """Apply R_ij to a list of (alpha, P) slots and return the new list.

    The factor in slot ``i`` is the left one: g_i g_j = g_j' g_i'. For i < j
    this is R(alpha_i, alpha_j); for i > j it is R21(alpha_i, alpha_j) acting on
    slots (j, i). Parameters are carried along unchanged.
    """
    (ai, Pi), (aj, Pj) = state[i], state[j]
    Qi, Qj, _, _, _ = _solve(ai, Pi, aj, Pj, check)
    out = list(state)
    out[i] = (ai, Qi)
    out[j] = (aj, Qj)
    return out


def check_ybe(alpha1, alpha2, alpha3, P1, P2, P3):
    """Max Frobenius discrepancy between R12 R13 R23 and R23 R13 R12 on (P1, P2, P3)."""
    state = [(complex(alpha1), np.asarray(P1, dtype=complex)),
             (complex(alpha2), np.asarray(P2, dtype=complex)),
             (complex(alpha3), np.asarray(P3, dtype=complex))]
    lhs = state
    for i, j in ((1, 2), (0, 2), (0, 1)):  # rightmost factor acts first
        lhs = apply_r(lhs, i, j)
    rhs = state
    for i, j in ((0, 1), (0, 2), (1, 2)):
        rhs = apply_r(rhs, i, j)
    return max(mc.fro(l[1] - r[1]) for l, r in zip(lhs, rhs))
