"""Boundary refactorization and the parametric reflection map B on P(n)_k.

For a constant Hermitian unitary U the involution sigma sends g_{a,P} to
g_{tau(a), U P U^*}. The product sigma(g) g refactors uniquely as

    sigma(g_{a,P}) g_{a,P} = g_{a,Q2} g_{tau(a),Q1},   Q1 = U Q2 U^*,

with Q2 = phi P phi^-1, phi = 2a I + (conj(a) - a)(P + U P U^*), and
B(a)(P) = Q1. The parameter flips a -> tau(a); functions here return only
the projector and callers track the parameter (see ``apply_b``).

Composite maps act right to left on a list of (alpha, P) slots, so
``B1 R21 B2 R12`` means: R12 first, then B on slot 2, then R21, then B on slot 1.
"""

from dataclasses import dataclass

import numpy as np

from reflectory import matrix_core as mc
from reflectory import schedules
from reflectory._core import kernels
from reflectory.config import RCOND_MIN, TOL_REFAC, sample_z
from reflectory.errors import (AdmissibilityError, MirrorCollision, RankError,
                               SingularMatrix)
from reflectory.simple_elements import check_parameter, require_disjoint, tau
from reflectory.yang_baxter import apply_r, yb_map


@dataclass(frozen=True, eq=False)
class BoundaryPair:
    p1_tilde: np.ndarray  # projector of the mirror factor g_{tau(a), .}
    p2_tilde: np.ndarray  # projector of the real factor g_{a, .}
    phi: np.ndarray
    residual: float


def c_u(P, U):
    """The conjugation P -> U P U^* (graph map of the boundary)."""
    Q = U @ P @ mc.dagger(U)
    return 0.5 * (Q + mc.dagger(Q))


def boundary_phi(alpha, P, U):
    n = P.shape[0]
    return 2 * alpha * np.eye(n) + (np.conj(alpha) - alpha) * (P + c_u(P, U))


def boundary_refactor(alpha, P, U, check=True):
    alpha = check_parameter(alpha, mirror=True)
    P = np.asarray(P, dtype=complex)
    phi = boundary_phi(alpha, P, U)
    Q2, rcond = kernels.conjugate(phi, P)
    if rcond < RCOND_MIN:
        raise SingularMatrix(f"boundary matrix is singular (rcond={rcond:.2e})",
                             rcond=rcond)
    Q1 = c_u(Q2, U)
    residual = 0.0
    if check:
        ta = tau(alpha)
        zs = sample_z({alpha, np.conj(alpha), ta, np.conj(ta)})
        residual = kernels.product_discrepancy(
            np.array([ta, alpha]), np.stack([c_u(P, U), P]),
            np.array([alpha, ta]), np.stack([Q2, Q1]), zs)
    return BoundaryPair(Q1, Q2, phi, residual)


def b_map(alpha, P, U, strict=False):
    """B(alpha)(P) = U phi P phi^-1 U^*.

    With ``strict=True`` the input must lie in some P(n)_k with 1 <= k <= n-1.
    """
    if strict:
        k = mc.projector_rank(P)
        if not 1 <= k <= P.shape[0] - 1:
            raise RankError(f"strict reflection map needs 1 <= rank <= n-1, got {k}")
    return boundary_refactor(alpha, P, U, check=False).p1_tilde


def apply_b(state, i, U):
    """Reflect slot i of a list of (alpha, P) slots: (a, P) -> (tau(a), B(a)(P))."""
    a, P = state[i]
    out = list(state)
    out[i] = (tau(a), b_map(a, P, U))
    return out


def require_reflection_admissible(alpha1, alpha2):
    """Pairwise and mirror disjointness for a reflection-equation pair."""
    a1 = check_parameter(alpha1, mirror=True)
    a2 = check_parameter(alpha2, mirror=True)
    s1 = {a1, complex(np.conj(a1))}
    s2 = {a2, complex(np.conj(a2))}
    require_disjoint(s1, s2)
    require_disjoint({-z for z in s1}, s2, what="mirror supports", exc=MirrorCollision)
    return a1, a2


def reflection_sides(alpha1, alpha2, P1, P2, U):
    """Both sides of B1 R21 B2 R12 = R21 B2 R12 B1 as lists of (alpha, P)."""
    a1, a2 = require_reflection_admissible(alpha1, alpha2)
    state = [(a1, np.asarray(P1, dtype=complex)), (a2, np.asarray(P2, dtype=complex))]
    lhs = apply_r(state, 0, 1)
    lhs = apply_b(lhs, 1, U)
    lhs = apply_r(lhs, 1, 0)
    lhs = apply_b(lhs, 0, U)
    rhs = apply_b(state, 0, U)
    rhs = apply_r(rhs, 0, 1)
    rhs = apply_b(rhs, 1, U)
    rhs = apply_r(rhs, 1, 0)
    return lhs, rhs


def check_reflection_equation(alpha1, alpha2, P1, P2, U):
    lhs, rhs = reflection_sides(alpha1, alpha2, P1, P2, U)
    return max(mc.fro(l[1] - r[1]) for l, r in zip(lhs, rhs))


def graph_embed(P, U):
    """(c_U, id): P -> (U P U^*, P)."""
    return c_u(P, U), np.asarray(P, dtype=complex)


def graph_residual(pair, U):
    """Distance of (Q1, Q2) from the graph {(U Q U^*, Q)}."""
    Q1, Q2 = pair
    return mc.fro(Q1 - c_u(Q2, U))


def graph_project(pair, U, tol=TOL_REFAC):
    """Inverse of ``graph_embed``; refuses pairs that are off the graph."""
    r = graph_residual(pair, U)
    if r > tol:
        raise ValueError(f"pair is off the graph by {r:.2e}")
    return pair[1]


def reduced_yb_on_graph(alpha, P, U):
    """R_red(tau(a), a) on the graph point (U P U^*, P): returns (B(a)(P), U B(a)(P) U^*)."""
    BP = b_map(alpha, P, U)
    return BP, c_u(BP, U)


def graph_yb(alpha, pair):
    """Unrestricted R(tau(a), a) applied to a pair (Q1, Q2)."""
    Q1, Q2 = yb_map(tau(alpha), pair[0], alpha, pair[1])
    return Q1, Q2


def b_by_conjugacy(alpha, P, U):
    """B(a) assembled as (c_U, id)^-1 o S o R_red(tau(a), a) o (c_U, id)."""
    Q1, Q2 = graph_yb(alpha, graph_embed(P, U))
    return graph_project((Q2, Q1), U)


def require_ensemble_admissible(alphas):
    """All 2N values {a_i, tau(a_i)} with their conjugates pairwise separated."""
    alphas = [check_parameter(a, mirror=True) for a in alphas]
    pts = list(alphas) + [tau(a) for a in alphas]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            si = {pts[i], complex(np.conj(pts[i]))}
            sj = {pts[j], complex(np.conj(pts[j]))}
            require_disjoint(si, sj, what=f"parameters {pts[i]:.4g} and {pts[j]:.4g}:",
                             exc=AdmissibilityError)
    return alphas


def n_body_reflection_projectors(alphas, projectors, U, moves=None):
    """Mixed-rank N-body reflection map (P_1, ..., P_N) -> (U P_1^+ U^*, ..., U P_N^+ U^*).

    Computed by composing pairwise R and single-slot B maps along ``moves``
    (default: ``schedules.sweep``).
    """
    alphas = require_ensemble_admissible(alphas)
    N = len(alphas)
    moves = schedules.sweep(N) if moves is None else moves

    def swap(left, right):
        (al, Pl), (ar, Pr) = left, right
        Ql, Qr = yb_map(al, Pl, ar, Pr, check=False)
        return (al, Ql), (ar, Qr)

    def reflect(v):
        a, P = v
        return tau(a), b_map(a, P, U)

    init = [(a, np.asarray(P, dtype=complex)) for a, P in zip(alphas, projectors)]
    final = schedules.run(moves, init, swap, reflect)
    return [P for _, P in final]
