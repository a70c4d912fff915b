"""Rank-one theory on CP^{n-1}: polarization points, the projective Yang-Baxter
map, the projective reflection map and the N-body polarization reflection map.

Points are unit vectors with a fixed phase: the first entry of largest modulus
is real and nonnegative. Equality is always tested with the phase-invariant
distance ``proj_distance``.
"""

from dataclasses import dataclass, field

import numpy as np

from reflectory import matrix_core as mc
from reflectory import schedules
from reflectory.errors import DegenerateImage
from reflectory.reflection import require_ensemble_admissible
from reflectory.simple_elements import check_parameter, require_disjoint, tau

DEGENERATE_NORM = 1e-14


def normalize_point(v):
    """Unit, phase-fixed representative of [v]."""
    v = np.asarray(v, dtype=complex).reshape(-1)
    nrm = np.linalg.norm(v)
    if not nrm > DEGENERATE_NORM:
        raise DegenerateImage(f"vector of norm {nrm:.2e} has no projective class")
    v = v / nrm
    k = int(np.argmax(np.abs(v)))
    v = v * (abs(v[k]) / v[k])
    v[k] = abs(v[k])  # exactly real and nonnegative
    return v


def proj_distance(p, q):
    """sqrt(1 - |<p,q>|^2) for unit p, q, evaluated as |q - <p,q> p| for stability."""
    p = np.asarray(p, dtype=complex)
    q = np.asarray(q, dtype=complex)
    return float(np.linalg.norm(q - np.vdot(p, q) * p))


def j_delta(p):
    """[p] -> p p^* / p^* p."""
    p = np.asarray(p, dtype=complex).reshape(-1)
    P = np.outer(p, p.conj()) / np.vdot(p, p).real
    return 0.5 * (P + mc.dagger(P))


def point_from_projector(P):
    """Inverse of j_delta on rank-one projectors (dominant eigenvector)."""
    w, V = np.linalg.eigh(0.5 * (P + mc.dagger(P)))
    return normalize_point(V[:, -1])


def projective_phi(alpha1, alpha2, p1, p2):
    n = p1.shape[0]
    return ((alpha2 - np.conj(alpha1)) * np.eye(n)
            + (np.conj(alpha2) - alpha2) * j_delta(p2)
            + (np.conj(alpha1) - alpha1) * j_delta(p1))


def r_tilde(alpha1, alpha2, p1, p2):
    """([p1], [p2]) -> ([phi p1], [phi p2]), the projective Yang-Baxter map."""
    a1 = check_parameter(alpha1)
    a2 = check_parameter(alpha2)
    require_disjoint({a1, complex(np.conj(a1))}, {a2, complex(np.conj(a2))})
    p1 = np.asarray(p1, dtype=complex)
    p2 = np.asarray(p2, dtype=complex)
    phi = projective_phi(a1, a2, p1, p2)
    return normalize_point(phi @ p1), normalize_point(phi @ p2)


def zero_pole_factor(zero, pole, P, z):
    """The unitary factor I + (pole - zero)/(z - pole) P with the given zero and pole."""
    n = P.shape[0]
    return np.eye(n) + ((pole - zero) / (z - pole)) * P


def r_tilde_via_factors(alpha1, alpha2, p1, p2):
    """Same map as ``r_tilde`` written through single-factor evaluations:
    phi p1 = (a2 - a1) h_2(a1) p1 and phi p2 = (conj a2 - conj a1) h_1(conj a2) p2,
    where h_2 has zero conj(a2), pole a2 and h_1 has zero a1, pole conj(a1)."""
    a1, a2 = complex(alpha1), complex(alpha2)
    q1 = (a2 - a1) * zero_pole_factor(np.conj(a2), a2, j_delta(p2), a1) @ p1
    q2 = ((np.conj(a2) - np.conj(a1))
          * zero_pole_factor(a1, np.conj(a1), j_delta(p1), np.conj(a2)) @ p2)
    return normalize_point(q1), normalize_point(q2)


def r_tilde21(alpha2, alpha1, p1, p2):
    """R21~(a2, a1): g_{a2,p2} g_{a1,p1} = g_{a1,p1'} g_{a2,p2'}."""
    q2, q1 = r_tilde(alpha2, alpha1, p2, p1)
    return q1, q2


def c_tilde(p, U):
    """[p] -> [U p]."""
    return normalize_point(U @ p)


def b_tilde(alpha, p, U):
    """[p] -> [(I + (conj a - a)/(a + conj a) pi_[p]) U p]."""
    a = check_parameter(alpha, mirror=True)
    p = np.asarray(p, dtype=complex)
    c = (np.conj(a) - a) / (a + np.conj(a))
    Up = U @ p
    return normalize_point(Up + c * p * (np.vdot(p, Up) / np.vdot(p, p)))


def apply_r_tilde(state, i, j):
    """R~_ij on a list of (alpha, point) slots; slot i is the left factor."""
    (ai, pi), (aj, pj) = state[i], state[j]
    qi, qj = r_tilde(ai, aj, pi, pj)
    out = list(state)
    out[i] = (ai, qi)
    out[j] = (aj, qj)
    return out


def apply_b_tilde(state, i, U):
    a, p = state[i]
    out = list(state)
    out[i] = (tau(a), b_tilde(a, p, U))
    return out


def projective_reflection_sides(alpha1, alpha2, p1, p2, U):
    from reflectory.reflection import require_reflection_admissible
    a1, a2 = require_reflection_admissible(alpha1, alpha2)
    state = [(a1, normalize_point(p1)), (a2, normalize_point(p2))]
    lhs = apply_r_tilde(state, 0, 1)
    lhs = apply_b_tilde(lhs, 1, U)
    lhs = apply_r_tilde(lhs, 1, 0)
    lhs = apply_b_tilde(lhs, 0, U)
    rhs = apply_b_tilde(state, 0, U)
    rhs = apply_r_tilde(rhs, 0, 1)
    rhs = apply_b_tilde(rhs, 1, U)
    rhs = apply_r_tilde(rhs, 1, 0)
    return lhs, rhs


def check_projective_reflection_equation(alpha1, alpha2, p1, p2, U):
    lhs, rhs = projective_reflection_sides(alpha1, alpha2, p1, p2, U)
    return max(proj_distance(l[1], r[1]) for l, r in zip(lhs, rhs))


def b_tilde_by_conjugacy(alpha, p, U):
    """B~(a) = (c~_U, id)^-1 o s~ o R~_red(tau(a), a) o (c~_U, id)."""
    q1, q2 = r_tilde(tau(alpha), alpha, c_tilde(p, U), p)
    # after the swap the pair is (q2, q1) and must lie on the graph {([U x], [x])}
    off = proj_distance(q2, c_tilde(q1, U))
    if off > 1e-9:
        raise ValueError(f"reduced map left the graph by {off:.2e}")
    return q1


@dataclass
class PolarizationEnsemble:
    params: list
    points: list
    boundary: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.params = [complex(a) for a in self.params]
        self.points = [normalize_point(p) for p in self.points]
        self.boundary = mc.check_hermitian_unitary(self.boundary)
        if len(self.params) != len(self.points):
            raise ValueError("need one polarization per soliton")
        require_ensemble_admissible(self.params)

    @property
    def N(self):
        return len(self.params)

    @property
    def n(self):
        return self.boundary.shape[0]


def n_body_reflection(ens, moves=None):
    """Pi(a_1..a_N)([p_1^-],...,[p_N^-]) by pairwise composition along ``moves``
    (default ``schedules.sweep``)."""
    U = ens.boundary
    moves = schedules.sweep(ens.N) if moves is None else moves

    def swap(left, right):
        (al, pl), (ar, pr) = left, right
        ql, qr = r_tilde(al, ar, pl, pr)
        return (al, ql), (ar, qr)

    def reflect(v):
        a, p = v
        return tau(a), b_tilde(a, p, U)

    final = schedules.run(moves, list(zip(ens.params, ens.points)), swap, reflect)
    return [p for _, p in final]


def scattering_map(params, points, moves=None):
    """Full-line polarization scattering map for the product g_1 ... g_N.

    Every pair collides once; the default collision order lets the fastest
    soliton (largest |Re alpha|) overtake first.
    """
    params = [check_parameter(a) for a in params]
    N = len(params)
    for i in range(N):
        for j in range(i + 1, N):
            require_disjoint({params[i], np.conj(params[i])},
                             {params[j], np.conj(params[j])})
    if moves is None:
        moves = schedules.reversal(N, key=schedules.by_velocity(params))

    def swap(left, right):
        (al, pl), (ar, pr) = left, right
        ql, qr = r_tilde(al, ar, pl, pr)
        return (al, ql), (ar, qr)

    final = schedules.run(moves, list(zip(params, [normalize_point(p) for p in points])),
                          swap, None)
    return [p for _, p in final]


def mirror_embedding(ens):
    """2N-soliton full-line data ([U p_N],...,[U p_1],[p_1],...,[p_N]) with
    parameters (tau a_N, ..., tau a_1, a_1, ..., a_N)."""
    U = ens.boundary
    params = [tau(a) for a in reversed(ens.params)] + list(ens.params)
    points = [c_tilde(p, U) for p in reversed(ens.points)] + list(ens.points)
    return params, points


def reflection_from_scattering(ens, moves=None):
    """Pi recovered from the mirror-symmetric 2N scattering map.

    Returns ``(pi_left, pi_right, out)``: Pi read off the reversed mirror half,
    Pi read off c~_U of the real half, and the raw 2N output.
    """
    params, points = mirror_embedding(ens)
    out = scattering_map(params, points, moves)
    N = ens.N
    pi_left = [out[N - 1 - i] for i in range(N)]
    pi_right = [c_tilde(out[N + i], ens.boundary) for i in range(N)]
    return pi_left, pi_right, out


def scattering_relation_residual(ens, moves=None):
    """Distance between Pi and both readings of the 2N scattering output."""
    pi = n_body_reflection(ens)
    left, right, _ = reflection_from_scattering(ens, moves)
    return max(max(proj_distance(a, b), proj_distance(a, c))
               for a, b, c in zip(pi, left, right))


def ensemble_to_json(ens):
    return {"boundary": mc.matrix_to_json(ens.boundary),
            "solitons": [{"alpha": [a.real, a.imag],
                          "polarization": [[float(x.real), float(x.imag)] for x in p]}
                         for a, p in zip(ens.params, ens.points)]}


def ensemble_from_json(obj):
    U = mc.matrix_from_json(obj["boundary"])
    params, points = [], []
    for s in obj["solitons"]:
        re, im = s["alpha"]
        params.append(complex(re, im))
        points.append(np.array([complex(a, b) for a, b in s["polarization"]]))
    return PolarizationEnsemble(params, points, U)
