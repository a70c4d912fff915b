"""Symplectic forms on projector orbits and on CP^{n-1}, finite-difference
tangent maps, and symplectomorphism / nondegeneracy checks.

Orbit form: omega(P)(V, W) = i tr P [[V,P],[W,P]] for tangents V, W at P.
Fubini-Study form: omega_FS(p)(u, v) is the orbit form at pi_[p] evaluated on
the pushed-forward tangents u p^* + p u^* and v p^* + p v^*.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from reflectory import matrix_core as mc
from reflectory.config import FD_STEP, TOL_STRUCT, make_rng
from reflectory.errors import ReflectoryError, TangencyError
from reflectory.projective import j_delta, normalize_point

TANGENT_TOL = 1e-8  # inputs built numerically (pushforwards) carry ~1e-11 noise


def comm(A, B):
    return A @ B - B @ A


def is_projector_tangent(P, V, tol=TANGENT_TOL):
    return mc.fro(V @ P + P @ V - V) <= tol * max(1.0, mc.fro(V))


def omega_orbit(P, V, W, tol=TANGENT_TOL):
    for X in (V, W):
        if not is_projector_tangent(P, X, tol):
            raise TangencyError(f"not tangent at P (defect {mc.fro(X @ P + P @ X - X):.2e})")
    val = 1j * np.trace(P @ comm(comm(V, P), comm(W, P)))
    return float(val.real)


def push_point_tangent(p, u):
    """T j_delta at a unit representative p: u -> u p^* + p u^*."""
    return np.outer(u, p.conj()) + np.outer(p, u.conj())


def horizontal(p, v):
    return v - np.vdot(p, v) * p


def omega_fs(p, u, v, tol=TANGENT_TOL):
    p = np.asarray(p, dtype=complex)
    p = p / np.linalg.norm(p)
    for x in (u, v):
        if abs(np.vdot(p, x)) > tol * max(1.0, np.linalg.norm(x)):
            raise TangencyError("projective tangent is not horizontal")
    return omega_orbit(j_delta(p), push_point_tangent(p, u), push_point_tangent(p, v), tol)


def omega_fs_chart(p, u, v):
    """Independent evaluation of omega_FS in the affine chart p_k != 0 (k = argmax |p_k|)."""
    p = np.asarray(p, dtype=complex)
    k = int(np.argmax(np.abs(p)))
    rest = [i for i in range(p.size) if i != k]
    pk = p[k]
    w = p[rest] / pk

    def dw(x):
        return (x[rest] * pk - p[rest] * x[k]) / pk**2

    s = 1.0 + np.vdot(w, w).real
    h = (s * np.eye(w.size) - np.outer(w, w.conj())) / s**2
    return float(2.0 * np.imag(np.vdot(dw(u), h @ dw(v))))


def random_antihermitian(n, rng):
    A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (A - mc.dagger(A))


def random_projector_tangent(P, rng):
    """V = [X, P] with X anti-Hermitian Gaussian, scaled to unit Frobenius norm."""
    n = P.shape[0]
    for _ in range(100):
        V = comm(random_antihermitian(n, rng), P)
        nv = mc.fro(V)
        if nv > 1e-12:
            return V / nv
    return np.zeros_like(P)  # P = 0 or I: the orbit is a point


def random_projective_tangent(p, rng):
    v = rng.standard_normal(p.size) + 1j * rng.standard_normal(p.size)
    v = horizontal(p, v)
    return v / np.linalg.norm(v)


def project_projector_tangent(Q, V):
    I = np.eye(Q.shape[0])
    return Q @ V @ (I - Q) + (I - Q) @ V @ Q


def _fd(curve, f, h, richardson):
    def D(step):
        plus = f(curve(step))
        minus = f(curve(-step))
        return [(a - b) / (2 * step) for a, b in zip(plus, minus)]

    d1 = D(h)
    if not richardson:
        return d1
    d2 = D(h / 2)
    return [(4 * b - a) / 3 for a, b in zip(d1, d2)]


def pushforward_projectors(f, base, tangents, h=FD_STEP, richardson=True):
    """Tangent map of ``f`` (a map on tuples of projectors) at ``base``.

    Each slot moves along t -> e^{tX} P e^{-tX} with X = [V, P]; the
    difference quotient is projected onto the tangent space at the image.
    """
    Xs = [comm(V, P) for P, V in zip(base, tangents)]

    def curve(t):
        out = []
        for P, X in zip(base, Xs):
            E = expm(t * X)
            out.append(E @ P @ mc.dagger(E))
        return out

    image = f(list(base))
    raw = _fd(curve, f, h, richardson)
    return image, [project_projector_tangent(Q, V) for Q, V in zip(image, raw)]


def pushforward_points(f, base, tangents, h=FD_STEP, richardson=True):
    """Tangent map of ``f`` (a map on tuples of projective points).

    Slots move along t -> [p + t v]; differences are taken between the
    projectors of the images, so the phase convention cannot introduce jumps.
    The horizontal image tangent is V' q.
    """
    def curve(t):
        return [normalize_point(p + t * v) for p, v in zip(base, tangents)]

    image = f(list(base))
    jf = lambda pts: [j_delta(q) for q in f(pts)]  # noqa: E731
    raw = _fd(curve, jf, h, richardson)
    return image, [horizontal(q, V @ q) for q, V in zip(image, raw)]


def weighted_form(kind, base, a, b, weights):
    if kind == "projector":
        return sum(w * omega_orbit(P, V, W) for w, P, V, W in zip(weights, base, a, b))
    return sum(w * omega_fs(p, u, v) for w, p, u, v in zip(weights, base, a, b))


@dataclass
class SymplectoCase:
    """One sampled instance: a map on tuples, its base point and form weights."""
    f: object
    base: list
    w_in: list
    w_out: list
    kind: str  # "projector" or "point"
    tangents: object = None  # optional (a, b) override for graph-restricted domains


@dataclass
class SymplectoReport:
    max_residual: float
    max_residual_plain: float
    trials: int
    resampled: int


def symplecto_residual(case, rng, h=FD_STEP, richardson=True):
    if case.tangents is not None:
        a, b = case.tangents
    elif case.kind == "projector":
        a = [random_projector_tangent(P, rng) for P in case.base]
        b = [random_projector_tangent(P, rng) for P in case.base]
    else:
        a = [random_projective_tangent(p, rng) for p in case.base]
        b = [random_projective_tangent(p, rng) for p in case.base]
    push = pushforward_projectors if case.kind == "projector" else pushforward_points
    image, fa = push(case.f, case.base, a, h, richardson)
    _, fb = push(case.f, case.base, b, h, richardson)
    before = weighted_form(case.kind, case.base, a, b, case.w_in)
    after = weighted_form(case.kind, image, fa, fb, case.w_out)
    return abs(after - before) / (1.0 + abs(before))


def check_symplecto(sampler, trials, seed, h=FD_STEP, max_resample=10):
    """Run ``trials`` seeded instances of ``sampler(rng) -> SymplectoCase``.

    Returns the worst relative residual with and without Richardson refinement;
    inadmissible samples are redrawn (up to ``max_resample`` times per trial)
    and counted.
    """
    worst = worst_plain = 0.0
    resampled = 0
    for t in range(trials):
        rng = make_rng(seed, t)
        for attempt in range(max_resample + 1):
            try:
                case = sampler(rng)
                state = rng.bit_generator.state
                r = symplecto_residual(case, rng, h, richardson=True)
                rng.bit_generator.state = state  # same tangents for the plain stencil
                r0 = symplecto_residual(case, rng, h, richardson=False)
                break
            except ReflectoryError:
                resampled += 1
                if attempt == max_resample:
                    raise
        worst = max(worst, r)
        worst_plain = max(worst_plain, r0)
    return SymplectoReport(worst, worst_plain, trials, resampled)


def u_n_basis(n):
    """Real basis of the anti-Hermitian matrices u(n)."""
    out = []
    for j in range(n):
        E = np.zeros((n, n), dtype=complex)
        E[j, j] = 1j
        out.append(E)
        for k in range(j + 1, n):
            A = np.zeros((n, n), dtype=complex)
            A[j, k], A[k, j] = 1.0, -1.0
            S = np.zeros((n, n), dtype=complex)
            S[j, k] = S[k, j] = 1j
            out += [A, S]
    return out


def graph_form(P, U, V, W):
    """omega^k on the graph {(U Q U^*, Q)} in graph coordinates: omega(UPU*)(UVU*, UWU*) + omega(P)(V, W)."""
    Ud = mc.dagger(U)
    Q = U @ P @ Ud
    return omega_orbit(Q, U @ V @ Ud, U @ W @ Ud) + omega_orbit(P, V, W)


def graph_nondegeneracy(P, U, V):
    """Largest |omega^k(V, W_b)| over the spanning set W_b = [X_b, P] of the graph tangent space."""
    return max(abs(graph_form(P, U, V, comm(X, P))) for X in u_n_basis(P.shape[0]))


def projective_graph_form(p, U, u, v):
    """omega_FS (+) omega_FS on the graph {([U x], [x])} with tangents (U u, u)."""
    return omega_fs(U @ p, U @ u, U @ v) + omega_fs(p, u, v)


def projective_graph_nondegeneracy(p, U, u):
    n = p.size
    best = 0.0
    for j in range(n):
        for c in (1.0, 1j):
            e = np.zeros(n, dtype=complex)
            e[j] = c
            w = horizontal(p, e)
            best = max(best, abs(projective_graph_form(p, U, u, w)))
    return best
