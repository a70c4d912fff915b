"""Seeded verification suites. Each trial draws from its own stream
``make_rng(seed, trial, attempt)`` so results do not depend on evaluation order."""

import os
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from reflectory import loop_group as lg
from reflectory import matrix_core as mc
from reflectory import projective as pj
from reflectory import reflection as rf
from reflectory import sampling as smp
from reflectory import schedules
from reflectory import symplectic as sy
from reflectory import yang_baxter as yb
from reflectory.config import make_rng
from reflectory.errors import ReflectoryError
from reflectory.simple_elements import tau

SCHEMA = 1
MAX_ATTEMPTS = 10

ALGEBRAIC_TOL = 1e-9
SYMPLECTIC_TOL = 1e-5


def _rank(rng, n, fixed):
    return int(fixed) if fixed is not None else int(rng.integers(1, n))


def _loop_element(rng, n, alphas, k):
    """Product of simple elements at the given parameters."""
    return lg.RationalLoopElement.of(
        *[(a, mc.random_projector(n, _rank(rng, n, k), rng)) for a in alphas])


def trial_ybe(rng, n, k, l):
    a = smp.random_alphas(3, rng)
    Ps = [mc.random_projector(n, _rank(rng, n, r), rng) for r in (k, l, None)]
    return yb.check_ybe(*a, *Ps)


def trial_reflection(rng, n, k, l):
    a = smp.random_alphas(2, rng, mirror=True)
    U = smp.random_boundary(n, rng)
    P1 = mc.random_projector(n, _rank(rng, n, k), rng)
    P2 = mc.random_projector(n, _rank(rng, n, l), rng)
    p1, p2 = smp.random_point(n, rng), smp.random_point(n, rng)
    return max(rf.check_reflection_equation(a[0], a[1], P1, P2, U),
               pj.check_projective_reflection_equation(a[0], a[1], p1, p2, U))


def trial_involution(rng, n, k, l):
    a = smp.random_alphas(1, rng, mirror=True)[0]
    U = smp.random_boundary(n, rng)
    P = mc.random_projector(n, _rank(rng, n, k), rng)
    p = smp.random_point(n, rng)
    back = rf.b_map(tau(a), rf.b_map(a, P, U), U)
    pback = pj.b_tilde(tau(a), pj.b_tilde(a, p, U), U)
    return max(mc.fro(back - P), pj.proj_distance(pback, p))


def symplectic_cases(n, k, l):
    """Samplers for the symplectomorphism claims, keyed by a short label."""
    def s_r(rng):
        a = smp.random_alphas(2, rng)
        base = [mc.random_projector(n, _rank(rng, n, k), rng),
                mc.random_projector(n, _rank(rng, n, l), rng)]
        w = [-2 * x.imag for x in a]
        f = lambda b: list(yb.yb_map(a[0], b[0], a[1], b[1], check=False))  # noqa: E731
        return sy.SymplectoCase(f, base, w, w, "projector")

    def s_b(rng):
        a = smp.random_alphas(1, rng, mirror=True)[0]
        U = smp.random_boundary(n, rng)
        base = [mc.random_projector(n, _rank(rng, n, k), rng)]
        return sy.SymplectoCase(lambda b: [rf.b_map(a, b[0], U)], base, [1], [1], "projector")

    def s_bt(rng):
        a = smp.random_alphas(1, rng, mirror=True)[0]
        U = smp.random_boundary(n, rng)
        return sy.SymplectoCase(lambda b: [pj.b_tilde(a, b[0], U)],
                                [smp.random_point(n, rng)], [1], [1], "point")

    def s_pi(rng):
        N = int(rng.integers(1, 4))
        ens = smp.random_ensemble(N, n, rng)

        def f(b):
            return pj.n_body_reflection(pj.PolarizationEnsemble(ens.params, b, ens.boundary))
        w = [-2 * a.imag for a in ens.params]
        return sy.SymplectoCase(f, list(ens.points), w, w, "point")

    return {"R": s_r, "B": s_b, "B~": s_bt, "Pi": s_pi}


def trial_symplectic(rng, n, k, l):
    worst = 0.0
    for sampler in symplectic_cases(n, k, l).values():
        case = sampler(rng)
        worst = max(worst, sy.symplecto_residual(case, rng))
    return worst


def trial_loop_ybe(rng, n, k, l):
    sizes = rng.integers(1, 3, 3)
    a = smp.random_alphas(int(sizes.sum()), rng)
    cuts = np.cumsum(sizes)[:-1]
    x = [_loop_element(rng, n, part, k) for part in np.split(np.array(a), cuts)]

    def R(st, i, j):
        st = list(st)
        st[i], st[j] = lg.yb_loop(st[i], st[j])
        return st
    lhs = R(R(R(x, 1, 2), 0, 2), 0, 1)
    rhs = R(R(R(x, 0, 1), 0, 2), 1, 2)
    return max(lg.loop_distance(p, q) for p, q in zip(lhs, rhs))


def _loop_pair(rng, n, k, l):
    s1, s2 = (int(s) for s in rng.integers(1, 3, 2))
    a = smp.random_alphas(s1 + s2, rng, mirror=True)
    U = smp.random_boundary(n, rng)
    return _loop_element(rng, n, a[:s1], k), _loop_element(rng, n, a[s1:], l), U


def trial_loop_reflection(rng, n, k, l):
    g1, g2, U = _loop_pair(rng, n, k, l)
    return lg.check_loop_reflection_equation(g1, g2, U)


def trial_uniqueness(rng, n, k, l):
    g1, g2, U = _loop_pair(rng, n, k, l)
    return lg.uniqueness_residual(g1, g2, U)


def trial_consistency(rng, n, k, l):
    N = int(rng.integers(1, 5))
    ens = smp.random_ensemble(N, n, rng)
    pi = pj.n_body_reflection(ens)
    alt = [pj.n_body_reflection(ens, schedules.bubble(N)),
           pj.n_body_reflection(ens, schedules.random_reflection(N, rng))]
    worst = max(pj.proj_distance(p, q) for other in alt for p, q in zip(pi, other))
    oracle = lg.n_body_via_loop(ens.params, [pj.j_delta(p) for p in ens.points], ens.boundary)
    worst = max(worst, max(mc.fro(pj.j_delta(p) - Q) for p, Q in zip(pi, oracle)))
    return max(worst, pj.scattering_relation_residual(ens))


SUITES = {
    "ybe": (trial_ybe, ALGEBRAIC_TOL),
    "reflection": (trial_reflection, ALGEBRAIC_TOL),
    "involution": (trial_involution, ALGEBRAIC_TOL),
    "symplectic": (trial_symplectic, SYMPLECTIC_TOL),
    "loop-ybe": (trial_loop_ybe, ALGEBRAIC_TOL),
    "loop-reflection": (trial_loop_reflection, ALGEBRAIC_TOL),
    "uniqueness": (trial_uniqueness, ALGEBRAIC_TOL),
    "consistency": (trial_consistency, ALGEBRAIC_TOL),
}


def thread_cap():
    try:
        return max(1, int(os.environ.get("REFLECTORY_THREADS", "1")))
    except ValueError:
        return 1


def _one(fn, seed, trial, n, k, l):
    for attempt in range(MAX_ATTEMPTS):
        try:
            return float(fn(make_rng(seed, trial, attempt), n, k, l)), attempt
        except ReflectoryError:
            continue
    return float("inf"), MAX_ATTEMPTS


def run_suite(name, n=3, k=None, l=None, trials=20, seed=0, tol=None, timing=False):
    """Run a suite and return its report dict (schema 1)."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    if n < 2:
        raise ValueError("n must be at least 2")
    for r in (k, l):
        if r is not None and not 1 <= r <= n - 1:
            raise ValueError(f"rank {r} outside 1..{n - 1}")
    fn, default_tol = SUITES[name]
    tol = default_tol if tol is None else float(tol)
    t0 = time.perf_counter()
    args = [(fn, seed, t, n, k, l) for t in range(trials)]
    workers = min(thread_cap(), max(trials, 1))
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            results = list(ex.map(lambda a: _one(*a), args))
    else:
        results = [_one(*a) for a in args]
    residuals = [r for r, _ in results]
    report = {
        "schema": SCHEMA,
        "suite": name,
        "params": {"n": n, "k": k, "l": l, "trials": trials, "seed": seed, "tol": tol},
        "trials_run": trials,
        "failures": sum(1 for r in residuals if not r <= tol),
        "resampled": sum(a for _, a in results),
        "max_residual": max(residuals) if residuals else 0.0,
    }
    if timing:
        report["elapsed_ms"] = (time.perf_counter() - t0) * 1e3
    return report
