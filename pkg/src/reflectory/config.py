"""Numerical tolerances, margins and the random-number stream used everywhere."""

import numpy as np

TOL_STRUCT = 1e-10  # Frobenius tolerance for structural invariants
TOL_EVAL = 1e-10
TOL_REFAC = 1e-9
REPAIR_WINDOW = 1e-6  # eigenvalues this close to 0/1 are snapped during repair
RCOND_MIN = 1e-12

EPS_AXIS = 1e-8
EPS_POLE = 1e-8
EPS_SEP = 1e-6

# Random parameters are drawn with a much larger separation than EPS_SEP so that
# the refactorization matrices stay well conditioned in seeded suites.
SAMPLE_SEP = 0.1
SAMPLE_RANGE = (0.2, 3.0)

N_SAMPLE_Z = 8
SAMPLE_Z_MARGIN = 0.05

FD_STEP = 1e-5


def make_rng(seed, *stream):
    """Philox (counter-based, 64-bit) generator keyed by ``seed`` and an optional stream path.

    ``make_rng(seed, trial)`` gives independent per-trial streams, so trials can be
    evaluated in any order or in parallel with identical results.
    """
    if isinstance(seed, np.random.Generator):
        if stream:
            raise TypeError("stream keys require an integer seed")
        return seed
    ss = np.random.SeedSequence([int(seed), *[int(s) for s in stream]])
    return np.random.Generator(np.random.Philox(ss))


def _sample_points():
    rng = make_rng(20240917)
    pts = rng.uniform(-3.0, 3.0, 64) + 1j * rng.uniform(-3.0, 3.0, 64)
    return pts


SAMPLE_CANDIDATES = _sample_points()


def sample_z(avoid, count=N_SAMPLE_Z, margin=SAMPLE_Z_MARGIN):
    """Deterministic evaluation points bounded away from every point in ``avoid``."""
    avoid = np.asarray(list(avoid), dtype=complex)
    out = []
    for z in SAMPLE_CANDIDATES:
        if avoid.size == 0 or np.min(np.abs(avoid - z)) > margin:
            out.append(z)
            if len(out) == count:
                break
    if len(out) < count:
        # Far-field fallback: large-modulus points cannot sit near a bounded pole set.
        radius = 10.0 + (np.max(np.abs(avoid)) if avoid.size else 0.0)
        k = 0
        while len(out) < count:
            out.append(radius * np.exp(1j * (0.37 + 0.71 * k)))
            k += 1
    return np.array(out, dtype=complex)
