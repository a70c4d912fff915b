"""Seeded random data: spectral parameters, projectors, polarizations, ensembles."""

import numpy as np

from reflectory import matrix_core as mc
from reflectory.config import SAMPLE_RANGE, SAMPLE_SEP, make_rng
from reflectory.simple_elements import tau

MAX_TRIES = 1000


def random_alpha(rng):
    """|Re| and |Im| uniform in SAMPLE_RANGE with independent random signs."""
    lo, hi = SAMPLE_RANGE
    re, im = rng.uniform(lo, hi, 2)
    sr, si = rng.choice([-1.0, 1.0], 2)
    return complex(sr * re, si * im)


def _points(alphas, mirror):
    pts = []
    for a in alphas:
        pts += [a, complex(np.conj(a))]
        if mirror:
            pts += [tau(a), complex(np.conj(tau(a)))]
    return pts


def random_alphas(count, rng, mirror=False, sep=SAMPLE_SEP):
    """``count`` parameters whose supports (and mirror supports if ``mirror``)
    are pairwise separated by more than ``sep``, self-pairs included."""
    out = []
    for _ in range(MAX_TRIES * max(count, 1)):
        if len(out) == count:
            break
        a = random_alpha(rng)
        own = _points([a], mirror)
        # the point must also keep its own mirror image at a distance
        gaps = [abs(x - y) for i, x in enumerate(own) for y in own[i + 1:]]
        if gaps and min(gaps) <= sep:
            continue
        others = _points(out, mirror)
        if others and min(abs(x - y) for x in own for y in others) <= sep:
            continue
        out.append(a)
    if len(out) < count:
        raise RuntimeError(f"could not place {count} separated parameters")
    return out


def random_point(n, rng):
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    from reflectory.projective import normalize_point
    return normalize_point(v)


def random_projectors(ranks, n, rng):
    return [mc.random_projector(n, k, rng) for k in ranks]


def random_boundary(n, rng, subset=None):
    return mc.random_hermitian_unitary(n, rng, subset)


def random_ensemble(N, n, seed, U=None, subset=None):
    from reflectory.projective import PolarizationEnsemble
    rng = make_rng(seed)
    alphas = random_alphas(N, rng, mirror=True)
    points = [random_point(n, rng) for _ in range(N)]
    if U is None:
        U = random_boundary(n, rng, subset)
    return PolarizationEnsemble(alphas, points, U)
