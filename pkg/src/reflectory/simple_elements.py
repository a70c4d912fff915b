"""Simple elements g_{alpha,P}(z) = I + (conj(alpha)-alpha)/(z-conj(alpha)) P of the
rational loop group, and the boundary involution sigma acting on them.

Spectral parameters are plain Python complex numbers; ``tau`` is the reflection
z -> -conj(z) that exchanges a soliton with its mirror image.
"""

from dataclasses import dataclass

import numpy as np

from reflectory import matrix_core as mc
from reflectory.config import EPS_AXIS, EPS_POLE, EPS_SEP
from reflectory.errors import AxisError, PoleError, SupportCollision


def tau(alpha):
    return complex(-np.conj(alpha))


def check_parameter(alpha, mirror=False, eps=EPS_AXIS):
    """Validate a spectral parameter. ``mirror=True`` also excludes the imaginary axis."""
    alpha = complex(alpha)
    if not np.isfinite(alpha):
        raise ValueError(f"non-finite spectral parameter {alpha}")
    if abs(alpha.imag) <= eps:
        raise AxisError(f"spectral parameter {alpha} is on the real axis")
    if mirror and abs(alpha.real) <= eps:
        raise AxisError(f"spectral parameter {alpha} is on the imaginary axis")
    return alpha


@dataclass(frozen=True, eq=False)
class SimpleElement:
    alpha: complex
    projector: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_parameter(self.alpha))
        object.__setattr__(self, "projector", mc.as_matrix(self.projector))

    @property
    def n(self):
        return self.projector.shape[0]

    @property
    def rank(self):
        return mc.projector_rank(self.projector)

    def __call__(self, z):
        return eval_simple(self, z)

    def __repr__(self):
        return f"SimpleElement(alpha={self.alpha!r}, n={self.n}, rank={self.rank})"


def eval_simple(g, z):
    ab = np.conj(g.alpha)
    z = complex(z)
    if abs(z - ab) <= EPS_POLE:
        raise PoleError(f"z={z} is at the pole {ab}")
    return np.eye(g.n, dtype=complex) + ((ab - g.alpha) / (z - ab)) * g.projector


def invert_simple(g):
    """Pointwise inverse: z -> I + (alpha-conj(alpha))/(z-alpha) P, i.e. the factor at conj(alpha)."""
    return SimpleElement(complex(np.conj(g.alpha)), g.projector)


def sigma_simple(g, U):
    """sigma(g)(z) = U g(-conj z)^* U^*, which is the simple element at -conj(alpha) with U P U^*."""
    check_parameter(g.alpha, mirror=True)
    Q = U @ g.projector @ mc.dagger(U)
    return SimpleElement(tau(g.alpha), 0.5 * (Q + mc.dagger(Q)))


def support_simple(g):
    return frozenset({g.alpha, complex(np.conj(g.alpha))})


def support_distance(s1, s2):
    """Minimum pairwise distance between two finite point sets (inf if either is empty)."""
    a = np.fromiter(s1, dtype=complex)
    b = np.fromiter(s2, dtype=complex)
    if a.size == 0 or b.size == 0:
        return float("inf")
    return float(np.min(np.abs(a[:, None] - b[None, :])))


def disjoint(s1, s2, eps=EPS_SEP):
    return support_distance(s1, s2) > eps


def require_disjoint(s1, s2, eps=EPS_SEP, what="supports", exc=SupportCollision):
    d = support_distance(s1, s2)
    if not d > eps:
        raise exc(f"{what} {sorted(s1, key=_key)} and {sorted(s2, key=_key)} "
                  f"are within {d:.3g} (margin {eps})", pair=(s1, s2))


def _key(z):
    return (z.real, z.imag)


def simple_to_json(g):
    return {"alpha": [g.alpha.real, g.alpha.imag],
            "projector": mc.matrix_to_json(g.projector)}


def simple_from_json(obj):
    re, im = obj["alpha"]
    return SimpleElement(complex(re, im), mc.matrix_from_json(obj["projector"]))
