"""Elements of K_rat as explicit ordered products of simple elements.

Refactorization ``uv = xi_u(v) eta_v(u)`` is computed constructively: each
factor of v is moved leftward across every factor of u by pairwise swaps, and
each swap is one application of the pairwise refactorization. Equality of two
elements is decided by evaluating both at sample points away from all poles.
"""

from dataclasses import dataclass

import numpy as np

from reflectory import matrix_core as mc
from reflectory._core import kernels
from reflectory.config import TOL_REFAC, sample_z
from reflectory.errors import MirrorCollision
from reflectory.simple_elements import (SimpleElement, invert_simple, require_disjoint,
                                        sigma_simple, simple_from_json, simple_to_json)
from reflectory.yang_baxter import yb_map


@dataclass(frozen=True, eq=False)
class RationalLoopElement:
    factors: tuple
    n: int

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for g in self.factors:
            if g.n != self.n:
                raise ValueError(f"factor of size {g.n} in a product of size {self.n}")

    @classmethod
    def identity(cls, n):
        return cls((), n)

    @classmethod
    def of(cls, *pairs):
        """Build from (alpha, P) pairs."""
        fs = tuple(SimpleElement(a, P) for a, P in pairs)
        return cls(fs, fs[0].n)

    def __len__(self):
        return len(self.factors)

    @property
    def alphas(self):
        return np.array([g.alpha for g in self.factors], dtype=complex)

    @property
    def projectors(self):
        if not self.factors:
            return np.zeros((0, self.n, self.n), dtype=complex)
        return np.stack([g.projector for g in self.factors])

    @property
    def support(self):
        pts = set()
        for g in self.factors:
            pts |= {g.alpha, complex(np.conj(g.alpha))}
        return frozenset(pts)

    def __call__(self, z):
        return kernels.eval_product(self.alphas, self.projectors, complex(z))

    def __matmul__(self, other):
        return multiply(self, other)

    def __repr__(self):
        body = ", ".join(f"{g.alpha:.3g}/r{g.rank}" for g in self.factors)
        return f"RationalLoopElement(n={self.n}, [{body}])"


def multiply(u, v):
    if u.n != v.n:
        raise ValueError("size mismatch")
    return RationalLoopElement(u.factors + v.factors, u.n)


def inverse(g):
    return RationalLoopElement(tuple(invert_simple(f) for f in reversed(g.factors)), g.n)


def divisor(g):
    """Merged divisor: zero alpha with multiplicity +rank(P), pole conj(alpha) with -rank(P)."""
    acc = {}
    for f in g.factors:
        k = f.rank
        acc[f.alpha] = acc.get(f.alpha, 0) + k
        ab = complex(np.conj(f.alpha))
        acc[ab] = acc.get(ab, 0) - k
    return sorted(((z, m) for z, m in acc.items() if m != 0), key=lambda t: (t[0].real, t[0].imag))


def sigma_loop(g, U):
    """sigma(g)(z) = U g(-conj z)^* U^*: reversed factors, each mapped by sigma_simple."""
    return RationalLoopElement(tuple(sigma_simple(f, U) for f in reversed(g.factors)), g.n)


def loop_distance(a, b, zs=None):
    """Max Frobenius distance of a(z) and b(z) over sample points avoiding both supports."""
    if zs is None:
        zs = sample_z(a.support | b.support)
    return kernels.product_discrepancy(a.alphas, a.projectors, b.alphas, b.projectors,
                                       np.asarray(zs, dtype=complex))


def loop_equal(a, b, tol=TOL_REFAC):
    return loop_distance(a, b) <= tol


def identity_distance(g):
    return loop_distance(g, RationalLoopElement.identity(g.n))


@dataclass(frozen=True, eq=False)
class Refactorization:
    v_tilde: RationalLoopElement
    u_tilde: RationalLoopElement
    residual: float

    def __iter__(self):
        return iter((self.v_tilde, self.u_tilde))


def _swap(left, right):
    """g_l g_r = g_r' g_l' for simple elements; returns (g_r', g_l')."""
    Ql, Qr = yb_map(left.alpha, left.projector, right.alpha, right.projector, check=False)
    return SimpleElement(right.alpha, Qr), SimpleElement(left.alpha, Ql)


def refactor(u, v, check=True):
    """Solve uv = v~ u~ with (v~) = (v) and (u~) = (u)."""
    require_disjoint(u.support, v.support)
    fs = list(u.factors) + list(v.factors)
    m = len(u)
    for j in range(len(v)):
        # the j-th factor of v sits at position m + j; walk it left to position j
        for pos in range(m + j, j, -1):
            fs[pos - 1], fs[pos] = _swap(fs[pos - 1], fs[pos])
    vt = RationalLoopElement(fs[:len(v)], u.n)
    ut = RationalLoopElement(fs[len(v):], u.n)
    residual = loop_distance(multiply(u, v), multiply(vt, ut)) if check else 0.0
    return Refactorization(vt, ut, residual)


def xi(g, h):
    """xi_g(h): the left factor of gh = xi_g(h) eta_h(g)."""
    return refactor(g, h, check=False).v_tilde


def eta(h, g):
    """eta_h(g): the right factor of gh = xi_g(h) eta_h(g)."""
    return refactor(g, h, check=False).u_tilde


def yb_loop(u, v):
    """R(u, v) = (eta_v(u), xi_u(v))."""
    vt, ut = refactor(u, v, check=False)
    return ut, vt


def r21_loop(x1, x2):
    """R21(x1, x2) = (xi_{x2}(x1), eta_{x1}(x2))."""
    a, b = refactor(x2, x1, check=False)
    return a, b


def require_mirror_free(g, U=None):
    s = g.support
    require_disjoint(s, frozenset(-z for z in s), what="support and its mirror",
                     exc=MirrorCollision)


def reflection_loop(g, U):
    """B(g) = eta_g(sigma(g)), from sigma(g) g = xi_{sigma(g)}(g) eta_g(sigma(g))."""
    require_mirror_free(g)
    return refactor(sigma_loop(g, U), g, check=False).u_tilde


def reorder(g, target):
    """Refactor g so that its factors appear in the parameter order ``target``
    (a permutation of range(len(g)) listing current factor indices)."""
    fs = list(g.factors)
    order = list(range(len(fs)))
    rank = {idx: r for r, idx in enumerate(target)}
    changed = True
    while changed:
        changed = False
        for a in range(len(fs) - 1):
            if rank[order[a]] > rank[order[a + 1]]:
                fs[a], fs[a + 1] = _swap(fs[a], fs[a + 1])
                order[a], order[a + 1] = order[a + 1], order[a]
                changed = True
    return RationalLoopElement(fs, g.n)


@dataclass(frozen=True, eq=False)
class ReflectionChains:
    lhs: tuple          # (sigma(l1), sigma(l2))
    rhs: tuple          # (sigma(u1), sigma(u2))
    l1: RationalLoopElement
    l2: RationalLoopElement
    u1: RationalLoopElement
    u2: RationalLoopElement


def reflection_chains(g1, g2, U):
    """Both sides of B1 R21 B2 R12 = R21 B2 R12 B1 via the explicit factor chains."""
    require_disjoint(g1.support, g2.support)
    require_mirror_free(g1)
    require_mirror_free(g2)
    require_disjoint(g1.support, frozenset(-z for z in g2.support),
                     what="mirror supports", exc=MirrorCollision)
    s = lambda x: sigma_loop(x, U)  # noqa: E731

    h2, h1 = refactor(g1, g2, check=False)
    j2 = refactor(s(h2), h2, check=False).v_tilde
    k1, s_l2 = refactor(s(j2), h1, check=False)
    l2 = s(s_l2)
    l1 = refactor(s(k1), k1, check=False).v_tilde

    r1 = refactor(s(g1), g1, check=False).v_tilde
    s1, s_s2 = refactor(s(g2), r1, check=False)
    s2 = s(s_s2)
    t2 = refactor(s(s2), s2, check=False).v_tilde
    u2, u1 = refactor(s1, t2, check=False)
    return ReflectionChains((s(l1), s(l2)), (s(u1), s(u2)), l1, l2, u1, u2)


def check_loop_reflection_equation(g1, g2, U):
    ch = reflection_chains(g1, g2, U)
    return max(loop_distance(a, b) for a, b in zip(ch.lhs, ch.rhs))


def uniqueness_residual(g1, g2, U):
    """Distance of x = (l2 l1)^-1 (u2 u1) from the identity."""
    ch = reflection_chains(g1, g2, U)
    x = multiply(inverse(multiply(ch.l2, ch.l1)), multiply(ch.u2, ch.u1))
    return identity_distance(x)


def n_body_via_loop(alphas, projectors, U):
    """Oracle for the N-body reflection map: solve sigma(G) G = G+ sigma(G+) directly.

    G = g_1 ... g_N, G+ = g_N+ ... g_1+. Returns [U P_i+ U^*] for i = 1..N.
    """
    G = RationalLoopElement.of(*zip(alphas, projectors))
    require_mirror_free(G)
    sG = sigma_loop(G, U)
    res = refactor(sG, G, check=False)
    # eta carries the mirror parameters in the order tau(a_N) .. tau(a_1);
    # sigma(G+) needs tau(a_1) .. tau(a_N)
    N = len(G)
    sGp = reorder(res.u_tilde, list(range(N - 1, -1, -1)))
    return [0.5 * (f.projector + mc.dagger(f.projector)) for f in sGp.factors]


def loop_to_json(g):
    return {"factors": [simple_to_json(f) for f in g.factors]}


def loop_from_json(obj, n=None):
    fs = [simple_from_json(f) for f in obj["factors"]]
    if not fs and n is None:
        raise ValueError("empty factor list needs an explicit size")
    return RationalLoopElement(fs, fs[0].n if fs else n)
