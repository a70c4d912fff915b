import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import fro
from reflectory import loop_group as lg
from reflectory import matrix_core as mc
from reflectory import reflection as rf
from reflectory import sampling as smp
from reflectory.config import make_rng
from reflectory.errors import MirrorCollision, SupportCollision
from reflectory.loop_group import RationalLoopElement as L
from reflectory.yang_baxter import yb_map

N_DIM = 2


def element(rng, alphas, n=N_DIM):
    return L.of(*[(a, mc.random_projector(n, int(rng.integers(1, n)), rng)) for a in alphas])


def elements(seed, sizes, mirror=False, n=N_DIM):
    rng = make_rng(seed)
    a = smp.random_alphas(sum(sizes), rng, mirror=mirror)
    out, i = [], 0
    for s in sizes:
        out.append(element(rng, a[i:i + s], n))
        i += s
    return out, rng


sizes = st.lists(st.integers(1, 2), min_size=2, max_size=3)


def test_empty_is_identity():
    assert np.allclose(L.identity(3)(0.3 + 2j), np.eye(3))
    e = L.identity(N_DIM)
    g, _ = elements(0, [2])
    vt, ut = lg.refactor(e, g[0])
    assert len(ut) == 0 and lg.loop_distance(vt, g[0]) < 1e-15


@given(st.integers(0, 2**31))
def test_multiply_inverse_and_associativity(seed):
    (u, v, w), _ = elements(seed, [2, 1, 2])
    z = 0.7 - 1.9j
    assert fro((u @ lg.inverse(u))(z) - np.eye(N_DIM)) <= 1e-10
    assert fro(((u @ v) @ w)(z) - (u @ (v @ w))(z)) <= 1e-12
    assert fro((u @ v)(z) - u(z) @ v(z)) <= 1e-12
    assert (u @ v).support <= u.support | v.support


@given(st.integers(0, 2**31))
def test_reality(seed):
    (u,), _ = elements(seed, [2])
    z = 1.1 + 0.4j
    assert fro(u(np.conj(z)).conj().T @ u(z) - np.eye(N_DIM)) <= 1e-10


@given(st.integers(0, 2**31))
def test_sigma_identities(seed):
    (u, v), rng = elements(seed, [2, 2], mirror=True)
    U = smp.random_boundary(N_DIM, rng)
    z = -0.6 + 0.8j
    assert fro(lg.sigma_loop(u, U)(z) - U @ u(-np.conj(z)).conj().T @ U) <= 1e-10
    assert lg.loop_distance(lg.sigma_loop(lg.sigma_loop(u, U), U), u) <= 1e-10
    assert lg.loop_distance(lg.sigma_loop(u @ v, U),
                            lg.sigma_loop(v, U) @ lg.sigma_loop(u, U)) <= 1e-10


def test_sigma_single_factor():
    (g,), rng = elements(1, [1], mirror=True)
    U = smp.random_boundary(N_DIM, rng)
    s = lg.sigma_loop(g, U).factors[0]
    assert s.alpha == -np.conj(g.factors[0].alpha)
    assert fro(s.projector - rf.c_u(g.factors[0].projector, U)) < 1e-15


def test_single_factor_refactor_is_yb_map():
    (u, v), _ = elements(2, [1, 1])
    vt, ut = lg.refactor(u, v)
    Q1, Q2 = yb_map(u.factors[0].alpha, u.factors[0].projector,
                    v.factors[0].alpha, v.factors[0].projector)
    assert np.array_equal(vt.factors[0].projector, Q2)
    assert np.array_equal(ut.factors[0].projector, Q1)
    a, b = lg.yb_loop(u, v)
    assert a.factors[0].alpha == u.factors[0].alpha and b.factors[0].alpha == v.factors[0].alpha


@given(st.integers(0, 2**31), st.integers(1, 3), st.integers(1, 3))
def test_partial_action_compatibility(seed, m, k):
    (g, h), _ = elements(seed, [m, k])
    res = lg.refactor(g, h)
    assert res.residual <= 1e-9
    assert lg.loop_distance(g @ h, lg.xi(g, h) @ lg.eta(h, g)) <= 1e-9
    assert lg.divisor(res.v_tilde) == lg.divisor(h)
    assert lg.divisor(res.u_tilde) == lg.divisor(g)


@given(st.integers(0, 2**31))
def test_yb_loop_inverse(seed):
    (u, v), _ = elements(seed, [2, 2])
    a, b = lg.yb_loop(u, v)
    x1, x2 = lg.r21_loop(a, b)
    assert lg.loop_distance(x1, u) <= 1e-9 and lg.loop_distance(x2, v) <= 1e-9


@given(st.integers(0, 2**31), st.lists(st.integers(1, 2), min_size=3, max_size=3))
def test_loop_ybe(seed, sz):
    x, _ = elements(seed, sz)

    def R(st_, i, j):
        st_ = list(st_)
        st_[i], st_[j] = lg.yb_loop(st_[i], st_[j])
        return st_
    lhs = R(R(R(x, 1, 2), 0, 2), 0, 1)
    rhs = R(R(R(x, 0, 1), 0, 2), 1, 2)
    assert max(lg.loop_distance(p, q) for p, q in zip(lhs, rhs)) <= 1e-8


@given(st.integers(0, 2**31))
def test_sigma_compatibility_of_partial_actions(seed):
    (g, h), rng = elements(seed, [2, 1], mirror=True)
    U = smp.random_boundary(N_DIM, rng)
    s = lambda x: lg.sigma_loop(x, U)  # noqa: E731
    assert lg.loop_distance(s(lg.xi(g, h)), lg.eta(s(g), s(h))) <= 1e-9
    assert lg.loop_distance(lg.xi(s(h), s(g)), s(lg.eta(h, g))) <= 1e-9


def test_reflection_single_factor_matches_boundary_refactor():
    (g,), rng = elements(3, [1], mirror=True)
    U = smp.random_boundary(N_DIM, rng)
    f = g.factors[0]
    B = lg.reflection_loop(g, U)
    assert B.factors[0].alpha == -np.conj(f.alpha)
    assert fro(B.factors[0].projector - rf.boundary_refactor(f.alpha, f.projector, U).p1_tilde) <= 1e-12


@given(st.integers(0, 2**31))
def test_reflection_divisor(seed):
    (g,), rng = elements(seed, [2], mirror=True)
    U = np.eye(N_DIM)
    assert lg.divisor(lg.reflection_loop(g, U)) == lg.divisor(lg.sigma_loop(g, U))


def test_mirror_collision():
    P = mc.random_projector(2, 1, 0)
    g = L.of((1 + 1j, P), (-1 + 1j, P))
    with pytest.raises(MirrorCollision):
        lg.reflection_loop(g, np.eye(2))
    with pytest.raises(SupportCollision):
        lg.refactor(L.of((1 + 1j, P)), L.of((1 - 1j, P)))


def test_single_factor_reflection_equation_matches_projector_level():
    (g1, g2), rng = elements(4, [1, 1], mirror=True, n=3)
    U = smp.random_boundary(3, rng)
    ch = lg.reflection_chains(g1, g2, U)
    lhs, rhs = rf.reflection_sides(g1.factors[0].alpha, g2.factors[0].alpha,
                                   g1.factors[0].projector, g2.factors[0].projector, U)
    for el, (_, P) in zip(ch.lhs + ch.rhs, lhs + rhs):
        assert fro(el.factors[0].projector - P) <= 1e-9


@given(st.integers(0, 2**31), st.integers(1, 2), st.integers(1, 2))
def test_loop_reflection_equation_and_uniqueness(seed, m, k):
    (g1, g2), rng = elements(seed, [m, k], mirror=True)
    U = smp.random_boundary(N_DIM, rng)
    assert lg.check_loop_reflection_equation(g1, g2, U) <= 1e-8
    assert lg.uniqueness_residual(g1, g2, U) <= 1e-9


def test_divisor_multiplicity_is_rank():
    P2 = mc.random_projector(3, 2, 1)
    d = dict(lg.divisor(L.of((1 + 1j, P2))))
    assert d == {1 + 1j: 2, 1 - 1j: -2}


def test_reorder_preserves_product():
    (g,), _ = elements(5, [3])
    h = lg.reorder(g, [2, 0, 1])
    assert [f.alpha for f in h.factors] == [g.factors[i].alpha for i in (2, 0, 1)]
    assert lg.loop_distance(g, h) <= 1e-9


def test_json_roundtrip():
    (g,), _ = elements(6, [2])
    h = lg.loop_from_json(lg.loop_to_json(g))
    assert lg.loop_distance(g, h) == 0.0
