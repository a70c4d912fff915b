import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import boundary_oracle, fro
from reflectory import matrix_core as mc
from reflectory import projective as pj
from reflectory import reflection as rf
from reflectory import sampling as smp
from reflectory.config import make_rng
from reflectory.errors import AdmissibilityError, AxisError, MirrorCollision, RankError
from reflectory.simple_elements import tau
from reflectory.yang_baxter import yb_map

E1 = np.diag([1, 0]).astype(complex)
HALF = 0.5 * np.ones((2, 2), dtype=complex)
Z = np.diag([1, -1]).astype(complex)


def instance(seed, n=3):
    rng = make_rng(seed)
    a = smp.random_alphas(1, rng, mirror=True)[0]
    U = smp.random_boundary(n, rng)
    P = mc.random_projector(n, int(rng.integers(1, n)), rng)
    return a, P, U, rng


def test_boundary_trivial_cases():
    P = mc.random_projector(3, 1, 0)
    bp = rf.boundary_refactor(1 + 1j, P, np.eye(3))
    assert fro(bp.p1_tilde - P) < 1e-12 and fro(bp.p2_tilde - P) < 1e-12
    bp = rf.boundary_refactor(1 + 1j, E1, Z)
    assert fro(bp.p1_tilde - E1) < 1e-12 and fro(bp.p2_tilde - E1) < 1e-12


def test_boundary_worked_example():
    bp = rf.boundary_refactor(1 + 1j, HALF, Z)
    assert bp.residual <= 1e-10
    assert fro(bp.p1_tilde - Z @ bp.p2_tilde @ Z) <= 1e-12
    minus = pj.j_delta(np.array([1, -1]))
    assert fro(rf.b_map(1 + 1j, HALF, Z) - minus) < 1e-12


@given(st.integers(0, 2**31))
def test_b_map_matches_kernel_oracle(seed):
    a, P, U, _ = instance(seed)
    assert fro(rf.b_map(a, P, U) - boundary_oracle(a, P, U)) <= 1e-9


@given(st.integers(0, 2**31), st.integers(2, 4))
def test_involution(seed, n):
    a, P, U, _ = instance(seed, n)
    assert fro(rf.b_map(tau(a), rf.b_map(a, P, U), U) - P) <= 1e-9


@given(st.integers(0, 2**31))
def test_graph_invariance(seed):
    a, P, U, _ = instance(seed)
    Q1, Q2 = yb_map(tau(a), rf.c_u(P, U), a, P)
    assert fro(Q1 - rf.c_u(Q2, U)) <= 1e-9


@given(st.integers(0, 2**31))
def test_conjugacy_with_reduced_map(seed):
    a, P, U, _ = instance(seed)
    assert fro(rf.b_by_conjugacy(a, P, U) - rf.b_map(a, P, U)) <= 1e-9


@given(st.integers(0, 2**31))
def test_reduced_map_on_graph(seed):
    a, P, U, _ = instance(seed)
    first, second = rf.reduced_yb_on_graph(a, P, U)
    assert fro(second - rf.c_u(first, U)) == 0.0
    # oracle: the unrestricted R(tau a, a) applied to the graph point
    Q1, Q2 = rf.graph_yb(a, rf.graph_embed(P, U))
    assert fro(first - Q1) <= 1e-9 and fro(second - Q2) <= 1e-9


def test_reduced_map_identity_boundary():
    P = mc.random_projector(3, 2, 8)
    first, second = rf.reduced_yb_on_graph(1 - 2j, P, np.eye(3))
    assert fro(first - P) < 1e-12 and fro(second - P) < 1e-12


@given(st.integers(0, 2**31), st.sampled_from([(1, 1), (1, 2), (2, 1), (2, 2)]))
def test_reflection_equation(seed, ranks):
    rng = make_rng(seed)
    a1, a2 = smp.random_alphas(2, rng, mirror=True)
    U = smp.random_boundary(3, rng)
    P1, P2 = (mc.random_projector(3, k, rng) for k in ranks)
    assert rf.check_reflection_equation(a1, a2, P1, P2, U) <= 1e-9


def test_reflection_equation_identity_boundary():
    P1, P2 = mc.random_projector(3, 1, 1), mc.random_projector(3, 2, 2)
    assert rf.check_reflection_equation(1 + 1j, -2 + 0.5j, P1, P2, np.eye(3)) <= 1e-9


@given(st.integers(0, 2**31))
def test_rank_one_matches_projective_level(seed):
    rng = make_rng(seed)
    a1, a2 = smp.random_alphas(2, rng, mirror=True)
    U = smp.random_boundary(3, rng)
    p1, p2 = smp.random_point(3, rng), smp.random_point(3, rng)
    lhs, rhs = rf.reflection_sides(a1, a2, pj.j_delta(p1), pj.j_delta(p2), U)
    plhs, prhs = pj.projective_reflection_sides(a1, a2, p1, p2, U)
    for (_, P), (_, p) in zip(lhs + rhs, plhs + prhs):
        assert fro(P - pj.j_delta(p)) <= 1e-9


def test_errors():
    with pytest.raises(AxisError):
        rf.b_map(2j, E1, Z)
    with pytest.raises(RankError):
        rf.b_map(1 + 1j, np.eye(2), Z, strict=True)
    assert fro(rf.b_map(1 + 1j, np.eye(2), Z) - np.eye(2)) < 1e-12
    with pytest.raises(MirrorCollision):
        rf.check_reflection_equation(1 + 1j, -1 + 1j, E1, HALF, Z)
    with pytest.raises(AdmissibilityError):
        rf.require_ensemble_admissible([1 + 1j, -1 + 1j])


def test_mixed_rank_n_body_matches_projective():
    ens = smp.random_ensemble(3, 3, 11)
    projs = rf.n_body_reflection_projectors(ens.params, [pj.j_delta(p) for p in ens.points],
                                            ens.boundary)
    for P, p in zip(projs, pj.n_body_reflection(ens)):
        assert fro(P - pj.j_delta(p)) <= 1e-9
