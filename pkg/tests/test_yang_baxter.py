import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import fro, refactor_oracle
from reflectory import matrix_core as mc
from reflectory import sampling as smp
from reflectory.config import make_rng
from reflectory.errors import SupportCollision
from reflectory.yang_baxter import check_ybe, r21_map, swap_pair, yb_map

E1 = np.diag([1, 0]).astype(complex)
HALF = 0.5 * np.ones((2, 2), dtype=complex)


def random_instance(seed, n):
    rng = make_rng(seed)
    a1, a2 = smp.random_alphas(2, rng)
    k, l = (int(x) for x in rng.integers(1, n, 2))
    return a1, a2, mc.random_projector(n, k, rng), mc.random_projector(n, l, rng)


def test_equal_projectors_fixed():
    P = mc.random_projector(3, 2, 4)
    Q1, Q2 = yb_map(1 + 1j, P, -2 + 0.5j, P)
    assert fro(Q1 - P) < 1e-12 and fro(Q2 - P) < 1e-12


def test_identity_second_projector():
    P = mc.random_projector(3, 1, 2)
    Q1, Q2 = yb_map(1 + 1j, P, 2 + 1j, np.eye(3))
    assert fro(Q1 - P) < 1e-12 and fro(Q2 - np.eye(3)) < 1e-12


def test_worked_example_against_residue_oracle():
    r = yb_map(1 + 1j, E1, 2 + 1j, HALF)
    assert r.residual <= 1e-10
    Qa, Qb = refactor_oracle(1 + 1j, E1, 2 + 1j, HALF)
    assert fro(r.p1_tilde - Qa) < 1e-12 and fro(r.p2_tilde - Qb) < 1e-12


@given(st.integers(0, 2**31), st.integers(2, 4))
def test_matches_kernel_oracle(seed, n):
    a1, a2, P1, P2 = random_instance(seed, n)
    r = yb_map(a1, P1, a2, P2)
    Qa, Qb = refactor_oracle(a1, P1, a2, P2)
    assert fro(r.p1_tilde - Qa) <= 1e-9 and fro(r.p2_tilde - Qb) <= 1e-9
    assert r.residual <= 1e-9
    assert np.trace(r.p1_tilde).real == pytest.approx(np.trace(P1).real, abs=1e-10)
    assert np.trace(r.p2_tilde).real == pytest.approx(np.trace(P2).real, abs=1e-10)


@given(st.integers(0, 2**31), st.integers(2, 4))
def test_r21_inverts_r(seed, n):
    a1, a2, P1, P2 = random_instance(seed, n)
    Q1, Q2 = yb_map(a1, P1, a2, P2)
    B1, B2 = r21_map(a2, a1, Q1, Q2)
    assert max(fro(B1 - P1), fro(B2 - P2)) <= 1e-9


@given(st.integers(0, 2**31), st.integers(2, 4))
def test_r21_is_conjugate_of_swapped_r(seed, n):
    a1, a2, P1, P2 = random_instance(seed, n)
    direct = r21_map(a2, a1, P1, P2)
    S1, S2 = swap_pair((P1, P2))
    via = swap_pair(tuple(yb_map(a2, S1, a1, S2)))
    assert max(fro(x - y) for x, y in zip(direct, via)) <= 1e-10


def test_ybe_trivial_cases():
    P = mc.random_projector(3, 1, 0)
    assert check_ybe(1 + 1j, 2 - 1j, -1 + 2j, P, P, P) < 1e-12
    Z = np.zeros((3, 3), dtype=complex)
    P1, P2 = mc.random_projector(3, 1, 1), mc.random_projector(3, 2, 2)
    assert check_ybe(1 + 1j, 2 - 1j, -1 + 2j, P1, Z, P2) < 1e-12


@given(st.integers(0, 2**31), st.integers(2, 4))
def test_ybe_random(seed, n):
    rng = make_rng(seed)
    a = smp.random_alphas(3, rng)
    Ps = [mc.random_projector(n, int(rng.integers(0, n + 1)), rng) for _ in range(3)]
    assert check_ybe(*a, *Ps) <= 1e-9


def test_support_collision():
    with pytest.raises(SupportCollision):
        yb_map(1 + 1j, E1, 1 - 1j, HALF)
    with pytest.raises(SupportCollision) as info:
        yb_map(1 + 1j, E1, 1 + 1j + 1e-8, HALF)
    assert info.value.pair is not None
