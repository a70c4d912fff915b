import numpy as np
import pytest
from hypothesis import given, strategies as st

from reflectory import _kernels_py
from reflectory._core import BACKEND, available_backends
from reflectory.config import make_rng
from reflectory.matrix_core import random_projector

BACKENDS = available_backends()
compiled_only = pytest.mark.skipif("compiled" not in BACKENDS, reason="extension not built")


def test_backend_reported():
    assert BACKEND in BACKENDS


@compiled_only
@given(st.integers(0, 2**32 - 1), st.integers(2, 6))
def test_refactor_pair_parity(seed, n):
    rng = make_rng(seed)
    P1 = random_projector(n, int(rng.integers(0, n + 1)), rng)
    P2 = random_projector(n, int(rng.integers(0, n + 1)), rng)
    a1, a2 = complex(1.1, 0.7), complex(-0.4, 1.9)
    out_c = BACKENDS["compiled"].refactor_pair(a1, P1, a2, P2)
    out_p = _kernels_py.refactor_pair(a1, P1, a2, P2)
    for x, y in zip(out_c[:3], out_p[:3]):
        assert np.linalg.norm(x - y) < 1e-12
    assert out_c[3] == pytest.approx(out_p[3], rel=1e-10)


@compiled_only
@given(st.integers(0, 2**32 - 1), st.integers(0, 4))
def test_eval_product_parity(seed, m):
    rng = make_rng(seed)
    n = 3
    alphas = rng.standard_normal(m) + 1j * (0.5 + rng.random(m))
    projs = np.stack([random_projector(n, 1, rng) for _ in range(m)]) if m else np.zeros((0, n, n), complex)
    z = complex(0.3, -2.0)
    a = BACKENDS["compiled"].eval_product(alphas, projs, z)
    b = _kernels_py.eval_product(alphas, projs, z)
    assert np.linalg.norm(a - b) < 1e-12


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_empty_product_is_identity(name):
    k = BACKENDS[name]
    out = k.eval_product(np.zeros(0, complex), np.zeros((0, 2, 2), complex), 1.0 + 1.0j)
    assert np.allclose(out, np.eye(2))


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_singular_conjugation_flags_zero_rcond(name):
    Q, rcond = BACKENDS[name].conjugate(np.zeros((2, 2), complex), np.eye(2, dtype=complex))
    assert rcond == 0.0
    assert not Q.any()


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_discrepancy_of_identical_products_is_zero(name):
    rng = make_rng(3)
    projs = np.stack([random_projector(3, 1, rng) for _ in range(2)])
    al = np.array([1 + 1j, -2 + 0.5j])
    zs = np.array([0.1 + 0.2j, 3.0 - 1j])
    assert BACKENDS[name].product_discrepancy(al, projs, al, projs, zs) == 0.0


def test_pure_python_switch(monkeypatch):
    import importlib

    import reflectory._core as core
    monkeypatch.setenv("REFLECTORY_PURE_PYTHON", "1")
    try:
        mod = importlib.reload(core)
        assert mod.BACKEND == "python"
        assert mod.kernels is _kernels_py
    finally:
        monkeypatch.delenv("REFLECTORY_PURE_PYTHON")
        importlib.reload(core)
