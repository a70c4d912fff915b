import pytest

from reflectory.suites import SUITES, run_suite


@pytest.mark.parametrize("name", sorted(SUITES))
def test_each_suite_passes(name):
    rep = run_suite(name, n=2 if name.startswith("loop") or name == "uniqueness" else 3,
                    trials=5, seed=11)
    assert rep["schema"] == 1
    assert rep["failures"] == 0, rep
    assert rep["trials_run"] == 5


def test_report_is_deterministic_and_order_free(monkeypatch):
    a = run_suite("reflection", trials=8, seed=3)
    monkeypatch.setenv("REFLECTORY_THREADS", "4")
    b = run_suite("reflection", trials=8, seed=3)
    assert a == b
    assert "elapsed_ms" not in a


def test_timing_is_opt_in():
    assert "elapsed_ms" in run_suite("ybe", trials=1, timing=True)


def test_tolerance_controls_failures():
    rep = run_suite("ybe", trials=5, seed=0, tol=0.0)
    assert rep["failures"] == 5


def test_fixed_ranks_and_validation():
    assert run_suite("ybe", n=4, k=2, l=3, trials=3)["failures"] == 0
    with pytest.raises(ValueError):
        run_suite("ybe", n=3, k=3)
    with pytest.raises(ValueError):
        run_suite("ybe", n=1)
    with pytest.raises(KeyError):
        run_suite("nope")
