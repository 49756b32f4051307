import pytest

from yrqsym.verify import SUITES, VerifyConfig, run_suite

SMALL = VerifyConfig().capped(4)
FAST = [name for name in SUITES if name not in ("insertion",)]


@pytest.mark.parametrize("name", FAST)
def test_suites_pass_at_small_bounds(name):
    result = run_suite(name, SMALL)
    assert result.passed, result.certificate
    assert result.checked > 0


def test_threads_give_identical_results(monkeypatch):
    monkeypatch.setenv("YRQSYM_THREADS", "4")
    threaded = VerifyConfig.from_env().capped(4)
    assert threaded.threads == 4
    for name in ("schur", "skew", "restrict"):
        a, b = run_suite(name, SMALL), run_suite(name, threaded)
        assert (a.passed, a.checked, a.certificate) == (b.passed, b.checked, b.certificate)


def test_failure_carries_certificate():
    result = run_suite("insertion", SMALL)
    assert not result.passed
    assert "expected rows" in result.certificate
    assert "FAIL" in result.line()


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope", SMALL)
