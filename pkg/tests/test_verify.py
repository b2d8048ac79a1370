import pytest

from sturmian.config import SturmianConfig
from sturmian.exact import GOLDEN_ANGLE, ContinuedFraction
from sturmian.exceptions import BudgetExceededError, ConfigurationError
from sturmian.logger import Logger
from sturmian.verify import Cell, CellResult, Verifier, VerifyReport, run_cell
from sturmian.words import Convention, SturmianSpec
from tests.conftest import SQRT2_ANGLE, SQRT3_ANGLE


@pytest.fixture
def verifier():
    """A verifier that only logs errors."""
    return Verifier(logger=Logger(level="ERROR"))


@pytest.mark.parametrize("target, cells", [
    ("kmn", 42),
    ("km", 21),
    ("kmi", 10),
    ("lp", 5),
    ("fibperiods", 11),
])
def test_default_sweeps_pass(verifier, fib_spec, target, cells):
    """Test that each closed form agrees with its oracle on the reference ranges"""
    report = verifier.run(target, fib_spec)
    assert report.complete
    assert len(report.results) == cells
    assert report.ok, report.first_failure and report.first_failure.describe()


def test_factor_sweep(verifier, fib_spec):
    """Test the Fibonacci-period sweep on short factors"""
    report = verifier.run("factors", fib_spec, {"length": list(range(1, 21))})
    assert report.ok
    assert all(result.observed == 0 for result in report.results)


def test_results_are_in_key_order(fib_spec):
    """Test that a process pool returns the same listing as a serial run"""
    ranges = {"m": [2, 3, 5], "n": list(range(0, 12))}
    serial = Verifier(logger=Logger(level="ERROR"), jobs=1).run("kmn", fib_spec, ranges)
    pooled = Verifier(logger=Logger(level="ERROR"), jobs=2).run("kmn", fib_spec, ranges)
    assert [r.key for r in pooled.results] == [r.key for r in serial.results]
    assert pooled.render() == serial.render()


def test_other_angles(verifier):
    """Test kmn and km sweeps on (sqrt(3) - 1)/2 in both conventions"""
    for convention in Convention:
        spec = SturmianSpec(SQRT3_ANGLE, 0, 0, convention)
        assert verifier.run("kmn", spec, {"m": [1, 2, 3, 8], "n": list(range(0, 30))}).ok
        assert verifier.run("km", spec, {"m": list(range(1, 12))}).ok


def test_budget_exceeded_carries_partial_results(fib_spec):
    """Test that cells beyond the letter budget are reported as missing"""
    verifier = Verifier(logger=Logger(level="ERROR"), max_letters=200)
    with pytest.raises(BudgetExceededError, match=r"letters") as excinfo:
        verifier.run("kmn", fib_spec)
    partial = excinfo.value.partial
    assert 0 < len(partial) < 42
    assert all(result.ok for result in partial)
    assert [r.key for r in partial] == [(3, n) for n in range(len(partial))]


def test_budget_shortfall_is_logged_as_warning(fib_spec, capsys):
    """Test that a sweep cut short by the budget logs a warning on stderr"""
    verifier = Verifier(logger=Logger(level="WARN"), max_letters=200)
    with pytest.raises(BudgetExceededError):
        verifier.run("kmn", fib_spec)
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "WARNING" in captured.err
    assert "of 42 cells" in captured.err


def test_unknown_target(verifier, fib_spec):
    """Test target validation"""
    with pytest.raises(ConfigurationError, match=r"unknown verify target"):
        verifier.plan("nope", fib_spec)


@pytest.mark.parametrize("target", ["lp", "fibperiods", "factors"])
def test_fibonacci_targets_need_golden_angle(verifier, target):
    """Test that Fibonacci-only targets refuse other angles"""
    with pytest.raises(ConfigurationError, match=r"Fibonacci word"):
        verifier.plan(target, SturmianSpec.characteristic(SQRT3_ANGLE))


def test_plan_uses_configured_safety_factor(fib_spec):
    """Test that the safety factor flows into the cells"""
    verifier = Verifier(SturmianConfig(oracle_safety_factor=5), Logger(level="ERROR"))
    cells = verifier.plan("km", fib_spec, {"m": [2]})
    assert cells == [Cell("km", (2,), fib_spec, 4, 3 * 5 * 2 * 4, 5)]


def test_failure_is_reported(fib_spec):
    """Test that a wrong expectation surfaces as a failing cell"""
    result = run_cell(Cell("kmn", (3, 0), fib_spec, 5, 3 * 7))
    assert not result.ok
    assert result.observed == 4
    report = VerifyReport("kmn", [result])
    assert not report.ok
    assert report.first_failure is result
    assert report.render().splitlines()[1] == "3\t0\t5\t4\tFAIL"
    assert "formula 5, oracle 4" in result.describe()


def test_cell_result_describe(fib_spec):
    """Test the human-readable cell description"""
    result = CellResult("kmn", (3, 7), fib_spec, 6, 6)
    assert result.describe().endswith("m=3, n=7: formula 6, oracle 6")


@pytest.mark.slow
def test_two_periodic_angle_at_zero(verifier):
    """Test a wide kmn sweep on [0;|2,1] with rho = 0"""
    alpha = ContinuedFraction.parse("[0;|2,1]").value
    for convention in Convention:
        spec = SturmianSpec(alpha, 0, 0, convention)
        report = verifier.run("kmn", spec, {"m": list(range(1, 26)), "n": list(range(0, 301))})
        assert report.ok, report.first_failure.describe()


@pytest.mark.slow
@pytest.mark.parametrize("alpha", [GOLDEN_ANGLE, SQRT3_ANGLE, SQRT2_ANGLE], ids=["golden", "sqrt3", "sqrt2"])
def test_km_sweep_to_sixty(alpha):
    """Test k_max against scans of s_{alpha,0} in both conventions and of the characteristic word for m = 1..60"""
    verifier = Verifier(logger=Logger(level="ERROR"), max_letters=200_000_000)
    report = verifier.run("km", SturmianSpec.characteristic(alpha), {"m": list(range(1, 61))})
    assert report.complete
    assert len(report.results) == 60
    assert report.ok, report.first_failure.describe()
