"""Formula-versus-oracle sweeps.

Each target expands into cells. A cell evaluates one closed form and the
matching brute-force scan on a generated prefix. Cells are planned in key
order against a letter budget and may run on a process pool; results are
always reported in key order.
"""
import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from numpy.lib.stride_tricks import sliding_window_view

from sturmian.config import SturmianConfig
from sturmian.exact import GOLDEN_ANGLE
from sturmian.exceptions import BudgetExceededError, ConfigurationError
from sturmian.fibonacci import factor_periods, fib, fib_word, fibonacci_set, lp_closed, min_period_fj_closed
from sturmian.formulas import guaranteed_exponent, k_max, k_mn
from sturmian.logger import Logger
from sturmian.oracle import (
    longest_prefix_repetition,
    max_power_at,
    max_power_exponent,
    min_abelian_period,
    power_exponents,
)
from sturmian.words import Convention, SturmianSpec, prefix

VERIFY_TARGETS = ("km", "kmn", "kmi", "lp", "fibperiods", "factors")

DEFAULT_VERIFY_RANGES: Dict[str, Dict[str, List[int]]] = {
    "km": {"m": list(range(1, 22))},
    "kmn": {"m": [3, 10], "n": list(range(0, 21))},
    "kmi": {"m": [10], "i": list(range(0, 10))},
    "lp": {"j": list(range(2, 7))},
    "fibperiods": {"j": list(range(3, 14))},
    "factors": {"length": list(range(1, 51))},
}

_KEY_NAMES = {
    "km": ("m",),
    "kmn": ("m", "n"),
    "kmi": ("m", "i"),
    "lp": ("j",),
    "fibperiods": ("j",),
    "factors": ("length",),
}


@dataclass(frozen=True)
class Cell:
    """One formula/oracle comparison, small enough to send to a worker."""
    target: str
    key: Tuple[int, ...]
    spec: SturmianSpec
    expected: int
    cost: int
    safety: int = 20


@dataclass(frozen=True)
class CellResult:
    target: str
    key: Tuple[int, ...]
    spec: SturmianSpec
    expected: int
    observed: int

    @property
    def ok(self) -> bool:
        return self.expected == self.observed

    def describe(self) -> str:
        names = _KEY_NAMES[self.target]
        where = ", ".join(f"{name}={value}" for name, value in zip(names, self.key))
        return f"{self.spec.describe()}, {where}: formula {self.expected}, oracle {self.observed}"


@dataclass
class VerifyReport:
    target: str
    results: List[CellResult] = field(default_factory=list)
    letters: int = 0
    complete: bool = True

    @property
    def ok(self) -> bool:
        return self.complete and all(result.ok for result in self.results)

    @property
    def first_failure(self) -> Optional[CellResult]:
        return next((result for result in self.results if not result.ok), None)

    def render(self) -> str:
        """Tab-separated listing of every cell, in key order."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, delimiter="\t", lineterminator="\n")
        writer.writerow(_KEY_NAMES[self.target] + ("formula", "oracle", "status"))
        for result in self.results:
            writer.writerow(result.key + (result.expected, result.observed, "ok" if result.ok else "FAIL"))
        return buffer.getvalue()


def _first_disagreement(expected: int, values) -> int:
    return next((value for value in values if value != expected), expected)


def _oracle_km(cell: Cell) -> int:
    (m,) = cell.key
    alpha = cell.spec.alpha
    length = cell.safety * m * cell.expected
    words = [
        SturmianSpec(alpha, 0, 0, Convention.ZERO_IN_B),
        SturmianSpec(alpha, 0, 0, Convention.ZERO_IN_A),
        SturmianSpec.characteristic(alpha),
    ]
    return _first_disagreement(cell.expected, [max_power_exponent(prefix(w, length), m) for w in words])


def _oracle_kmn(cell: Cell) -> int:
    m, n = cell.key
    return max_power_at(prefix(cell.spec, m * (cell.expected + 2), start=n), 0, m)


def _oracle_kmi(cell: Cell) -> int:
    m, i = cell.key
    reach = k_max(cell.spec.alpha, m)
    word = prefix(cell.spec, cell.safety * m * reach)
    exponents = power_exponents(word, m)
    # exponents near the end are cut short by the prefix
    reliable = exponents[:max(0, len(word) - (reach + 1) * m + 1)]
    if len(reliable) <= i:
        return 0
    return int(sliding_window_view(reliable, i + 1).max(axis=1).min())


def _oracle_lp(cell: Cell) -> int:
    (j,) = cell.key
    return longest_prefix_repetition(prefix(cell.spec, cell.expected + 2 * fib(j)), fib(j))


def _oracle_fibperiods(cell: Cell) -> int:
    (j,) = cell.key
    return min_abelian_period(fib_word(j))


def _oracle_factors(cell: Cell) -> int:
    (length,) = cell.key
    allowed = fibonacci_set(length)
    return sum(period not in allowed for _, period in factor_periods(length))


_ORACLES = {
    "km": _oracle_km,
    "kmn": _oracle_kmn,
    "kmi": _oracle_kmi,
    "lp": _oracle_lp,
    "fibperiods": _oracle_fibperiods,
    "factors": _oracle_factors,
}


def run_cell(cell: Cell) -> CellResult:
    """Evaluate the oracle side of a planned cell."""
    observed = _ORACLES[cell.target](cell)
    return CellResult(cell.target, cell.key, cell.spec, cell.expected, int(observed))


class Verifier:
    """Plans and runs verification sweeps.

    Args:
        config (SturmianConfig, optional): Safety factor and defaults
        logger (Logger, optional): Progress at DEBUG, summaries at INFO
        max_letters (int, optional): Letter budget, defaults to config.verify_max_letters
        jobs (int, optional): Worker processes, defaults to config.verify_jobs
    """

    def __init__(self, config: SturmianConfig = None, logger: Logger = None,
                 max_letters: int = None, jobs: int = None):
        self._config = config or SturmianConfig()
        self._logger = logger or Logger(level=self._config.level, verbose=self._config.verbose)
        self._max_letters = max_letters if max_letters is not None else self._config.verify_max_letters
        self._jobs = jobs if jobs is not None else self._config.verify_jobs

    def plan(self, target: str, spec: SturmianSpec, ranges: Dict[str, List[int]] = None) -> List[Cell]:
        """Expand a target into cells in key order.

        Raises:
            ConfigurationError: If the target is unknown or needs the Fibonacci word
        """
        if target not in _ORACLES:
            raise ConfigurationError(f"unknown verify target {target!r}; choose from {', '.join(VERIFY_TARGETS)}")
        resolved = dict(DEFAULT_VERIFY_RANGES[target])
        resolved.update({k: v for k, v in (ranges or {}).items() if k in resolved and v is not None})
        safety = self._config.oracle_safety_factor

        if target in ("lp", "fibperiods", "factors"):
            if spec.alpha != GOLDEN_ANGLE:
                raise ConfigurationError(f"verify {target} is only defined for the Fibonacci word (--alpha fib)")
            spec = SturmianSpec.fibonacci()

        cells = []
        if target == "km":
            for m in resolved["m"]:
                k = k_max(spec.alpha, m)
                cells.append(Cell(target, (m,), spec, k, 3 * safety * m * k, safety))
        elif target == "kmn":
            for m in resolved["m"]:
                for n in resolved["n"]:
                    k = k_mn(spec, m, n).k
                    cells.append(Cell(target, (m, n), spec, k, m * (k + 2), safety))
        elif target == "kmi":
            for m in resolved["m"]:
                reach = k_max(spec.alpha, m)
                for i in resolved["i"]:
                    if i <= m:
                        cells.append(Cell(target, (m, i), spec, guaranteed_exponent(spec.alpha, m, i),
                                          safety * m * reach, safety))
        elif target == "lp":
            for j in resolved["j"]:
                lp = lp_closed(j)
                cells.append(Cell(target, (j,), spec, lp, lp + 2 * fib(j), safety))
        elif target == "fibperiods":
            for j in resolved["j"]:
                cells.append(Cell(target, (j,), spec, min_period_fj_closed(j).value, fib(j), safety))
        else:
            for length in resolved["length"]:
                cells.append(Cell(target, (length,), spec, 0, length * (length + 1), safety))
        return cells

    def run(self, target: str, spec: SturmianSpec, ranges: Dict[str, List[int]] = None) -> VerifyReport:
        """Run a sweep and report every cell in key order.

        Raises:
            ConfigurationError: If the target is unknown or needs the Fibonacci word
            BudgetExceededError: If the planned cells need more letters than
                the budget; the cells that fit are run and attached as ``partial``
        """
        cells = self.plan(target, spec, ranges)
        admitted, spent = [], 0
        for cell in cells:
            if spent + cell.cost > self._max_letters:
                break
            admitted.append(cell)
            spent += cell.cost
        if len(admitted) < len(cells):
            self._logger.warn(f"Letter budget {self._max_letters} admits {len(admitted)} of {len(cells)} cells")

        self._logger.info(f"Verifying {target} over {len(admitted)} cells ({spent} letters, {self._jobs} jobs)")
        if self._jobs > 1 and len(admitted) > 1:
            with ProcessPoolExecutor(max_workers=self._jobs) as pool:
                results = list(pool.map(run_cell, admitted))
        else:
            results = []
            for cell in admitted:
                results.append(run_cell(cell))
                self._logger.debug(f"Cell {target} {cell.key}: {results[-1].observed}")

        report = VerifyReport(target, results, spent, complete=len(admitted) == len(cells))
        failure = report.first_failure
        if failure:
            self._logger.error(f"First disagreement: {failure.describe()}")
        if not report.complete:
            raise BudgetExceededError(
                f"verify {target} needs more than {self._max_letters} letters; "
                f"{len(admitted)} of {len(cells)} cells were checked",
                partial=results,
            )
        passed = sum(result.ok for result in results)
        if report.ok:
            self._logger.success(f"verify {target}: {passed}/{len(results)} cells agree")
        else:
            self._logger.error(f"verify {target}: {passed}/{len(results)} cells agree")
        return report
