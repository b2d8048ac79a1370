"""Closed forms for the Fibonacci word f = s_{phi-1, phi-1}.

Fibonacci numbers are indexed from F_0 = F_1 = 1, so F_j = |f_j| for the
finite words f_0 = b, f_1 = a, f_j = f_{j-1} f_{j-2}.
"""
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from sturmian.exact import GOLDEN_ANGLE, SQRT5, QuadraticIrrational, dist_nearest_int
from sturmian.exceptions import PreconditionError
from sturmian.logger import Logger
from sturmian.oracle import min_abelian_period
from sturmian.words import SturmianSpec, partition, prefix


@dataclass(frozen=True)
class FibIndex:
    """The Fibonacci number F_j together with its index."""
    j: int
    value: int

    def __str__(self):
        return f"F_{self.j}"


@dataclass
class FactorPeriodReport:
    """Minimum abelian periods of all factors of f up to a length."""
    max_length: int
    histogram: Dict[int, int] = field(default_factory=dict)
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@lru_cache(maxsize=None)
def fib(j: int) -> int:
    """F_j with F_0 = F_1 = 1."""
    if j < 0:
        raise PreconditionError("Fibonacci index must be nonnegative")
    previous, current = 1, 1
    for _ in range(j - 1):
        previous, current = current, previous + current
    return current


def fib_word(j: int) -> str:
    """The finite Fibonacci word f_j of length F_j."""
    if j < 0:
        raise PreconditionError("Fibonacci index must be nonnegative")
    if j == 0:
        return "b"
    previous, current = "b", "a"
    for _ in range(j - 1):
        previous, current = current, current + previous
    return current


def fibonacci_set(upto: int) -> frozenset:
    """All Fibonacci numbers not exceeding upto."""
    values, j = set(), 0
    while fib(j) <= upto:
        values.add(fib(j))
        j += 1
    return frozenset(values)


def k_fib_closed(j: int) -> int:
    """Maximum abelian-power exponent at the period F_j.

    Equals floor(phi*F_j + F_{j-1}), which is F_{j+1} + F_{j-1} for even j
    and one less for odd j.
    """
    if j < 1:
        raise PreconditionError("index must be at least 1")
    return fib(j + 1) + fib(j - 1) - (j % 2)


def longest_power_before(j: int) -> Tuple[int, int]:
    """Position and exponent of the longest abelian power of period F_j starting before F_j."""
    if j < 2:
        raise PreconditionError("index must be at least 2")
    return fib(j) - 1, k_fib_closed(j) - 1


def lp_closed(j: int) -> int:
    """Length of the longest prefix of f that is an abelian repetition of period F_j.

    Raises:
        PreconditionError: If j < 2
    """
    if j < 2:
        raise PreconditionError("index must be at least 2")
    f_j = fib(j)
    if j % 2 == 0:
        return f_j * (fib(j + 1) + fib(j - 1) + 1) - 2
    return f_j * (fib(j + 1) + fib(j - 1)) - 2


def min_period_fj_closed(j: int) -> FibIndex:
    """Minimum abelian period of the finite word f_j.

    It is F_n with n = floor(j/2), plus one when j = 3 mod 4.

    Raises:
        PreconditionError: If j < 3
    """
    if j < 3:
        raise PreconditionError("index must be at least 3")
    n = j // 2 + (1 if j % 4 == 3 else 0)
    return FibIndex(n, fib(n))


def fib_identity(j: int) -> bool:
    """Check F_j * (F_{j+1} + F_{j-1}) = F_{2j+1}."""
    if j < 1:
        raise PreconditionError("index must be at least 1")
    return fib(j) * (fib(j + 1) + fib(j - 1)) == fib(2 * j + 1)


def sqrt5_deviation(j: int) -> QuadraticIrrational:
    """Exact |sqrt(5) - lp(F_j) / F_j^2|."""
    return abs(SQRT5 - Fraction(lp_closed(j), fib(j) ** 2))


def fib_norm_ratios(j: int) -> Tuple[QuadraticIrrational, QuadraticIrrational]:
    """Ratios ||F_{j-1}*alpha|| / ||F_j*alpha|| and ||F_{j-2}*alpha|| / ||F_j*alpha|| for alpha = phi - 1.

    They equal phi and 1 + phi exactly.
    """
    if j < 3:
        raise PreconditionError("index must be at least 3")
    base = dist_nearest_int(fib(j) * GOLDEN_ANGLE)
    return (
        dist_nearest_int(fib(j - 1) * GOLDEN_ANGLE) / base,
        dist_nearest_int(fib(j - 2) * GOLDEN_ANGLE) / base,
    )


def anticipation_closed(j: int) -> int:
    """Guaranteed exponent of period F_j with anticipation F_j - 1: F_{j+1} + F_{j-1} - 3."""
    if j < 2:
        raise PreconditionError("index must be at least 2")
    return fib(j + 1) + fib(j - 1) - 3


def factor_periods(length: int) -> List[Tuple[str, int]]:
    """The length + 1 factors of f of this length with their minimum abelian periods."""
    return [(word, min_abelian_period(word)) for word in partition(GOLDEN_ANGLE, length).factors]


def verify_factor_periods(max_length: int, logger: Optional[Logger] = None) -> FactorPeriodReport:
    """Check that every factor of f up to max_length has a Fibonacci minimum abelian period.

    The l + 1 distinct factors of each length l are read off the interval
    partition instead of sliding a window over a prefix.

    Args:
        max_length (int): Largest factor length, at least 1
        logger (Logger, optional): Receives progress at DEBUG level

    Returns:
        FactorPeriodReport: Histogram of periods and any violating factors
    """
    if max_length < 1:
        raise PreconditionError("max_length must be at least 1")
    allowed = fibonacci_set(max_length)
    histogram: Counter = Counter()
    report = FactorPeriodReport(max_length)
    for length in range(1, max_length + 1):
        for word, period in factor_periods(length):
            histogram[period] += 1
            if period not in allowed:
                report.violations.append(word)
        if logger:
            logger.debug(f"Checked the {length + 1} factors of length {length}")
    report.histogram = dict(sorted(histogram.items()))
    return report


def counterexample_factor() -> str:
    """Factor of length 40 at position 35 of the characteristic word of angle (sqrt(3) - 1)/2.

    Its minimum abelian period is 6, which is not a convergent denominator
    of that angle.
    """
    alpha = QuadraticIrrational(-1, 1, 2, 3)
    return prefix(SturmianSpec.characteristic(alpha), 40, start=35)
