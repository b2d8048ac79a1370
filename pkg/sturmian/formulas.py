"""Closed forms for abelian powers and repetitions in Sturmian words.

Everything here is decided from the torus point {rho + n*alpha} and the
thresholds {m*alpha}, {-m*alpha}; no word is ever generated.
"""
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import FrozenSet, List, Optional, Tuple

from sturmian.exact import (
    QuadraticIrrational,
    cf_from_qi,
    convergents,
    dist_nearest_int,
    frac_part,
    is_convergent_denominator,
)
from sturmian.exceptions import ConvergentError, PreconditionError, SturmianError
from sturmian.utils import requires_irrational_angle
from sturmian.words import SturmianSpec, Weight, partition


class CaseTag(Enum):
    GENERIC = "generic"
    ZERO_POINT = "zero-point"
    EXCEPTIONAL_BELOW = "exceptional-below"
    EXCEPTIONAL_AT_OR_ABOVE = "exceptional-at-or-above"


@dataclass(frozen=True)
class PowerReport:
    """Maximum exponent k_{m,n} of an abelian power of period m at position n.

    A and B are the two floor quotients the exponent is built from, gamma
    is 1 under the zero-in-b convention, and r is the exceptional index
    ({rho + n*alpha} = {-r*m*alpha}) when there is one.
    """
    m: int
    n: int
    k: int
    case_tag: CaseTag
    A: int
    B: int
    gamma: int
    r: Optional[int] = None


@dataclass(frozen=True)
class RepetitionReport:
    """Abelian repetition with maximal head and tail around a power at a convergent."""
    start: int
    length: int
    head_len: int
    tail_len: int
    period: int
    block_count: int

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)


def _thresholds(alpha: QuadraticIrrational, m: int) -> Tuple[QuadraticIrrational, QuadraticIrrational]:
    delta = frac_part(m * alpha)
    return delta, 1 - delta


@requires_irrational_angle
def k_max(alpha: QuadraticIrrational, m: int) -> int:
    """Maximum exponent of an abelian power of period m: floor(1 / ||m*alpha||)."""
    if m < 1:
        raise PreconditionError("period must be positive")
    return math.floor(1 / dist_nearest_int(m * alpha))


def power_exists_at(spec: SturmianSpec, n: int, m: int, k: int) -> bool:
    """Whether an abelian power of period m and exponent k starts at position n.

    Four cases are distinguished by the point x = {rho + n*alpha}: a
    generic point, x = 0, and x = {-r*m*alpha} with k below r or with
    k >= r. In the last case the bound is reached with equality, which is
    where the two endpoint conventions disagree.

    Raises:
        PreconditionError: If k < 2 or m < 1
    """
    if k < 2:
        raise PreconditionError("exponent must be at least 2")
    if m < 1:
        raise PreconditionError("period must be positive")
    delta, eps = _thresholds(spec.alpha, m)
    small = delta < Fraction(1, 2)
    x = spec.point(n).value
    r = spec.exceptional_index(n, m)

    if r == 0:
        if small:
            return spec.zero_in_b and k * delta < 1
        return not spec.zero_in_b and k * eps < 1
    if r is not None and k >= r:
        if r < 2:
            return False
        if small:
            return not spec.zero_in_b and x <= 1 - k * delta
        return spec.zero_in_b and x >= k * eps
    return x < 1 - k * delta if small else x > k * eps


def k_mn(spec: SturmianSpec, m: int, n: int) -> PowerReport:
    """Maximum exponent of a (possibly degenerated) abelian power of period m at n."""
    if m < 1:
        raise PreconditionError("period must be positive")
    delta, eps = _thresholds(spec.alpha, m)
    x = spec.point(n).value
    opposite = 1 - x if x != 0 else x
    A = math.floor(opposite / delta)
    B = math.floor(x / eps)
    gamma = 1 if spec.zero_in_b else 0
    r = spec.exceptional_index(n, m)

    if r == 0:
        k = math.floor(1 / delta) if spec.zero_in_b else math.floor(1 / eps)
        tag = CaseTag.ZERO_POINT
    elif r is not None and r <= max(A, B):
        k = max(A - gamma, B + gamma - 1)
        tag = CaseTag.EXCEPTIONAL_AT_OR_ABOVE
    elif r is not None:
        k = max(A, B)
        tag = CaseTag.EXCEPTIONAL_BELOW
    else:
        k = max(A, B)
        tag = CaseTag.GENERIC
    return PowerReport(m=m, n=n, k=k, case_tag=tag, A=A, B=B, gamma=gamma, r=r)


@requires_irrational_angle
def guaranteed_exponent(alpha: QuadraticIrrational, m: int, i: int) -> int:
    """Exponent guaranteed to start in every window of i+1 consecutive positions.

    Args:
        alpha (QuadraticIrrational): Irrational angle in (0, 1)
        m (int): Period
        i (int): Anticipation, 0 <= i <= m

    Returns:
        int: max(1, floor((1 - l_i) / ||m*alpha||)) where l_i is the longest
        interval of the length-i partition (l_0 = 1)

    Raises:
        PreconditionError: If i is outside [0, m]
    """
    if not 0 <= i <= m:
        raise PreconditionError(f"anticipation must lie in [0, {m}], got {i}")
    longest = QuadraticIrrational(1) if i == 0 else partition(alpha, i).max_len
    return max(1, math.floor((1 - longest) / dist_nearest_int(m * alpha)))


@requires_irrational_angle
def three_distance_lengths(alpha: QuadraticIrrational, k: int) -> FrozenSet[QuadraticIrrational]:
    """Interval lengths of partition(alpha, m_k - 1) predicted from the expansion.

    They are ||m_{k-1}*alpha|| and ||((a_k - 1)*m_{k-1} + m_{k-2})*alpha||.

    Raises:
        PreconditionError: If k < 2 or m_{k-1} = 1, where the prediction fails
    """
    if k < 2:
        raise PreconditionError("convergent index must be at least 2")
    cf = cf_from_qi(alpha)
    dens = [m for _, m in convergents(cf, k + 1)]
    m_prev, m_prev2 = dens[k - 1], dens[k - 2]
    if m_prev <= 1:
        raise PreconditionError(f"m_{k - 1} = {m_prev}; the two-length prediction needs m_(k-1) > 1")
    a_k = cf.term(k)
    return frozenset({
        dist_nearest_int(m_prev * alpha),
        dist_nearest_int(((a_k - 1) * m_prev + m_prev2) * alpha),
    })


@requires_irrational_angle
def unique_extreme_factor(alpha: QuadraticIrrational, m: int) -> Tuple[str, Weight]:
    """The unique heavy or unique light factor of length m at a convergent denominator.

    Raises:
        ConvergentError: If m is not a convergent denominator of alpha
    """
    if not is_convergent_denominator(alpha, m):
        raise ConvergentError(f"{m} is not a convergent denominator of {alpha}")
    weight = Weight.HEAVY if frac_part(-m * alpha) >= frac_part(-alpha) else Weight.LIGHT
    wanted = weight is Weight.HEAVY
    candidates = [iv.factor for iv in partition(alpha, m).intervals if iv.heavy == wanted]
    if len(candidates) != 1:
        raise SturmianError(f"expected one {weight.value} factor of length {m}, found {len(candidates)}")
    return candidates[0], weight


@requires_irrational_angle
def k_prime(alpha: QuadraticIrrational, m: int) -> Fraction:
    """Maximum exponent of an abelian repetition at a convergent denominator m.

    Raises:
        ConvergentError: If m is not a convergent denominator of alpha
    """
    if not is_convergent_denominator(alpha, m):
        raise ConvergentError(f"{m} is not a convergent denominator of {alpha}")
    return k_max(alpha, m) + 2 - Fraction(2, m)


def repetition_extension(spec: SturmianSpec, n: int, m_i: int) -> RepetitionReport:
    """Extend the abelian power of period m_i at n by maximal head and tail.

    At convergent denominators the m_i - 1 letters on either side of a
    maximal power are contained in the block Parikh vector.

    Raises:
        ConvergentError: If m_i is not a convergent denominator
        PreconditionError: If n < m_i - 1 or no proper power starts at n
    """
    if not is_convergent_denominator(spec.alpha, m_i):
        raise ConvergentError(f"{m_i} is not a convergent denominator of {spec.alpha}")
    if n < m_i - 1:
        raise PreconditionError(f"position {n} leaves no room for a head of length {m_i - 1}")
    report = k_mn(spec, m_i, n)
    if report.k < 2:
        raise PreconditionError(f"no abelian power of period {m_i} starts at position {n}")
    return RepetitionReport(
        start=n - (m_i - 1),
        length=report.k * m_i + 2 * (m_i - 1),
        head_len=m_i - 1,
        tail_len=m_i - 1,
        period=m_i,
        block_count=report.k,
    )


def power_positions(spec: SturmianSpec, m: int, k: int, count: int, limit: int = 1_000_000) -> List[int]:
    """First ``count`` positions where an abelian power of period m and exponent k starts."""
    found: List[int] = []
    n = 0
    while len(found) < count and n < limit:
        if power_exists_at(spec, n, m, k):
            found.append(n)
        n += 1
    return found


def period_for_exponent(spec: SturmianSpec, n: int, k: int, max_m: int = 3000) -> Optional[int]:
    """Smallest period m <= max_m with an abelian power of exponent >= k at n."""
    for m in range(1, max_m + 1):
        if k_mn(spec, m, n).k >= k:
            return m
    return None
