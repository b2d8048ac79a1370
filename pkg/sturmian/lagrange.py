"""Lagrange constants of quadratic irrationals.

For an eventually periodic expansion the limsup of (m*||m*alpha||)^-1 runs
over finitely many residue classes of the period. Along the class of
residue j the value tends to T_j + H_j, where T_j is the purely periodic
expansion starting at position j of the period and H_j is [0; a_{j-1},
a_{j-2}, ...] read backwards through the period.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from sturmian.exact import (
    ContinuedFraction,
    QuadraticIrrational,
    cf_from_qi,
    convergents,
    qi_from_cf,
)
from sturmian.exceptions import PreconditionError
from sturmian.utils import requires_irrational_angle


@dataclass(frozen=True)
class LagrangeValue:
    """Exact Lagrange constant and the period residue where it is attained."""
    exact: QuadraticIrrational
    witness_residue: int

    def approx(self, digits: int = 6) -> str:
        return self.exact.decimal(digits)


def _residue_expansions(cf: ContinuedFraction, j: int) -> Tuple[ContinuedFraction, ContinuedFraction]:
    per = cf.period
    length = len(per)
    forward = ContinuedFraction((per[j],), per[j + 1:] + per[:j + 1])
    backward = ContinuedFraction((0,), tuple(per[(j - 1 - t) % length] for t in range(length)))
    return forward, backward


def residue_limits(cf: ContinuedFraction) -> List[QuadraticIrrational]:
    """Limit of (m_i*||m_i*alpha||)^-1 along each residue class of the period."""
    limits = []
    for j in range(len(cf.period)):
        forward, backward = _residue_expansions(cf, j)
        limits.append(qi_from_cf(forward) + qi_from_cf(backward))
    return limits


def lagrange_exact(cf: ContinuedFraction) -> LagrangeValue:
    """Exact Lagrange constant of an eventually periodic continued fraction.

    The preperiod only shifts which residue comes first, so the value is
    the largest residue limit. Ties go to the smallest residue.

    Args:
        cf (ContinuedFraction): Any eventually periodic expansion

    Returns:
        LagrangeValue: The constant and its witness residue
    """
    limits = residue_limits(cf)
    best = 0
    for j in range(1, len(limits)):
        if limits[j] > limits[best]:
            best = j
    return LagrangeValue(limits[best], best)


def _lower_truncation(expansion: ContinuedFraction, count: int) -> Fraction:
    numerator, denominator = convergents(expansion, count)[-1]
    return Fraction(numerator, denominator)


def lagrange_numeric(cf: ContinuedFraction, depth: int) -> Fraction:
    """Rational lower bound of the Lagrange constant from truncated expansions.

    Each residue limit T_j + H_j is approximated by truncating both
    expansions to an odd number of partial quotients. Even-index
    convergents lie below the value they approximate, so the result never
    exceeds ``lagrange_exact(cf)`` and increases with depth.

    Args:
        cf (ContinuedFraction): Any eventually periodic expansion
        depth (int): Number of partial quotients kept, at least 2

    Returns:
        Fraction: The lower bound

    Raises:
        PreconditionError: If depth < 2
    """
    if depth < 2:
        raise PreconditionError("depth must be at least 2")
    count = depth if depth % 2 else depth - 1
    best = None
    for j in range(len(cf.period)):
        forward, backward = _residue_expansions(cf, j)
        value = _lower_truncation(forward, count) + _lower_truncation(backward, count)
        if best is None or value > best:
            best = value
    return best


def lagrange_term(cf: ContinuedFraction, i: int) -> QuadraticIrrational:
    """Exact (m_i*||m_i*alpha||)^-1 = alpha_{i+1} + m_{i-1}/m_i for i >= 1."""
    if i < 1:
        raise PreconditionError("convergent index must be at least 1")
    dens = [m for _, m in convergents(cf, i + 1)]
    return qi_from_cf(cf.tail(i + 1)) + Fraction(dens[i - 1], dens[i])


def are_equivalent(cf1: ContinuedFraction, cf2: ContinuedFraction) -> bool:
    """Whether two expansions eventually coincide up to a shift."""
    return cf1.rotation_key() == cf2.rotation_key()


@requires_irrational_angle
def abelian_critical_exponent(alpha: QuadraticIrrational) -> LagrangeValue:
    """Abelian critical exponent of any Sturmian word of angle alpha."""
    return lagrange_exact(cf_from_qi(alpha))
