"""Exact arithmetic in real quadratic fields and periodic continued fractions.

Every comparison the library makes is decided here with integer arithmetic.
Values are immutable, so they can be shared freely between worker processes.
"""
import math
import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from itertools import islice
from typing import Iterator, List, Tuple, Union

import sympy as sym

from sturmian.exceptions import ArithmeticDomainError, ConvergentError


def _squarefree_split(d: int) -> Tuple[int, int]:
    """Split d as s*s*r with r squarefree and return (s, r)."""
    s, r = 1, d
    p = 2
    while p * p <= r:
        while r % (p * p) == 0:
            r //= p * p
            s *= p
        p += 1 if p == 2 else 2
    return s, r


@dataclass(frozen=True, eq=False)
class QuadraticIrrational:
    """The real number (a + b*sqrt(d)) / c.

    Instances are normalized on construction: d is squarefree, c is
    positive, gcd(a, b, c) = 1, and rationals are stored with b = 0, d = 1.
    The normal form is unique, so structural equality is value equality.

    Args:
        a (int): Rational part of the numerator
        b (int): Coefficient of sqrt(d) in the numerator
        c (int): Denominator, nonzero
        d (int): Positive radicand

    Raises:
        TypeError: If a component is not an integer
        ZeroDivisionError: If c is zero
        ArithmeticDomainError: If d is not positive
    """
    a: int
    b: int = 0
    c: int = 1
    d: int = 1

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"{name} must be an integer, got {value!r}")
        a, b, c, d = self.a, self.b, self.c, self.d
        if c == 0:
            raise ZeroDivisionError("denominator of a quadratic irrational must be nonzero")
        if d <= 0:
            raise ArithmeticDomainError(f"only real quadratic fields are supported, got d={d}")

        if b == 0:
            d = 1
        else:
            s, d = _squarefree_split(d)
            b *= s
            if d == 1:
                a, b = a + b, 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(math.gcd(a, b), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g

        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @classmethod
    def from_rational(cls, value: Union[int, Fraction]) -> "QuadraticIrrational":
        value = Fraction(value)
        return cls(value.numerator, 0, value.denominator, 1)

    @classmethod
    def sqrt(cls, d: int) -> "QuadraticIrrational":
        return cls(0, 1, 1, d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        """Return the value as a Fraction.

        Raises:
            ArithmeticDomainError: If the value is irrational
        """
        if not self.is_rational:
            raise ArithmeticDomainError(f"{self} is irrational")
        return Fraction(self.a, self.c)

    def conjugate(self) -> "QuadraticIrrational":
        return QuadraticIrrational(self.a, -self.b, self.c, self.d)

    def sign(self) -> int:
        """Exact sign of the value: -1, 0 or 1."""
        a, b = self.a, self.b
        sign_a = (a > 0) - (a < 0)
        sign_b = (b > 0) - (b < 0)
        if sign_b == 0:
            return sign_a
        if sign_a == 0 or sign_a == sign_b:
            return sign_b
        # a and b*sqrt(d) pull in opposite directions; the larger square wins
        return sign_a if a * a > b * b * self.d else sign_b

    def inverse(self) -> "QuadraticIrrational":
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("division by zero")
        return QuadraticIrrational(self.c * self.a, -self.c * self.b, norm, self.d)

    def decimal(self, digits: int = 6) -> str:
        """Render the value rounded half-up to a fixed number of decimals.

        Rounding is decided exactly, so the rendering is the same on every
        platform.

        Args:
            digits (int): Number of digits after the decimal point

        Returns:
            str: Decimal string such as "0.381966"
        """
        if digits < 0:
            raise ValueError("digits must be nonnegative")
        scale = 10 ** digits
        rounded = math.floor(abs(self) * scale + Fraction(1, 2))
        sign = "-" if self.sign() < 0 and rounded != 0 else ""
        if digits == 0:
            return f"{sign}{rounded}"
        whole, part = divmod(rounded, scale)
        return f"{sign}{whole}.{part:0{digits}d}"

    def _field(self, other: "QuadraticIrrational") -> int:
        if self.b == 0:
            return other.d
        if other.b == 0 or self.d == other.d:
            return self.d
        raise ArithmeticDomainError(
            f"cannot combine values of Q(sqrt({self.d})) and Q(sqrt({other.d}))"
        )

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        d = self._field(other)
        return QuadraticIrrational(
            self.a * other.c + other.a * self.c,
            self.b * other.c + other.b * self.c,
            self.c * other.c,
            d,
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadraticIrrational(-self.a, -self.b, self.c, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        d = self._field(other)
        return QuadraticIrrational(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            self.c * other.c,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __floor__(self) -> int:
        if self.b == 0:
            return self.a // self.c
        root = math.isqrt(self.b * self.b * self.d)
        if self.b > 0:
            return (self.a + root) // self.c
        return (self.a - root - 1) // self.c

    def __ceil__(self) -> int:
        return -math.floor(-self)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.c))
        return hash((self.a, self.b, self.c, self.d))

    def __lt__(self, other):
        return compare(self, other) is Ordering.LESS

    def __le__(self, other):
        return compare(self, other) is not Ordering.GREATER

    def __gt__(self, other):
        return compare(self, other) is Ordering.GREATER

    def __ge__(self, other):
        return compare(self, other) is not Ordering.LESS

    def __str__(self):
        if self.b == 0:
            return str(Fraction(self.a, self.c))
        magnitude = abs(self.b)
        surd = f"sqrt({self.d})" if magnitude == 1 else f"{magnitude}*sqrt({self.d})"
        if self.a == 0:
            numerator = surd if self.b > 0 else f"-{surd}"
            return numerator if self.c == 1 else f"{numerator}/{self.c}"
        numerator = f"{self.a}{'+' if self.b > 0 else '-'}{surd}"
        return numerator if self.c == 1 else f"({numerator})/{self.c}"


Number = Union[int, Fraction, QuadraticIrrational]


def _coerce(value):
    if isinstance(value, QuadraticIrrational):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return QuadraticIrrational.from_rational(value)
    return NotImplemented


def as_quadratic(value: Number) -> QuadraticIrrational:
    """Coerce an int, Fraction or QuadraticIrrational to a QuadraticIrrational."""
    coerced = _coerce(value)
    if coerced is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a quadratic irrational")
    return coerced


PHI = QuadraticIrrational(1, 1, 2, 5)
GOLDEN_ANGLE = QuadraticIrrational(-1, 1, 2, 5)
SQRT5 = QuadraticIrrational.sqrt(5)


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _sign_across_fields(x: QuadraticIrrational, y: QuadraticIrrational) -> int:
    # x - y scaled by x.c*y.c > 0 is u + w with u = A + B*sqrt(d1), w = C*sqrt(d2)
    u = QuadraticIrrational(x.a * y.c - y.a * x.c, x.b * y.c, 1, x.d)
    coeff = -y.b * x.c
    sign_u = u.sign()
    sign_w = (coeff > 0) - (coeff < 0)
    if sign_u == 0 or sign_u == sign_w:
        return sign_w if sign_u == 0 else sign_u
    if sign_w == 0:
        return sign_u
    # opposite signs: compare u^2 (in Q(sqrt(d1))) with w^2 (rational)
    return sign_u if (u * u - coeff * coeff * y.d).sign() > 0 else sign_w


def compare(x: Number, y: Number) -> Ordering:
    """Exact three-way comparison of two quadratic numbers.

    Values from different quadratic fields are compared by squaring with
    sign bookkeeping, so no common field is ever built.
    """
    x, y = as_quadratic(x), as_quadratic(y)
    if x.b == 0 or y.b == 0 or x.d == y.d:
        return Ordering((x - y).sign())
    return Ordering(_sign_across_fields(x, y))


def frac_part(x: Number) -> QuadraticIrrational:
    """Fractional part {x} = x - floor(x), always in [0, 1)."""
    x = as_quadratic(x)
    return x - math.floor(x)


def dist_nearest_int(x: Number) -> QuadraticIrrational:
    """Distance ||x|| from x to the nearest integer, in [0, 1/2]."""
    f = frac_part(x)
    other = 1 - f
    return f if f <= other else other


_CF_LITERAL = re.compile(r"^\[\s*(-?\d+)\s*;\s*([\d,\s]*?)\s*\|\s*([\d,\s]+?)\s*\]$")


def _minimal_period(period: Tuple[int, ...]) -> Tuple[int, ...]:
    length = len(period)
    for p in range(1, length + 1):
        if length % p == 0 and period == period[:p] * (length // p):
            return period[:p]
    return period


@dataclass(frozen=True)
class ContinuedFraction:
    """Eventually periodic continued fraction [a0; preperiod | period].

    The stored form is canonical: the period has minimal length and the
    preperiod is as short as possible while always keeping a0. Two
    instances are equal exactly when they expand the same number.

    Args:
        preperiod (Tuple[int, ...]): a0 followed by the non-repeating quotients
        period (Tuple[int, ...]): The repeating block, nonempty

    Raises:
        ValueError: If the period is empty or a quotient after a0 is not positive
    """
    preperiod: Tuple[int, ...]
    period: Tuple[int, ...]

    def __post_init__(self):
        pre = tuple(int(t) for t in self.preperiod)
        per = tuple(int(t) for t in self.period)
        if not per:
            raise ValueError("period must be nonempty")
        if any(t < 1 for t in per) or any(t < 1 for t in pre[1:]):
            raise ValueError("partial quotients after a0 must be positive integers")
        if not pre:
            pre, per = per[:1], per[1:] + per[:1]
        per = _minimal_period(per)
        while len(pre) > 1 and pre[-1] == per[-1]:
            pre, per = pre[:-1], per[-1:] + per[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def parse(cls, literal: str) -> "ContinuedFraction":
        """Parse a literal such as "[0;|1]" or "[0;3,2|1,2]".

        Raises:
            ValueError: If the literal is malformed
        """
        match = _CF_LITERAL.match(literal.strip())
        if not match:
            raise ValueError(f"malformed continued fraction literal: {literal!r}")
        head, pre, per = match.groups()

        def split(chunk):
            return tuple(int(t) for t in chunk.replace(" ", "").split(",") if t)

        return cls((int(head),) + split(pre), split(per))

    def __str__(self):
        pre = ",".join(str(t) for t in self.preperiod[1:])
        per = ",".join(str(t) for t in self.period)
        return f"[{self.preperiod[0]};{pre}|{per}]"

    def terms(self) -> Iterator[int]:
        """Iterate over all partial quotients a0, a1, a2, ..."""
        yield from self.preperiod
        while True:
            yield from self.period

    def term(self, i: int) -> int:
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def tail(self, i: int) -> "ContinuedFraction":
        """Complete quotient [a_i; a_{i+1}, ...] as a continued fraction."""
        if i < 0:
            raise ValueError("index must be nonnegative")
        if i < len(self.preperiod):
            return ContinuedFraction(self.preperiod[i:], self.period)
        r = (i - len(self.preperiod)) % len(self.period)
        rotated = self.period[r:] + self.period[:r]
        return ContinuedFraction(rotated[:1], rotated[1:] + rotated[:1])

    def rotation_key(self) -> Tuple[int, ...]:
        """Lexicographically least rotation of the period."""
        per = self.period
        return min(per[r:] + per[:r] for r in range(len(per)))

    @property
    def value(self) -> QuadraticIrrational:
        return qi_from_cf(self)


def cf_from_qi(x: Number) -> ContinuedFraction:
    """Expand a quadratic irrational into its eventually periodic continued fraction.

    (a + b*sqrt(d)) / c is handed to sympy as (a + s*sqrt(b*b*d)) / c with
    s the sign of b.

    Raises:
        ArithmeticDomainError: If x is rational
    """
    x = as_quadratic(x)
    if x.is_rational:
        raise ArithmeticDomainError(f"not a quadratic irrational: {x}")

    terms = sym.continued_fraction_periodic(x.a, x.c, x.b * x.b * x.d, 1 if x.b > 0 else -1)
    return ContinuedFraction(tuple(terms[:-1]), tuple(terms[-1]))


def _from_sympy(expr) -> QuadraticIrrational:
    """Read a sympy expression of the form r0 + r1*sqrt(d) back into a QuadraticIrrational."""
    value = QuadraticIrrational.from_rational(0)
    for term, coefficient in sym.expand(sym.radsimp(expr)).as_coefficients_dict().items():
        if not coefficient.is_Rational:
            raise ArithmeticDomainError(f"not a quadratic irrational: {expr}")
        coefficient = Fraction(int(coefficient.p), int(coefficient.q))
        if term == 1:
            value += coefficient
        elif term.is_Pow and term.exp == sym.S.Half and term.base.is_Integer:
            value += QuadraticIrrational.sqrt(int(term.base)) * coefficient
        else:
            raise ArithmeticDomainError(f"not a quadratic irrational: {expr}")
    return value


def qi_from_cf(cf: ContinuedFraction) -> QuadraticIrrational:
    """Exact value of an eventually periodic continued fraction."""
    return _from_sympy(sym.continued_fraction_reduce(list(cf.preperiod) + [list(cf.period)]))


def _as_cf(alpha) -> ContinuedFraction:
    return alpha if isinstance(alpha, ContinuedFraction) else cf_from_qi(alpha)


def iter_convergents(alpha) -> Iterator[Tuple[int, int]]:
    """Iterate over the convergents (n_i, m_i) of alpha or of a ContinuedFraction."""
    for convergent in sym.continued_fraction_convergents(_as_cf(alpha).terms()):
        yield int(convergent.p), int(convergent.q)


def convergents(cf, k: int) -> List[Tuple[int, int]]:
    """First k convergents (n_i, m_i), i = 0..k-1.

    Args:
        cf (ContinuedFraction | QuadraticIrrational): Expansion or its value
        k (int): Number of convergents, at least 1

    Returns:
        List[Tuple[int, int]]: Numerator and denominator pairs
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    return list(islice(iter_convergents(cf), k))


def convergent_denominators(alpha, upto: int) -> List[int]:
    """Distinct convergent denominators of alpha not exceeding upto, increasing."""
    result: List[int] = []
    for _, m in iter_convergents(alpha):
        if m > upto:
            break
        if not result or result[-1] != m:
            result.append(m)
    return result


def is_convergent_denominator(alpha, m: int) -> bool:
    return m in convergent_denominators(alpha, m)


def smallest_better(alpha, m: int) -> int:
    """Next convergent denominator after m.

    This is the smallest m' > m with ||m'alpha|| < ||m alpha||.

    Raises:
        ConvergentError: If m is not a convergent denominator of alpha
    """
    found = False
    for _, den in iter_convergents(alpha):
        if den > m:
            if not found:
                raise ConvergentError(f"{m} is not a convergent denominator of {alpha}")
            return den
        found = found or den == m
