"""Sturmian words as codings of irrational rotations.

A Sturmian word s_{alpha,rho} reads letter b at position n when the point
{rho + n*alpha} of the torus [0, 1) falls in I_b, and letter a otherwise.
Under ``Convention.ZERO_IN_B`` I_b = [0, 1 - alpha); under
``Convention.ZERO_IN_A`` I_b = (0, 1 - alpha]. The two words differ only
at the orbit points 0 and {-alpha}.
"""
import bisect
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from sturmian.exact import GOLDEN_ANGLE, QuadraticIrrational
from sturmian.oracle import ParikhVector
from sturmian.utils import check_angle, requires_irrational_angle


class Convention(Enum):
    ZERO_IN_B = "zero-in-b"
    ZERO_IN_A = "zero-in-a"


class Weight(Enum):
    HEAVY = "heavy"
    LIGHT = "light"


@dataclass(frozen=True)
class TorusPoint:
    """The torus point {u + v*alpha} with rational u and v.

    u is reduced on construction so that the value lies in [0, 1); since
    alpha is irrational the pair (u, v) is then unique.
    """
    alpha: QuadraticIrrational
    u: Fraction
    v: Fraction

    def __post_init__(self):
        u, v = Fraction(self.u), Fraction(self.v)
        u -= math.floor(u + v * self.alpha)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @property
    def value(self) -> QuadraticIrrational:
        return self.u + self.v * self.alpha

    @property
    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def shifted(self, steps: int) -> "TorusPoint":
        """The point {x + steps*alpha}."""
        return TorusPoint(self.alpha, self.u, self.v + steps)

    def orbit_index(self) -> Optional[int]:
        """Return k when the point equals {k*alpha}, otherwise None."""
        if self.u.denominator != 1 or self.v.denominator != 1:
            return None
        return int(self.v)


@dataclass(frozen=True)
class SturmianSpec:
    """Angle, initial point and endpoint convention of a Sturmian word.

    The initial point is rho = rho_u + rho_v*alpha, stored reduced so that
    0 <= rho < 1. The default initial point rho = alpha gives the
    characteristic word.

    Raises:
        ArithmeticDomainError: If alpha is not an irrational angle in (0, 1)
    """
    alpha: QuadraticIrrational
    rho_u: Fraction = Fraction(0)
    rho_v: Fraction = Fraction(1)
    convention: Convention = Convention.ZERO_IN_B

    def __post_init__(self):
        alpha = check_angle(self.alpha)
        u, v = Fraction(self.rho_u), Fraction(self.rho_v)
        u -= math.floor(u + v * alpha)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "rho_u", u)
        object.__setattr__(self, "rho_v", v)
        object.__setattr__(self, "convention", Convention(self.convention))

    @classmethod
    def characteristic(cls, alpha, convention: Convention = Convention.ZERO_IN_B) -> "SturmianSpec":
        return cls(alpha, Fraction(0), Fraction(1), convention)

    @classmethod
    def fibonacci(cls) -> "SturmianSpec":
        """The Fibonacci word f = s_{phi-1, phi-1}."""
        return cls.characteristic(GOLDEN_ANGLE)

    @property
    def rho(self) -> QuadraticIrrational:
        return self.rho_u + self.rho_v * self.alpha

    @property
    def zero_in_b(self) -> bool:
        return self.convention is Convention.ZERO_IN_B

    def point(self, n: int) -> TorusPoint:
        """The torus point {rho + n*alpha}."""
        return TorusPoint(self.alpha, self.rho_u, self.rho_v + n)

    def exceptional_index(self, n: int, m: int) -> Optional[int]:
        """Return r >= 0 with {rho + n*alpha} = {-r*m*alpha}, or None."""
        k = self.point(n).orbit_index()
        if k is None or k > 0 or (-k) % m:
            return None
        return -k // m

    def describe(self) -> str:
        return f"alpha={self.alpha}, rho={self.rho}, convention={self.convention.value}"


class _Orbit:
    """Exact floors and ceilings of x + t*alpha for integer t.

    With x = u + v*alpha the value x + t*alpha is
    (r0 + t*r1 + (s0 + t*s1)*sqrt(d)) / denom, so each floor costs one isqrt.
    """

    def __init__(self, alpha: QuadraticIrrational, u: Fraction, v: Fraction):
        a, b, c, d = alpha.a, alpha.b, alpha.c, alpha.d
        un, ud = u.numerator, u.denominator
        vn, vd = v.numerator, v.denominator
        self.denom = ud * vd * c
        self.r0 = un * vd * c + vn * ud * a
        self.r1 = vd * ud * a
        self.s0 = vn * ud * b
        self.s1 = vd * ud * b
        self.d = d

    def floor(self, t: int) -> int:
        r = self.r0 + t * self.r1
        s = self.s0 + t * self.s1
        if s == 0:
            return r // self.denom
        root = math.isqrt(s * s * self.d)
        if s > 0:
            return (r + root) // self.denom
        return (r - root - 1) // self.denom

    def ceil(self, t: int) -> int:
        r = -(self.r0 + t * self.r1)
        s = -(self.s0 + t * self.s1)
        if s == 0:
            return -(r // self.denom)
        root = math.isqrt(s * s * self.d)
        if s > 0:
            return -((r + root) // self.denom)
        return -((r - root - 1) // self.denom)

    def letters(self, start: int, length: int, convention: Convention) -> str:
        # a iff the integer part steps up, i.e. the point lies in I_a
        step = self.floor if convention is Convention.ZERO_IN_B else self.ceil
        out = []
        previous = step(start)
        for t in range(start + 1, start + length + 1):
            current = step(t)
            out.append("a" if current != previous else "b")
            previous = current
        return "".join(out)


def _in_b(offset: QuadraticIrrational, alpha: QuadraticIrrational, convention: Convention) -> bool:
    if convention is Convention.ZERO_IN_B:
        return offset < 1 - alpha
    return 0 < offset <= 1 - alpha


def letter_at(spec: SturmianSpec, n: int) -> str:
    """Letter at position n, decided by exact membership of {rho + n*alpha} in I_b."""
    if n < 0:
        raise ValueError("position must be nonnegative")
    return "b" if _in_b(spec.point(n).value, spec.alpha, spec.convention) else "a"


def prefix(spec: SturmianSpec, length: int, start: int = 0) -> str:
    """Letters at positions start .. start+length-1.

    Uses the mechanical-word form (differences of exact floors or ceilings
    of rho + n*alpha), which is much faster than per-letter comparisons.
    """
    if length < 0 or start < 0:
        raise ValueError("length and start must be nonnegative")
    return _Orbit(spec.alpha, spec.rho_u, spec.rho_v).letters(start, length, spec.convention)


def decode(alpha: QuadraticIrrational, point: TorusPoint, m: int, convention: Convention) -> str:
    """The m letters coded by the orbit of an arbitrary torus point."""
    return _Orbit(alpha, point.u, point.v).letters(0, m, convention)


def factor(spec: SturmianSpec, n: int, m: int) -> str:
    """Factor of length m starting at position n.

    Letter i is b exactly when {rho + n*alpha} lies in the rotated interval
    I_b^{-i} = I({-i*alpha}, {-(i+1)*alpha}), so the whole factor is read
    off the single point {rho + n*alpha}.
    """
    if m < 1:
        raise ValueError("factor length must be positive")
    x = spec.point(n)
    letters = []
    for i in range(m):
        left = TorusPoint(spec.alpha, Fraction(0), Fraction(-i))
        offset = TorusPoint(spec.alpha, x.u - left.u, x.v - left.v).value
        letters.append("b" if _in_b(offset, spec.alpha, spec.convention) else "a")
    return "".join(letters)


def heavy_parikh(alpha: QuadraticIrrational, m: int) -> ParikhVector:
    count_a = math.ceil(m * alpha)
    return ParikhVector(count_a, m - count_a)


def light_parikh(alpha: QuadraticIrrational, m: int) -> ParikhVector:
    count_a = math.floor(m * alpha)
    return ParikhVector(count_a, m - count_a)


@dataclass(frozen=True)
class Interval:
    """One labeled subinterval L_k(m) of the torus."""
    index: int
    left: QuadraticIrrational
    right: QuadraticIrrational
    left_order: int
    factor: str
    parikh: ParikhVector
    heavy: bool

    @property
    def length(self) -> QuadraticIrrational:
        return self.right - self.left


@dataclass(frozen=True)
class IntervalPartition:
    """The m+1 subintervals cut by 0, {-alpha}, ..., {-m*alpha}.

    Interval k is in bijection with the factor of length m coded by any
    point it contains; factors decrease lexicographically with k.
    """
    alpha: QuadraticIrrational
    m: int
    convention: Convention
    boundaries: Tuple[QuadraticIrrational, ...]
    intervals: Tuple[Interval, ...]
    max_len: QuadraticIrrational

    @property
    def factors(self) -> List[str]:
        return [interval.factor for interval in self.intervals]

    @property
    def lengths(self) -> frozenset:
        return frozenset(interval.length for interval in self.intervals)

    @property
    def heavy_parikh(self) -> ParikhVector:
        return heavy_parikh(self.alpha, self.m)

    @property
    def light_parikh(self) -> ParikhVector:
        return light_parikh(self.alpha, self.m)

    def locate(self, point: QuadraticIrrational) -> int:
        """Index of the interval containing a torus point in [0, 1)."""
        if not 0 <= point < 1:
            raise ValueError(f"{point} is not a torus point")
        if self.convention is Convention.ZERO_IN_B:
            return bisect.bisect_right(self.boundaries, point) - 1
        if point == 0:
            point = QuadraticIrrational(1)
        return bisect.bisect_left(self.boundaries, point) - 1


@requires_irrational_angle
def partition(alpha: QuadraticIrrational, m: int, convention: Convention = Convention.ZERO_IN_B) -> IntervalPartition:
    """Build the Sturmian bijection between length-m factors and torus intervals.

    Args:
        alpha (QuadraticIrrational): Irrational angle in (0, 1)
        m (int): Factor length, at least 1
        convention (Convention): Endpoint convention used to decode factors

    Returns:
        IntervalPartition: Intervals sorted left to right, each with its
        factor, Parikh vector and heavy flag
    """
    if m < 1:
        raise ValueError("m must be positive")
    convention = Convention(convention)
    points = sorted(
        (TorusPoint(alpha, Fraction(0), Fraction(-i)) for i in range(m + 1)),
        key=lambda p: p.value,
    )
    values = [p.value for p in points]
    boundaries = tuple(values) + (QuadraticIrrational(1),)
    threshold = TorusPoint(alpha, Fraction(0), Fraction(-m)).value
    heavy_vector, light_vector = heavy_parikh(alpha, m), light_parikh(alpha, m)
    origin = TorusPoint(alpha, Fraction(0), Fraction(0))

    intervals = []
    for k in range(m + 1):
        if convention is Convention.ZERO_IN_B:
            endpoint = points[k]
        else:
            endpoint = points[k + 1] if k < m else origin
        heavy = boundaries[k] >= threshold
        intervals.append(Interval(
            index=k,
            left=boundaries[k],
            right=boundaries[k + 1],
            left_order=-int(points[k].v),
            factor=decode(alpha, endpoint, m, convention),
            parikh=heavy_vector if heavy else light_vector,
            heavy=heavy,
        ))

    max_len = max(interval.length for interval in intervals)
    return IntervalPartition(alpha, m, convention, boundaries, tuple(intervals), max_len)


def classify_position(spec: SturmianSpec, n: int, m: int) -> Weight:
    """Whether the length-m factor at position n is heavy or light.

    Away from the boundary points {-i*alpha}, 0 <= i <= m, the answer is a
    single comparison with {-m*alpha}; on a boundary the factor is decoded
    and its Parikh vector compared with the heavy one.
    """
    x = spec.point(n)
    k = x.orbit_index()
    if k is None or not -m <= k <= 0:
        threshold = TorusPoint(spec.alpha, Fraction(0), Fraction(-m)).value
        return Weight.HEAVY if x.value > threshold else Weight.LIGHT
    vector = ParikhVector.of(factor(spec, n, m))
    return Weight.HEAVY if vector == heavy_parikh(spec.alpha, m) else Weight.LIGHT
