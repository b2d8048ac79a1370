import functools
import re
from fractions import Fraction
from typing import List, Tuple

from sturmian.exact import GOLDEN_ANGLE, ContinuedFraction, QuadraticIrrational, as_quadratic
from sturmian.exceptions import ArithmeticDomainError, ConfigurationError


def check_angle(alpha) -> QuadraticIrrational:
    """Validate a rotation angle.

    Args:
        alpha: Candidate angle

    Returns:
        QuadraticIrrational: The angle as a quadratic irrational

    Raises:
        ArithmeticDomainError: If alpha is rational or outside (0, 1)
    """
    alpha = as_quadratic(alpha)
    if alpha.is_rational:
        raise ArithmeticDomainError(f"rotation angle must be irrational, got {alpha}")
    if not 0 < alpha < 1:
        raise ArithmeticDomainError(f"rotation angle must lie in (0, 1), got {alpha}")
    return alpha


def requires_irrational_angle(func):
    """Decorator to check that the alpha argument is an irrational angle in (0, 1)."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        alpha = kwargs["alpha"] if "alpha" in kwargs else args[0]
        check_angle(alpha)
        return func(*args, **kwargs)
    return wrapper


_QUADRUPLE = re.compile(r"^\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(\d+)\s*\)$")


def parse_alpha(text: str) -> QuadraticIrrational:
    """Parse an angle given as "fib", "(a,b,c,d)" or a continued fraction literal.

    Args:
        text (str): The literal, e.g. "fib", "(-1,1,2,3)" or "[0;|2,1]"

    Returns:
        QuadraticIrrational: A validated angle in (0, 1)

    Raises:
        ConfigurationError: If the literal cannot be parsed or is not a valid angle
    """
    text = text.strip()
    try:
        if text.lower() == "fib":
            alpha = GOLDEN_ANGLE
        elif text.startswith("["):
            alpha = ContinuedFraction.parse(text).value
        else:
            match = _QUADRUPLE.match(text)
            if not match:
                raise ValueError(f"expected 'fib', '(a,b,c,d)' or '[a0;pre|period]', got {text!r}")
            alpha = QuadraticIrrational(*(int(g) for g in match.groups()))
        return check_angle(alpha)
    except (ValueError, ZeroDivisionError, ArithmeticDomainError) as e:
        raise ConfigurationError(f"invalid alpha {text!r}: {e}") from e


def parse_rho(text: str) -> Tuple[Fraction, Fraction]:
    """Parse an initial point written as a rational combination of 1 and alpha.

    Accepted forms include "alpha", "0", "1/3", "1-alpha" and "1/2+3*alpha".

    Returns:
        Tuple[Fraction, Fraction]: The pair (u, v) with rho = u + v*alpha

    Raises:
        ConfigurationError: If the literal cannot be parsed
    """
    compact = text.replace(" ", "")
    terms = re.findall(r"[+-]?[^+-]+", compact)
    if not compact or "".join(terms) != compact:
        raise ConfigurationError(f"invalid rho {text!r}")

    u, v = Fraction(0), Fraction(0)
    try:
        for term in terms:
            sign = -1 if term.startswith("-") else 1
            body = term.lstrip("+-")
            if body.endswith("alpha"):
                coefficient = body[:-len("alpha")].rstrip("*") or "1"
                v += sign * Fraction(coefficient)
            else:
                u += sign * Fraction(body)
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigurationError(f"invalid rho {text!r}: {e}") from e
    return u, v


def parse_range(text: str) -> List[int]:
    """Expand a range literal such as "1..21", "3,10" or "0..5,8".

    Raises:
        ConfigurationError: If the literal is malformed or a range is reversed
    """
    values: List[int] = []
    for chunk in text.replace(" ", "").split(","):
        if not chunk:
            continue
        try:
            if ".." in chunk:
                low, high = (int(part) for part in chunk.split("..", 1))
                if low > high:
                    raise ValueError(f"reversed range {chunk!r}")
                values.extend(range(low, high + 1))
            else:
                values.append(int(chunk))
        except ValueError as e:
            raise ConfigurationError(f"invalid range {text!r}: {e}") from e
    if not values:
        raise ConfigurationError(f"empty range {text!r}")
    return values
