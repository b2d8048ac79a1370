"""Deterministic SVG diagrams of interval partitions and rotations.

Coordinates are rendered with a fixed number of decimals. Partition
diagrams are computed exactly; the rotation circle goes through mpmath
at a fixed working precision, so the output bytes depend only on the input.
"""
from fractions import Fraction
from typing import List
from xml.sax.saxutils import escape

import mpmath

from sturmian.config import SturmianConfig
from sturmian.exact import QuadraticIrrational
from sturmian.exceptions import PreconditionError
from sturmian.words import Convention, SturmianSpec, partition

PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN"
"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg width="%(width)d" height="%(height)d" viewBox="0 0 %(width)d %(height)d" version="1.1" xmlns="http://www.w3.org/2000/svg">
<rect x="0" y="0" width="%(width)d" height="%(height)d" style="fill:#ffffff"/>
"""

POSTAMBLE = """\
</svg>
"""

HEAVY_FILL = "#f4a582"
LIGHT_FILL = "#92c5de"
B_STROKE = "#2166ac"
A_STROKE = "#b2182b"

_WORK_DPS = 50


def _fixed_mpf(value, digits: int) -> str:
    scaled = mpmath.floor(abs(value) * mpmath.mpf(10) ** digits + mpmath.mpf(1) / 2)
    rounded = int(scaled)
    sign = "-" if value < 0 and rounded != 0 else ""
    whole, part = divmod(rounded, 10 ** digits)
    return f"{sign}{whole}.{part:0{digits}d}" if digits else f"{sign}{whole}"


def _to_mpf(value: QuadraticIrrational):
    return (mpmath.mpf(value.a) + value.b * mpmath.sqrt(value.d)) / value.c


class SVG:
    """Accumulates SVG elements and renders them between a fixed preamble and postamble.

    Args:
        width (int): Canvas width in user units
        height (int): Canvas height in user units
        digits (int): Decimals used for every coordinate
    """

    def __init__(self, width: int, height: int, digits: int = 6):
        self.width = width
        self.height = height
        self.digits = digits
        self.commands: List[str] = []

    def fmt(self, value) -> str:
        if isinstance(value, mpmath.mpf):
            return _fixed_mpf(value, self.digits)
        if isinstance(value, (int, Fraction)):
            value = QuadraticIrrational.from_rational(value)
        return value.decimal(self.digits)

    def rect(self, x, y, width, height, fill: str):
        self.commands.append(
            f'<rect x="{self.fmt(x)}" y="{self.fmt(y)}" width="{self.fmt(width)}" '
            f'height="{self.fmt(height)}" style="fill:{fill};stroke:#000000;stroke-width:0.5"/>'
        )

    def line(self, x1, y1, x2, y2, color: str = "#000000", width: float = 1):
        self.commands.append(
            f'<line x1="{self.fmt(x1)}" y1="{self.fmt(y1)}" x2="{self.fmt(x2)}" y2="{self.fmt(y2)}" '
            f'style="stroke:{color};stroke-width:{width}"/>'
        )

    def circle(self, cx, cy, r, fill: str = "none", stroke: str = "#000000"):
        self.commands.append(
            f'<circle cx="{self.fmt(cx)}" cy="{self.fmt(cy)}" r="{self.fmt(r)}" '
            f'style="fill:{fill};stroke:{stroke};stroke-width:1"/>'
        )

    def arc(self, x1, y1, x2, y2, r, large: bool, color: str, width: float = 4):
        self.commands.append(
            f'<path d="M {self.fmt(x1)} {self.fmt(y1)} A {self.fmt(r)} {self.fmt(r)} 0 {int(large)} 1 '
            f'{self.fmt(x2)} {self.fmt(y2)}" style="fill:none;stroke:{color};stroke-width:{width}"/>'
        )

    def text(self, x, y, text: str, size: int = 10, rotate: bool = False, anchor: str = "middle"):
        transform = f' transform="rotate(-90 {self.fmt(x)} {self.fmt(y)})"' if rotate else ""
        self.commands.append(
            f'<text x="{self.fmt(x)}" y="{self.fmt(y)}" font-size="{size}" font-family="monospace" '
            f'text-anchor="{anchor}"{transform}>{escape(text)}</text>'
        )

    def render(self) -> str:
        body = "".join(command + "\n" for command in self.commands)
        return PREAMBLE % {"width": self.width, "height": self.height} + body + POSTAMBLE


def render_partition(alpha: QuadraticIrrational, m: int, convention: Convention = Convention.ZERO_IN_B,
                     config: SturmianConfig = None) -> str:
    """Unit segment cut at {-i*alpha}, 0 <= i <= m, with intervals shaded heavy or light.

    Each interval carries its factor as a vertical label and each tick the
    index i of the point {-i*alpha} it marks.

    Raises:
        PreconditionError: If m is outside [1, config.svg_max_period]
    """
    config = config or SturmianConfig()
    if not 1 <= m <= config.svg_max_period:
        raise PreconditionError(f"m must lie in [1, {config.svg_max_period}], got {m}")
    parts = partition(alpha, m, convention)

    margin = 40
    span = config.svg_width - 2 * margin
    bar_top, bar_height = 30, 30
    label_y = bar_top + bar_height + 12 + 8 * len(str(m))
    height = max(config.svg_height, label_y + 8 * m + 20)
    svg = SVG(config.svg_width, height, config.svg_digits)
    svg.text(margin, 16, f"alpha = {alpha}, m = {m}, {Convention(convention).value}", anchor="start")

    for interval in parts.intervals:
        x = margin + interval.left * span
        svg.rect(x, bar_top, interval.length * span, bar_height, HEAVY_FILL if interval.heavy else LIGHT_FILL)
        svg.line(x, bar_top - 5, x, bar_top + bar_height + 5)
        svg.text(x, bar_top + bar_height + 16, str(interval.left_order), size=8)
        middle = margin + (interval.left + interval.right) / 2 * span
        svg.text(middle, label_y, interval.factor, rotate=True, anchor="end")
    svg.line(margin + span, bar_top - 5, margin + span, bar_top + bar_height + 5)
    return svg.render()


def render_rotation(spec: SturmianSpec, steps: int = 8, config: SturmianConfig = None) -> str:
    """Torus drawn as a circle with I_b, I_a and the first points of the orbit of rho.

    The torus value x sits at angle 2*pi*x clockwise from the top.
    """
    config = config or SturmianConfig()
    if steps < 0:
        raise PreconditionError("steps must be nonnegative")
    radius = config.svg_radius
    margin = 40
    size = 2 * (radius + margin)
    svg = SVG(size, size, config.svg_digits)

    with mpmath.workdps(_WORK_DPS):
        cx = cy = mpmath.mpf(radius + margin)
        r = mpmath.mpf(radius)

        def position(value, scale=1):
            turn = 2 * mpmath.pi * _to_mpf(value)
            return cx + scale * r * mpmath.sin(turn), cy - scale * r * mpmath.cos(turn)

        zero = QuadraticIrrational(0)
        split = 1 - spec.alpha
        x0, y0 = position(zero)
        xs, ys = position(split)
        svg.circle(cx, cy, r, stroke="#999999")
        svg.arc(x0, y0, xs, ys, r, split > Fraction(1, 2), B_STROKE)
        svg.arc(xs, ys, x0, y0, r, split < Fraction(1, 2), A_STROKE)
        svg.text(margin, 16, spec.describe(), anchor="start")

        # the convention decides which arc owns the point 0
        svg.circle(x0, y0, mpmath.mpf(5), fill=B_STROKE if spec.zero_in_b else A_STROKE)
        svg.circle(xs, ys, mpmath.mpf(5), fill=A_STROKE if spec.zero_in_b else B_STROKE)

        for n in range(steps):
            value = spec.point(n).value
            px, py = position(value)
            svg.circle(px, py, mpmath.mpf(3), fill="#000000")
            lx, ly = position(value, mpmath.mpf(radius + 18) / radius)
            svg.text(lx, ly + 4, str(n), size=9)
        return svg.render()
