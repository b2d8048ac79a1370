"""Builders for the exponent and Fibonacci tables, with TSV and JSON rendering.

A Table holds exact values; rendering is the only place where irrationals
are turned into decimal strings.
"""
import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

from sturmian.exact import GOLDEN_ANGLE, QuadraticIrrational, cf_from_qi, dist_nearest_int
from sturmian.exceptions import ConfigurationError
from sturmian.fibonacci import fib, lp_closed, min_period_fj_closed, sqrt5_deviation
from sturmian.formulas import guaranteed_exponent, k_max, k_mn
from sturmian.words import SturmianSpec

TABLE_IDS = ("km", "kmn", "kmi", "norms", "lp", "fibperiods", "sqrt5dev")

DEFAULT_RANGES: Dict[str, Dict[str, List[int]]] = {
    "km": {"m": list(range(1, 22))},
    "kmn": {"m": [3, 10], "n": list(range(0, 21))},
    "kmi": {"m": [10], "i": list(range(0, 10))},
    "norms": {"m": list(range(1, 19))},
    "lp": {"j": list(range(2, 12))},
    "fibperiods": {"j": list(range(3, 17))},
    "sqrt5dev": {"j": list(range(2, 12))},
}


@dataclass
class Table:
    """Rows of exact values under named columns.

    The first ``key_width`` columns identify a row; the rest are its values.
    """
    table_id: str
    columns: Tuple[str, ...]
    key_width: int
    alpha: QuadraticIrrational
    rows: List[Tuple] = field(default_factory=list)

    def column(self, name: str) -> list:
        index = self.columns.index(name)
        return [row[index] for row in self.rows]


def render_value(value, digits: int) -> str:
    if isinstance(value, QuadraticIrrational):
        return str(value.as_fraction()) if value.is_rational else value.decimal(digits)
    return str(value)


def _json_value(value, digits: int):
    if isinstance(value, QuadraticIrrational):
        return {"a": value.a, "b": value.b, "c": value.c, "d": value.d, "approx": value.decimal(digits)}
    if isinstance(value, Fraction):
        return str(value)
    return value


def render_tsv(table: Table, digits: int = 6) -> str:
    """Header line followed by one tab-separated line per row."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter="\t", lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow(render_value(value, digits) for value in row)
    return buffer.getvalue()


def render_json(table: Table, digits: int = 6) -> str:
    """JSON document {"table", "alpha", "rows": [{"key", "value"}]}."""
    rows = []
    for row in table.rows:
        key = dict(zip(table.columns[:table.key_width], row[:table.key_width]))
        values = [_json_value(v, digits) for v in row[table.key_width:]]
        if len(values) == 1:
            value = values[0]
        else:
            value = dict(zip(table.columns[table.key_width:], values))
        rows.append({"key": key, "value": value})
    document = {"table": table.table_id, "alpha": str(cf_from_qi(table.alpha)), "rows": rows}
    return json.dumps(document, indent=2) + "\n"


def build_km(alpha: QuadraticIrrational, ms: Sequence[int]) -> Table:
    table = Table("km", ("m", "k_m"), 1, alpha)
    table.rows = [(m, k_max(alpha, m)) for m in ms]
    return table


def build_kmn(spec: SturmianSpec, ms: Sequence[int], ns: Sequence[int]) -> Table:
    table = Table("kmn", ("m", "n", "k_mn"), 2, spec.alpha)
    table.rows = [(m, n, k_mn(spec, m, n).k) for m in ms for n in ns]
    return table


def build_kmi(alpha: QuadraticIrrational, ms: Sequence[int], is_: Sequence[int]) -> Table:
    table = Table("kmi", ("m", "i", "k_m_i"), 2, alpha)
    table.rows = [(m, i, guaranteed_exponent(alpha, m, i)) for m in ms for i in is_ if i <= m]
    return table


def build_norms(alpha: QuadraticIrrational, ms: Sequence[int]) -> Table:
    table = Table("norms", ("m", "norm"), 1, alpha)
    table.rows = [(m, dist_nearest_int(m * alpha)) for m in ms]
    return table


def _require_golden(alpha: QuadraticIrrational, table_id: str):
    if alpha != GOLDEN_ANGLE:
        raise ConfigurationError(f"table {table_id} is only defined for the Fibonacci word (--alpha fib)")


def build_lp(alpha: QuadraticIrrational, js: Sequence[int]) -> Table:
    _require_golden(alpha, "lp")
    table = Table("lp", ("j", "F_j", "lp"), 1, alpha)
    table.rows = [(j, fib(j), lp_closed(j)) for j in js]
    return table


def build_fibperiods(alpha: QuadraticIrrational, js: Sequence[int]) -> Table:
    _require_golden(alpha, "fibperiods")
    table = Table("fibperiods", ("j", "n", "F_n"), 1, alpha)
    for j in js:
        period = min_period_fj_closed(j)
        table.rows.append((j, period.j, period.value))
    return table


def build_sqrt5dev(alpha: QuadraticIrrational, js: Sequence[int]) -> Table:
    _require_golden(alpha, "sqrt5dev")
    table = Table("sqrt5dev", ("j", "F_j", "lp", "deviation_x100"), 1, alpha)
    table.rows = [(j, fib(j), lp_closed(j), 100 * sqrt5_deviation(j)) for j in js]
    return table


_BUILDERS: Dict[str, Callable[[SturmianSpec, Dict[str, List[int]]], Table]] = {
    "km": lambda spec, r: build_km(spec.alpha, r["m"]),
    "kmn": lambda spec, r: build_kmn(spec, r["m"], r["n"]),
    "kmi": lambda spec, r: build_kmi(spec.alpha, r["m"], r["i"]),
    "norms": lambda spec, r: build_norms(spec.alpha, r["m"]),
    "lp": lambda spec, r: build_lp(spec.alpha, r["j"]),
    "fibperiods": lambda spec, r: build_fibperiods(spec.alpha, r["j"]),
    "sqrt5dev": lambda spec, r: build_sqrt5dev(spec.alpha, r["j"]),
}


def build_table(table_id: str, spec: SturmianSpec, ranges: Dict[str, List[int]] = None) -> Table:
    """Build a table by id, filling missing ranges from DEFAULT_RANGES.

    Raises:
        ConfigurationError: If the id is unknown or the table does not apply to the angle
    """
    if table_id not in _BUILDERS:
        raise ConfigurationError(f"unknown table {table_id!r}; choose from {', '.join(TABLE_IDS)}")
    resolved = dict(DEFAULT_RANGES[table_id])
    resolved.update({k: v for k, v in (ranges or {}).items() if k in resolved and v is not None})
    return _BUILDERS[table_id](spec, resolved)
