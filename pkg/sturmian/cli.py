"""Command-line front end.

Data (words, tables, reports, SVG) goes to stdout and diagnostics to
stderr. Exit codes: 0 success, 1 verification failure or library error,
2 usage or configuration error, 3 verification budget exceeded.
"""
import argparse
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from sturmian.config import SturmianConfig
from sturmian.exact import QuadraticIrrational, cf_from_qi
from sturmian.exceptions import BudgetExceededError, ConfigurationError, SturmianError
from sturmian.lagrange import lagrange_exact, lagrange_numeric
from sturmian.logger import Logger
from sturmian.svg import render_partition, render_rotation
from sturmian.tables import TABLE_IDS, build_table, render_json, render_tsv
from sturmian.utils import parse_alpha, parse_range, parse_rho
from sturmian.verify import VERIFY_TARGETS, CellResult, Verifier, VerifyReport
from sturmian.words import Convention, SturmianSpec, prefix

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class RunConfig:
    """Resolved command line: the word, the command target and its ranges."""
    command: str
    spec: SturmianSpec
    target: Optional[str] = None
    ranges: Dict[str, List[int]] = field(default_factory=dict)
    output_format: str = "tsv"
    digits: int = 6
    length: int = 34
    start: int = 0
    depth: int = 60
    m: int = 6
    steps: int = 8
    jobs: int = 1
    max_letters: int = 20_000_000
    settings: SturmianConfig = field(default_factory=SturmianConfig)


def _add_word_options(parser: argparse.ArgumentParser, settings: SturmianConfig):
    parser.add_argument("--alpha", default=settings.default_alpha,
                        help='angle: "fib", "(a,b,c,d)" for (a+b*sqrt(d))/c, or "[a0;pre|period]"')
    parser.add_argument("--rho", default="alpha", help='initial point u+v*alpha, e.g. "alpha", "0", "1/3"')
    parser.add_argument("--convention", default=settings.default_convention,
                        choices=[c.value for c in Convention])


def _add_range_options(parser: argparse.ArgumentParser):
    for name in ("m", "n", "i", "j"):
        parser.add_argument(f"--{name}", dest=f"range_{name}", metavar="RANGE",
                            help=f'values of {name}, e.g. "1..21" or "3,10"')


def build_parser(settings: SturmianConfig = None) -> argparse.ArgumentParser:
    settings = settings or SturmianConfig()
    parser = argparse.ArgumentParser(
        prog="sturmian",
        description="Abelian powers, repetitions and Lagrange constants of Sturmian words.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="enable debug logging")
    parser.add_argument("--log-level", default=settings.level, choices=["DEBUG", "INFO", "WARN", "ERROR"])
    commands = parser.add_subparsers(dest="command", required=True)

    word = commands.add_parser("word", help="print a factor of a Sturmian word")
    _add_word_options(word, settings)
    word.add_argument("--len", dest="length", type=int, default=34)
    word.add_argument("--start", type=int, default=0)

    table = commands.add_parser("table", help="print one of the exponent tables")
    table.add_argument("table_id", choices=TABLE_IDS)
    _add_word_options(table, settings)
    _add_range_options(table)
    table.add_argument("--format", dest="output_format", choices=["tsv", "json"], default="tsv")
    table.add_argument("--digits", type=int, default=settings.digits)

    lagrange = commands.add_parser("lagrange", help="Lagrange constant and abelian critical exponent")
    lagrange.add_argument("--alpha", default=settings.default_alpha)
    lagrange.add_argument("--depth", type=int, default=settings.lagrange_depth)
    lagrange.add_argument("--digits", type=int, default=settings.digits)

    verify = commands.add_parser("verify", help="check closed forms against brute-force scans")
    verify.add_argument("target", choices=VERIFY_TARGETS)
    _add_word_options(verify, settings)
    _add_range_options(verify)
    verify.add_argument("--len", dest="length", type=int, help="largest factor length for the factors target")
    verify.add_argument("--jobs", type=int, default=settings.verify_jobs)
    verify.add_argument("--max-letters", type=int, default=settings.verify_max_letters)

    svg = commands.add_parser("svg", help="draw an interval partition or the rotation circle")
    svg.add_argument("view", choices=["partition", "rotation"])
    _add_word_options(svg, settings)
    svg.add_argument("--m", type=int, default=6)
    svg.add_argument("--steps", type=int, default=8)
    return parser


def build_run_config(args: argparse.Namespace, settings: SturmianConfig = None) -> RunConfig:
    """Turn parsed arguments into a RunConfig.

    Raises:
        ConfigurationError: If a literal cannot be parsed
    """
    settings = settings or SturmianConfig()
    alpha = parse_alpha(args.alpha)
    rho_u, rho_v = parse_rho(getattr(args, "rho", "alpha"))
    convention = Convention(getattr(args, "convention", settings.default_convention))
    config = RunConfig(command=args.command, spec=SturmianSpec(alpha, rho_u, rho_v, convention), settings=settings)

    config.target = getattr(args, "table_id", None) or getattr(args, "target", None) or getattr(args, "view", None)
    for name in ("m", "n", "i", "j"):
        literal = getattr(args, f"range_{name}", None)
        if literal is not None:
            config.ranges[name] = parse_range(literal)
    if args.command == "verify" and args.length is not None:
        config.ranges["length"] = list(range(1, args.length + 1))

    for name in ("output_format", "digits", "start", "depth", "m", "steps", "jobs", "max_letters"):
        value = getattr(args, name, None)
        if value is not None:
            setattr(config, name, value)
    if args.command == "word":
        config.length = args.length
    if config.digits < 0 or config.length < 0 or config.start < 0:
        raise ConfigurationError("digits, --len and --start must be nonnegative")
    return config


def cmd_word(config: RunConfig) -> str:
    return prefix(config.spec, config.length, start=config.start) + "\n"


def cmd_table(config: RunConfig) -> str:
    table = build_table(config.target, config.spec, config.ranges)
    if config.output_format == "json":
        return render_json(table, config.digits)
    return render_tsv(table, config.digits)


def cmd_lagrange(config: RunConfig) -> str:
    cf = cf_from_qi(config.spec.alpha)
    value = lagrange_exact(cf)
    bound = QuadraticIrrational.from_rational(lagrange_numeric(cf, config.depth))
    lines = [
        ("alpha", str(config.spec.alpha)),
        ("cf", str(cf)),
        ("lagrange", str(value.exact)),
        ("approx", value.approx(config.digits)),
        ("witness_residue", str(value.witness_residue)),
        ("numeric_lower_bound", bound.decimal(config.digits)),
    ]
    return "".join(f"{key}\t{text}\n" for key, text in lines)


def cmd_verify(config: RunConfig, logger: Logger = None) -> Tuple[int, str]:
    """Run a verification sweep.

    Returns:
        Tuple[int, str]: Exit code and the cell listing; on a budget overrun
        the listing covers the cells that were checked
    """
    verifier = Verifier(config.settings, logger, max_letters=config.max_letters, jobs=config.jobs)
    try:
        report = verifier.run(config.target, config.spec, config.ranges)
    except BudgetExceededError as e:
        partial = VerifyReport(config.target, [r for r in e.partial if isinstance(r, CellResult)], complete=False)
        if logger:
            logger.error(e.message)
        return EXIT_BUDGET, partial.render()
    return (EXIT_OK if report.ok else EXIT_FAILURE), report.render()


def cmd_svg(config: RunConfig) -> str:
    if config.target == "rotation":
        return render_rotation(config.spec, config.steps, config.settings)
    return render_partition(config.spec.alpha, config.m, config.spec.convention, config.settings)


_COMMANDS = {
    "word": cmd_word,
    "table": cmd_table,
    "lagrange": cmd_lagrange,
    "svg": cmd_svg,
}


def main(argv: Sequence[str] = None) -> int:
    settings = SturmianConfig()
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    logger = Logger(level=args.log_level, verbose=args.verbose)
    try:
        config = build_run_config(args, settings)
        if config.command == "verify":
            code, text = cmd_verify(config, logger)
        else:
            code, text = EXIT_OK, _COMMANDS[config.command](config)
    except ConfigurationError as e:
        logger.error(e.message)
        return EXIT_USAGE
    except SturmianError as e:
        logger.error(e.message)
        return EXIT_FAILURE

    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
