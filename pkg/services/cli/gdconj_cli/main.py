import argparse
import logging
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from gdconj_classify import ClassificationError, NoTheoremApplies, admissible_region, classify_pair
from gdconj_diagnostics import COLUMNS, ratio_trace
from gdconj_maps import MapError, parse_rational
from gdconj_models import PairConfig, Report
from gdconj_solver import graph_operator_check, residual_max, sample_curve, solve_phi
from gdconj_systems import CompatibilityError, DepthLimitError, ItineraryError, SystemPair, delta

from gdconj_cli.config import settings
from gdconj_cli.loader import FIXTURES, ConfigError, build_pair, load_config, load_fixture
from gdconj_cli.output import CURVE_COLUMNS, emit, emit_curve_csv, render

logger = logging.getLogger(__name__)

COMMANDS = ("validate", "eval", "curve", "classify", "residual", "operator", "region", "trace")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_NO_THEOREM = 3


@dataclass(frozen=True)
class Options:
    vertex: int | None = None
    x: Fraction | None = None
    tol: float | None = None
    depth: int | None = None
    grid: int | None = None


def run(command: str, config: PairConfig | None, options: Options | None = None) -> Report:
    """Execute one command and return its report; raises on invalid input."""
    options = options or Options()
    if command == "region":
        return _region(options)
    if command not in COMMANDS:
        raise ConfigError(f"unknown command {command!r}")
    if config is None:
        raise ConfigError(f"{command} needs --config or the example form")

    params = config.params
    merged = Options(
        vertex=options.vertex if options.vertex is not None else params.vertex,
        x=options.x if options.x is not None else params.x,
        tol=options.tol if options.tol is not None else params.tol,
        depth=options.depth if options.depth is not None else params.depth,
        grid=options.grid if options.grid is not None else params.grid,
    )
    pair = build_pair(config)
    if command == "validate":
        return _validate(pair, config.label)
    pair.require_valid()
    handler: Callable[[SystemPair, str, Options], Report] = _HANDLERS[command]
    return handler(pair, config.label, merged)


# ----- Handlers -----


def _validate(pair: SystemPair, label: str) -> Report:
    result: dict[str, Any] = {}
    for name, system in (("f", pair.f), ("g", pair.g)):
        report = system.report
        result[name] = {
            "ok": report.ok,
            "violations": list(report.violations),
            "notes": list(report.notes),
            "maps": system.describe(),
        }
    return Report(command="validate", label=label, ok=pair.valid, result=result)


def _require_x(options: Options) -> Fraction:
    if options.x is None:
        raise ConfigError("--x is required (or params.x in the config)")
    return options.x


def _eval(pair: SystemPair, label: str, options: Options) -> Report:
    x = _require_x(options)
    value = solve_phi(pair, options.vertex, x, options.tol)
    return Report(
        command="eval",
        label=label,
        result={
            "vertex": options.vertex,
            "x": str(x),
            "lo": value.enclosure.lo,
            "hi": value.enclosure.hi,
            "width": value.enclosure.width,
            "value": float(value.value),
            "exact": None if value.exact is None else str(value.exact),
            "depth_used": value.depth_used,
            "itinerary": str(value.itinerary),
            "converged": value.converged,
        },
    )


def _curve(pair: SystemPair, label: str, options: Options) -> Report:
    depth = options.depth or settings.default_depth
    sample = sample_curve(pair, options.vertex, depth)
    return Report(
        command="curve",
        label=label,
        result={"vertex": options.vertex, "depth": depth, "points": len(sample)},
        columns=list(CURVE_COLUMNS),
        rows=[[x, y] for x, y in sample.points],
    )


def _classify(pair: SystemPair, label: str, options: Options) -> Report:
    verdict = classify_pair(pair)
    return Report(command="classify", label=label, result=verdict.to_dict())


def _residual(pair: SystemPair, label: str, options: Options) -> Report:
    grid = options.grid or settings.default_grid
    value = residual_max(pair, grid, options.tol)
    return Report(command="residual", label=label, result={"grid": grid, "tol": options.tol, "residual": value})


def _operator(pair: SystemPair, label: str, options: Options) -> Report:
    depth = options.depth or settings.default_depth
    distance = graph_operator_check(pair, depth)
    bound = max(float(delta(pair.f, v, depth)) for v in (0, 1))
    return Report(
        command="operator",
        label=label,
        ok=distance <= bound,
        result={"depth": depth, "distance": distance, "delta": bound},
    )


def _trace(pair: SystemPair, label: str, options: Options) -> Report:
    x = _require_x(options)
    depth = options.depth or settings.default_depth
    trace = ratio_trace(pair, options.vertex, x, depth)
    return Report(
        command="trace",
        label=label,
        result={"vertex": options.vertex, "x": str(x), "depth": depth},
        columns=list(COLUMNS),
        rows=[list(row.as_tuple()) for row in trace.rows],
    )


def _region(options: Options) -> Report:
    lo, hi = parse_rational(settings.region_lo), parse_rational(settings.region_hi)
    steps = options.grid or settings.region_steps
    values = [lo + (hi - lo) * Fraction(k, steps) for k in range(steps + 1)]
    rows = []
    for c00 in values:
        for c11 in values:
            report = admissible_region(c00, c11)
            rows.append([float(c00), float(c11), report.ok, "; ".join(report.violations)])
    admissible = sum(1 for row in rows if row[2])
    return Report(
        command="region",
        result={"lo": str(lo), "hi": str(hi), "steps": steps, "admissible": admissible},
        columns=["c00", "c11", "admissible", "violations"],
        rows=rows,
    )


_HANDLERS: dict[str, Callable[[SystemPair, str, Options], Report]] = {
    "eval": _eval,
    "curve": _curve,
    "classify": _classify,
    "residual": _residual,
    "operator": _operator,
    "trace": _trace,
}


# ----- Entry point -----


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="TOML file describing the system pair")
    common.add_argument("--vertex", type=int, choices=(0, 1))
    common.add_argument("--x", help="point in [0,1], e.g. 1/3 or 0.25")
    common.add_argument("--tol", type=float)
    common.add_argument("--depth", type=int)
    common.add_argument("--grid", type=int)
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--format", choices=("json", "csv"))
    common.add_argument("--with-timings", action="store_true")
    common.add_argument("--log-level", type=str.upper, choices=("DEBUG", "INFO", "WARNING", "ERROR"))

    parser = argparse.ArgumentParser(prog="gdconj", description="Conjugacies between graph-directed systems on [0,1].")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    example = sub.add_parser("example", parents=[common], help="run a command on a bundled fixture")
    example.add_argument("fixture", choices=FIXTURES)
    example.add_argument("action", choices=COMMANDS)
    return parser


def _options(args: argparse.Namespace) -> Options:
    try:
        x = None if args.x is None else parse_rational(args.x)
    except ValueError as exc:
        raise ConfigError(f"--x: {exc}") from exc
    if args.tol is not None and not args.tol > 0:
        raise ConfigError("--tol must be positive")
    if args.grid is not None and args.grid < 2:
        raise ConfigError("--grid must be at least 2")
    return Options(vertex=args.vertex, x=x, tol=args.tol, depth=args.depth, grid=args.grid)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level or settings.log_level.upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    command = args.action if args.command == "example" else args.command
    started = time.perf_counter()
    try:
        if args.command == "example":
            config = load_fixture(args.fixture)
        else:
            config = load_config(args.config) if args.config else None
        report = run(command, config, _options(args))
        elapsed = time.perf_counter() - started
        report = report.model_copy(update={"timings": {"total_s": elapsed}})
        if command == "curve" and (args.format or "csv") == "csv":
            emit_curve_csv(report.rows or [], args.out)
        else:
            emit(render(report, args.format, with_timings=args.with_timings), args.out)
    except ConfigError as exc:
        logger.error("Invalid configuration", extra={"command": command, "error": str(exc)})
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NoTheoremApplies as exc:
        logger.error("No criterion applies", extra={"command": command, "error": str(exc)})
        print(f"no theorem applies: {exc}", file=sys.stderr)
        return EXIT_NO_THEOREM
    except (CompatibilityError, ClassificationError, MapError, ItineraryError, DepthLimitError, ValueError) as exc:
        logger.error("Command failed", extra={"command": command, "error": str(exc)})
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED

    logger.info("Command finished", extra={"command": command, "elapsed_s": round(elapsed, 6), "ok": report.ok})
    return EXIT_OK if report.ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
