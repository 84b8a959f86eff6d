"""Command-line driver.

Verbs: validate, universes, utilities, evaluate, rank.  Exit status is 0
on success, 1 when the input fails validation (or a measure rejects the
scenario), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import MeasureError, ScenarioError
from .measures import UtilityMeasure
from .scenario_io import (
    DEFAULT_PRECISION,
    FORMATS,
    Scenario,
    ValidationReport,
    compute_pipeline,
    parse_scenario,
    render_ranking,
    render_report,
    render_universes,
    render_utilities,
    render_validation,
    validate_scenario,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


def _precision(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"precision must be an integer, got {text!r}")
    if not 0 <= value <= 18:
        raise argparse.ArgumentTypeError("precision must be between 0 and 18")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="scenario file (JSON)")
    common.add_argument("--format", choices=FORMATS, default="table",
                        help="output format (default: table)")
    common.add_argument("--precision", type=_precision, default=DEFAULT_PRECISION,
                        help="decimal digits for utilities (default: 6)")

    measured = argparse.ArgumentParser(add_help=False)
    measured.add_argument("--measure", required=True,
                          choices=[m.value for m in UtilityMeasure],
                          help="utility measure")
    measured.add_argument("--aggregator", choices=["mean"], default="mean",
                          help="social aggregator (default: mean)")

    parser = argparse.ArgumentParser(
        prog="setchoice",
        description="Evaluate and rank alternatives offered to a society of "
                    "individuals, all described as sets of shared objectives.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common],
                   help="check a scenario file and report findings")
    sub.add_parser("universes", parents=[common],
                   help="show declared/offered/requested objectives and their partition")
    sub.add_parser("utilities", parents=[common, measured],
                   help="per-individual utilities for every alternative")
    sub.add_parser("evaluate", parents=[common, measured],
                   help="full report: universes, profiles, social profile, ranking")
    sub.add_parser("rank", parents=[common, measured],
                   help="alternatives by decreasing social utility")
    return parser


def _load(path_text: str, output_format: str) -> Scenario | None:
    path = Path(path_text)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"cannot read {path}: {exc}", file=sys.stderr)
        return None
    scenario = parse_scenario(text)
    if isinstance(scenario, ValidationReport):
        sys.stdout.write(render_validation(scenario, output_format))
        return None
    return scenario


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "validate":
        path = Path(args.file)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            print(f"cannot read {path}: {exc}", file=sys.stderr)
            return EXIT_INVALID
        report = validate_scenario(text)
        sys.stdout.write(render_validation(report, args.format))
        return EXIT_OK if report.ok else EXIT_INVALID

    scenario = _load(args.file, args.format)
    if scenario is None:
        return EXIT_INVALID

    try:
        if args.command == "universes":
            sys.stdout.write(render_universes(scenario, args.format))
        elif args.command == "utilities":
            sys.stdout.write(render_utilities(scenario, args.measure,
                                              args.format, args.precision))
        elif args.command == "evaluate":
            result = compute_pipeline(scenario, args.measure, args.aggregator)
            sys.stdout.write(render_report(result, args.format, args.precision))
        elif args.command == "rank":
            result = compute_pipeline(scenario, args.measure, args.aggregator)
            sys.stdout.write(render_ranking(result, args.format, args.precision))
    except (MeasureError, ScenarioError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
