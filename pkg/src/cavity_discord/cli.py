"""Command-line front end.

Two subcommands: ``run`` executes one scenario and writes its CSV; ``sweep``
repeats a base scenario over a list of values for one field. Configuration
comes from flags, from a JSON file via --config, or both; flags win.

Exit codes: 0 success, 1 usage or config error, 2 integration failure,
3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import fields
from typing import Sequence

from .dynamics import IntegrationError
from .runner import (
    SCENARIOS,
    SWEEPABLE,
    ScenarioConfig,
    run_scenario,
    run_sweep,
    summary_lines,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTEGRATION = 2
EXIT_IO = 3

_CONFIG_FIELDS = {f.name for f in fields(ScenarioConfig)}
_FLAG_TO_FIELD = {
    "scenario": "scenario",
    "theta": "state_theta",
    "state_phi": "state_phi",
    "gamma_ratio": "gamma_ratio",
    "t_max": "t_max",
    "dt": "dt",
    "sample_every": "sample_every",
    "out": "output_path",
}


class _Parser(argparse.ArgumentParser):
    """argparse would exit with status 2 on bad usage; 2 is reserved."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_scenario_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH", help="JSON file with ScenarioConfig fields")
    parser.add_argument("--scenario", choices=SCENARIOS)
    parser.add_argument("--theta", type=float, help="initial-state angle theta in radians")
    parser.add_argument("--state-phi", type=float, help="initial-state angle phi in radians")
    parser.add_argument("--gamma-ratio", type=float, help="cavity decay over coupling")
    parser.add_argument("--t-max", type=float, help="trajectory length in units of omega*t")
    parser.add_argument("--dt", type=float, help="integrator step in units of omega*t")
    parser.add_argument("--sample-every", type=int, help="steps between recorded samples")
    parser.add_argument("--out", help="output CSV path")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cavity-discord", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run_p = sub.add_parser("run", help="run one scenario and write its CSV")
    _add_scenario_flags(run_p)

    sweep_p = sub.add_parser("sweep", help="run a scenario once per swept value")
    _add_scenario_flags(sweep_p)
    sweep_p.add_argument("--vary", required=True, choices=SWEEPABLE)
    sweep_p.add_argument("--values", required=True, help="comma-separated values for --vary")

    return parser


def _config_from_args(args: argparse.Namespace) -> ScenarioConfig:
    values: dict[str, object] = {}
    if args.config is not None:
        try:
            with open(args.config, encoding="utf-8") as fh:
                loaded = json.load(fh)
        except OSError as exc:
            # A bad --config argument is a config error, not an output I/O error.
            raise ValueError(f"cannot read config file {args.config}: {exc}") from exc
        if not isinstance(loaded, dict):
            raise ValueError(f"config file {args.config} must hold a JSON object")
        unknown = set(loaded) - _CONFIG_FIELDS
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        values.update(loaded)
    for flag, field_name in _FLAG_TO_FIELD.items():
        arg = getattr(args, flag)
        if arg is not None:
            values[field_name] = arg
    return ScenarioConfig(**values)


def _parse_sweep_values(vary: str, raw: str) -> list[object]:
    items = [s.strip() for s in raw.split(",") if s.strip()]
    if not items:
        raise ValueError("--values must list at least one value")
    if vary == "scenario":
        return list(items)
    return [float(s) for s in items]


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = _config_from_args(args)
        if args.command == "run":
            result = run_scenario(config)
            for line in summary_lines(result.summary()):
                print(line)
        else:
            sweep_values = _parse_sweep_values(args.vary, args.values)
            results = run_sweep(config, args.vary, sweep_values)
            for value, result in zip(sweep_values, results):
                print(f"[{args.vary}={value}] -> {result.config.output_path}")
                for line in summary_lines(result.summary()):
                    print(line)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IntegrationError as exc:
        print(f"integration failure: {exc}", file=sys.stderr)
        return EXIT_INTEGRATION
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
