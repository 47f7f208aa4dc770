"""Command-line entry point.

Subcommands: ``sweep`` (theory curves), ``hist`` (distributions at selected
times) and ``compare`` (Monte Carlo and photonic-imperfection error tables).
Exit codes: 0 on success, 2 on configuration errors, 3 when a numeric
invariant is violated while emitting output.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import ConfigError, RunConfig, parse_config
from .sweep import NumericInvariantError, emit_distributions, run_compare, run_sweep

_COMMANDS = {
    "sweep": (run_sweep, "write sweep.csv, realizations.csv and summary.json"),
    "hist": (emit_distributions, "write hist_dE.csv and hist_ds.csv"),
    "compare": (run_compare, "write mc_error.csv and, with --photonic, photonic_error.csv"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gate-energetics",
        description="Two-qubit gate energetics: sweeps, histograms and error tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in _COMMANDS.items():
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--config", type=Path, default=None, help="config file path")
        cmd.add_argument("--out", type=Path, default=Path("out"), help="output directory")
        cmd.add_argument("--seed", type=int, default=None, help="override the RNG seed")
        cmd.add_argument("--samples", type=int, default=None, help="override the shot count")
        cmd.add_argument(
            "--photonic",
            action=argparse.BooleanOptionalAction,
            default=None,
            help="enable/disable the photonic comparison",
        )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = parse_config(args.config) if args.config else RunConfig()
        if args.seed is not None:
            cfg.seed = args.seed
        if args.samples is not None:
            cfg.samples = args.samples
        if args.photonic is not None:
            cfg.photonic.enabled = args.photonic
        cfg.validate()
        command, _ = _COMMANDS[args.command]
        paths = command(cfg, args.out)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except NumericInvariantError as exc:
        print(f"numeric invariant violated: {exc}", file=sys.stderr)
        return 3
    for path in paths.values():
        print(path)
    return 0


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
