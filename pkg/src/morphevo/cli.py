"""Command-line interface.

Subcommands:

* ``evolve``  run the optimizer and write a run directory
* ``eval``    report the full model evaluation of one design file
* ``baseline`` report the reference quadcopter
* ``front``   export a run's final front as CSV/JSON, optionally plotted

Exit codes: 0 success, 2 validation or parse failure, 3 I/O failure.
``MORPHO_THREADS`` caps evaluation worker processes (default 1, serial).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
import time
from pathlib import Path

from .evolve import EvolutionConfig, GenerationStats, evolve
from .genome import InvalidLayoutError, decode, quadcopter_baseline
from .params import DEFAULT_PARAMS, PhysicalParams
from .runio import (
    AXIS_NAMES,
    ConfigError,
    design_report,
    front_to_csv,
    front_to_json,
    load_config,
    load_design,
    load_front,
    load_manifest,
    plot_front,
    save_run,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3


def _threads_from_env() -> int:
    raw = os.environ.get("MORPHO_THREADS", "1")
    try:
        threads = int(raw)
    except ValueError:
        raise ConfigError(f"MORPHO_THREADS must be an integer, got {raw!r}")
    if threads < 1:
        raise ConfigError("MORPHO_THREADS must be at least 1")
    return threads


def cmd_evolve(args: argparse.Namespace) -> int:
    config = load_config(args.config) if args.config is not None else EvolutionConfig()
    if args.seed is not None:
        config = dataclasses.replace(config, seed=args.seed)
    threads = _threads_from_env()

    def progress(stats: GenerationStats) -> None:
        if stats.generation % 10 == 0 or stats.generation == config.generations:
            print(
                f"gen {stats.generation}/{config.generations}"
                f"  front={stats.front_size}"
                f"  hv={stats.hypervolume:.4f}"
                f"  alpha_max={stats.alpha_max:.3f}",
                file=sys.stderr,
            )

    start = time.perf_counter()
    record = evolve(config, threads=threads, progress=progress)
    wall = time.perf_counter() - start
    out = save_run(args.out, record, threads=threads, wall_time_s=wall)
    print(f"run complete in {wall:.1f}s; results in {out}", file=sys.stderr)
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    genotype, phenotype, params = load_design(args.design)
    if genotype is not None:
        try:
            phenotype = decode(genotype, params)
        except InvalidLayoutError as exc:
            print(json.dumps({"invalid": True, "reason": str(exc)}, indent=2))
            return EXIT_OK
    report = {"invalid": False, **design_report(phenotype, params)}
    print(json.dumps(report, indent=2))
    return EXIT_OK


def cmd_baseline(args: argparse.Namespace) -> int:
    report = design_report(quadcopter_baseline(), DEFAULT_PARAMS)
    print(json.dumps({"invalid": False, **report}, indent=2))
    return EXIT_OK


def _parse_axes(raw: str) -> tuple[str, str]:
    parts = raw.split(":")
    if len(parts) != 2:
        raise ConfigError("--axes must look like 'lambda:alpha'")
    for name in parts:
        if name not in AXIS_NAMES:
            raise ConfigError(f"unknown axis {name!r}; choose from {AXIS_NAMES}")
    return parts[0], parts[1]


def cmd_front(args: argparse.Namespace) -> int:
    rows = load_front(args.run_dir)
    axes = _parse_axes(args.axes)
    if args.plot is not None:
        params = PhysicalParams.from_dict(load_manifest(args.run_dir)["params"])
        report = design_report(quadcopter_baseline(params), params)
        baseline = {k: report[k] for k in ("alpha", "lambda", "size")}
        plot_front(rows, axes, args.plot, baseline=baseline)
    text = front_to_csv(rows) if args.format == "csv" else front_to_json(rows)
    if args.out is not None:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morphevo",
        description="evolve multicopter morphologies against hover, agility, and footprint objectives",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_evolve = sub.add_parser("evolve", help="run the evolutionary optimizer")
    p_evolve.add_argument("--config", type=Path, default=None, help="run config JSON")
    p_evolve.add_argument("--seed", type=int, default=None, help="override the run seed")
    p_evolve.add_argument("--out", type=Path, required=True, help="run output directory")
    p_evolve.set_defaults(func=cmd_evolve)

    p_eval = sub.add_parser("eval", help="evaluate one design file")
    p_eval.add_argument("design", type=Path, help="design JSON path")
    p_eval.set_defaults(func=cmd_eval)

    p_base = sub.add_parser("baseline", help="report the reference quadcopter")
    p_base.set_defaults(func=cmd_baseline)

    p_front = sub.add_parser("front", help="export a run's final front")
    p_front.add_argument("run_dir", type=Path, help="run directory from 'evolve'")
    p_front.add_argument("--format", choices=("csv", "json"), default="csv")
    p_front.add_argument("--out", type=Path, default=None, help="output file (default stdout)")
    p_front.add_argument("--axes", default="lambda:alpha", help="plot axes, e.g. size:alpha")
    p_front.add_argument("--plot", type=Path, default=None, help="write a scatter plot here")
    p_front.set_defaults(func=cmd_front)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
