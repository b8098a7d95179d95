# -*- coding: utf-8 -*-
# @Time    : 2024/5/18 10:20
# @Author  : YQ Tsui
# @File    : cli.py
# @Purpose : condenlab command line

import argparse
import dataclasses
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .config import CONFIG
from .core.errors import ConfigError, ReportError, ScenarioError
from .scenarios.parser import KNOWN_FORMATS, ScenarioConfig, parse_config
from .scenarios.registry import registered_scenarios, run_scenario
from .scenarios.report import emit_report
from .scenarios.schemas import EXAMPLE_CONFIGS, SCENARIO_SCHEMAS
from .scenarios.verify import verify_worked_examples

logger = logging.getLogger("condenlab")

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


def _formats(text: str) -> tuple:
    formats = tuple(dict.fromkeys(f.strip() for f in text.split(",") if f.strip()))
    unknown = [f for f in formats if f not in KNOWN_FORMATS]
    if unknown or not formats:
        raise argparse.ArgumentTypeError(f"formats must be drawn from {', '.join(KNOWN_FORMATS)}, got {text!r}")
    return formats


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="condenlab", description="Wealth condensation scenarios and checks")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="overrides log_level from the config file",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one or more scenario configs")
    run.add_argument("--config", action="append", required=True, type=Path, help="JSON scenario config, repeatable")
    run.add_argument("--seed", type=int, default=None, help="overrides the seed of every config")
    run.add_argument("--out", type=Path, default=None, help="overrides the output directory")
    run.add_argument("--format", type=_formats, default=None, help="comma separated subset of csv,json,svg")
    run.add_argument("--jobs", type=int, default=None, help="configs run concurrently")

    listing = sub.add_parser("list-scenarios", help="list the registered scenarios")
    listing.add_argument("--examples", action="store_true", help="print the documented example config of each")

    sub.add_parser("verify", help="replay the worked examples as checks")
    return parser


def _apply_overrides(config: ScenarioConfig, args: argparse.Namespace) -> ScenarioConfig:
    changes = {}
    if args.seed is not None:
        changes["seed"] = args.seed
    if args.out is not None:
        changes["output_dir"] = str(args.out)
    if args.format is not None:
        changes["formats"] = args.format
    return dataclasses.replace(config, **changes)


def _run_one(path: Path, args: argparse.Namespace, jobs: int) -> list:
    try:
        text = path.read_bytes()
    except OSError as e:
        raise ConfigError([f"cannot read {path}: {e.strerror or e}"]) from e
    try:
        config = _apply_overrides(parse_config(text), args)
    except ConfigError as e:
        raise ConfigError([f"{path}: {v}" for v in e.violations]) from e
    trajectory = run_scenario(config, jobs=jobs)
    return emit_report(trajectory, config.formats, config.output_dir, stem=path.stem)


def cmd_run(args: argparse.Namespace) -> int:
    jobs = args.jobs if args.jobs is not None else CONFIG["jobs"]
    if jobs < 1:
        raise ConfigError([f"--jobs must be >= 1, got {jobs}"])
    stems = [p.stem for p in args.config]
    if len(set(stems)) < len(stems):
        raise ConfigError(["config files must have distinct names, their outputs would collide"])
    if len(args.config) == 1:
        written = [_run_one(args.config[0], args, jobs)]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            written = list(pool.map(lambda p: _run_one(p, args, 1), args.config))
    for paths in written:
        for path in paths:
            print(path)
    return EXIT_OK


def cmd_list(args: argparse.Namespace) -> int:
    for name in registered_scenarios():
        print(f"{name:22s} {SCENARIO_SCHEMAS[name]['description']}")
        if args.examples:
            print(f"    {json.dumps(EXAMPLE_CONFIGS[name], sort_keys=True)}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = verify_worked_examples()
    print(report.format())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


COMMANDS = {"run": cmd_run, "list-scenarios": cmd_list, "verify": cmd_verify}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level or str(CONFIG["log_level"]).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except ConfigError as e:
        for violation in e.violations:
            logger.error("config: %s", violation)
        return EXIT_USAGE
    except (ScenarioError, ReportError) as e:
        logger.error("%s", e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
