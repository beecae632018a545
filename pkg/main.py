"""
Main entry point for the resilient fingerprint triage toolkit

Wires subcommands to controllers:
- generate      → CorpusController.generate
- ingest-check  → DatasetController.ingest_check
- prevalence    → DatasetController.prevalence
- cluster       → FingerprintController.cluster
- evaluate      → FingerprintController.evaluate
- compare       → FingerprintController.compare
- track         → FingerprintController.track

Exit codes: 0 success, 2 usage/config error, 3 empty input, 4 I/O error.
"""

import argparse
import sys
from typing import List, Optional

from controllers.base_controller import ExitCode
from controllers.corpus_controller import CorpusController
from controllers.dataset_controller import DatasetController
from controllers.fingerprint_controller import FingerprintController
from models.errors import ConfigError
from models.run_config import build_run_config, load_run_config
from utils.logger import logger


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", dest="inputs", action="append", help="feed file or directory of batches (repeatable)")
    common.add_argument("--group", dest="group_ids", action="append", help="group id for the matching --input (repeatable)")
    common.add_argument("--out", help="report path (default: stdout)")
    common.add_argument("--format", dest="report_format", choices=("csv", "json"))
    common.add_argument("--config", help="JSON config file; flags override its values")
    common.add_argument("--threshold", dest="vendor_threshold", type=int, help="vendor flags for a malicious verdict")
    common.add_argument("--min-cluster", dest="min_cluster_size", type=int)
    common.add_argument("--top-sections", dest="top_sections", type=int)
    common.add_argument("--rounding", choices=("half_up", "down"))
    common.add_argument("--min-report-size", dest="min_report_size", type=int)
    return common


def _method_options(parser: argparse.ArgumentParser, default_method: str = "top-down") -> None:
    parser.add_argument("--method", default=default_method, choices=("top-down", "bottom-up"))
    parser.add_argument("--qualify", help="qualification, e.g. ILRS, IL_CS_or_MS, CS_or_MS")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resilient-fingerprint",
        description="Cluster PE file reports into resilient fingerprints and score them.",
    )
    common = _common_options()
    commands = parser.add_subparsers(dest="command", required=True)

    generate = commands.add_parser("generate", parents=[common], help="write a synthetic feed and its ground truth")
    generate.add_argument("--spec", help="synthetic spec JSON (defaults to the first --input)")
    generate.add_argument("--seed", type=int)
    generate.add_argument("--mutate-imports", dest="mutate_imports", type=float)

    commands.add_parser("ingest-check", parents=[common], help="summarize ingested groups")
    commands.add_parser("prevalence", parents=[common], help="exact-key redundancy per feature")
    _method_options(commands.add_parser("cluster", parents=[common], help="emit fingerprints as JSON lines"))
    _method_options(commands.add_parser("evaluate", parents=[common], help="verdict summary for one qualification"))
    commands.add_parser("compare", parents=[common], help="fingerprints against hash baselines")
    _method_options(commands.add_parser("track", parents=[common], help="fingerprint keys across groups"))
    return parser


RUN_CONFIG_FLAGS = (
    "inputs",
    "group_ids",
    "out",
    "report_format",
    "vendor_threshold",
    "min_cluster_size",
    "top_sections",
    "rounding",
    "min_report_size",
)


def dispatch(args: argparse.Namespace) -> ExitCode:
    try:
        file_values = load_run_config(args.config)
        run_config = build_run_config(file_values, {key: getattr(args, key) for key in RUN_CONFIG_FLAGS})
    except ConfigError as e:
        logger.error(f"usage error: {e}")
        return ExitCode.USAGE
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return ExitCode.IO_ERROR

    if args.command == "generate":
        spec_path = args.spec or (run_config.inputs[0] if run_config.inputs else None)
        return CorpusController(run_config).generate(spec_path, args.seed, args.mutate_imports)
    if args.command == "ingest-check":
        return DatasetController(run_config).ingest_check()
    if args.command == "prevalence":
        return DatasetController(run_config).prevalence()

    controller = FingerprintController(run_config)
    if args.command == "cluster":
        return controller.cluster(args.method, args.qualify)
    if args.command == "evaluate":
        return controller.evaluate(args.method, args.qualify)
    if args.command == "compare":
        return controller.compare()
    return controller.track(args.method, args.qualify)


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments and run one command; returns the exit code."""

    args = build_parser().parse_args(argv)
    logger.debug(f"Command line: {argv if argv is not None else sys.argv[1:]}")
    try:
        return int(dispatch(args))
    except Exception as e:
        logger.error(f"{args.command} failed: {e}", exc_info=True)
        raise


if __name__ == "__main__":
    sys.exit(main())
