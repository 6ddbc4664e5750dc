"""Command-line entry point: ``python -m gysin <verb> ...``."""

import argparse
import logging
import sys
from typing import List, Optional

from gysin.core.config import settings, setup_logging
from gysin.core.exceptions import GysinError, OracleMismatchError
from gysin.core.job_runner import JobRunner, render_check, render_degree, render_result, render_value
from gysin.models.pydantic_models import OutputFormat
from gysin.utils.load_job import load_job

logger = logging.getLogger(__name__)


def int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def add_job_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", "-i", help="JSON job file; inline flags override its fields")
    parser.add_argument("--family", choices=["A", "C", "BD", "KL_A", "KL_C"])
    parser.add_argument("--n", type=int, help="rank (A, KL_A) or half-rank (C, BD, KL_C)")
    parser.add_argument("--rank", type=int, help="rank of E for BD")
    parser.add_argument("--dims", type=int_list, help="flag dimensions, e.g. 1,2")
    parser.add_argument("--mu", type=int_list, help="strict partition for KL families, e.g. 3,1")
    parser.add_argument("--twist", choices=["formal", "zero"])
    parser.add_argument("--base", choices=["formal", "trivial"])
    parser.add_argument("--f", help="class to push forward, e.g. '(x1+x2)^4'")
    parser.add_argument("--halve", action=argparse.BooleanOptionalAction, default=None,
                        help="take one of the two components (BD, rank 2n, d = n); --no-halve overrides a job file")
    parser.add_argument("--cutoff", type=int, help="drop terms above this grade")
    parser.add_argument("--format", choices=["text", "structured"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gysin",
        description="Exact Gysin pushforwards from flag bundles and Kempf-Laksov bundles",
    )
    parser.add_argument("--log-level", default=None, help="logging level (default from GYSIN_LOG_LEVEL)")
    verbs = parser.add_subparsers(dest="verb", required=True)

    add_job_arguments(verbs.add_parser("compute", help="evaluate the closed-form pushforward"))
    add_job_arguments(verbs.add_parser("oracle", help="evaluate through the tower of projective bundles"))
    add_job_arguments(verbs.add_parser("check", help="run both paths and report differences"))

    degree = verbs.add_parser("degree", help="classical degrees of Grassmannians and quadrics")
    degree.add_argument("kind", choices=["grassmannian", "lagrangian", "quadric"])
    degree.add_argument("--d", type=int)
    degree.add_argument("--n", type=int)
    degree.add_argument("--rank", type=int)
    degree.add_argument("--format", choices=["text", "structured"])
    return parser


def job_from_args(args: argparse.Namespace):
    overrides = {
        key: getattr(args, key)
        for key in ("family", "n", "rank", "dims", "mu", "twist", "base", "f", "halve", "cutoff", "format")
    }
    return load_job(args.input, **overrides)


def dispatch(args: argparse.Namespace, runner: JobRunner) -> int:
    if args.verb == "degree":
        fmt = OutputFormat(args.format or settings.default_format)
        print(render_degree(runner.degree(args.kind, d=args.d, n=args.n, rank=args.rank), fmt))
        return 0

    spec = job_from_args(args)
    if args.verb == "compute":
        print(render_result(runner.compute(spec), spec.format))
        return 0
    if args.verb == "oracle":
        print(render_value(runner.oracle(spec), spec.format))
        return 0

    report = runner.check(spec)
    print(render_check(report, spec.format))
    if not report.matches:
        error = OracleMismatchError(f"closed form and stepwise tower differ in {len(report.difference)} terms")
        print(f"error: {error.code}: {error.message}", file=sys.stderr)
        return error.exit_code
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)
    try:
        return dispatch(args, JobRunner())
    except GysinError as e:
        logger.warning("%s failed: %s", args.verb, e.message)
        print(f"error: {e.code}: {e.message}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
