# cli/main.py
"""
golod-tool command line.

    python -m cli.main golod -i "test json/triangle.json" --order 1,2,3
    python -m cli.main resolve -i "test json/triangle.json" --emit-matrices
    python -m cli.main moment-angle -i "test json/threepoints.json" --format json

Exit codes: 0 success (verdicts are data), 1 internal consistency failure,
2 input error, 3 guard exhausted.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional, TextIO

from pydantic import ValidationError

from core.models.job import JobSpec
from core.schemas.output_schemas import get_record_schemas
from core.tools.config import get_guard_config, get_log_level
from core.tools.errors import GuardExceededError, InputError, InternalConsistencyError
from core.tools.executor import executor, render_text
from core.tools.id_generator import new_record_id
from core.tools.io_loader import JSONInputFile, classify

logger = logging.getLogger(__name__)

COMMANDS = ["resolve", "golod", "ainfty", "massey", "tor", "poincare", "moment-angle", "search-order"]

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="golod-tool", description="Golod property of rooted monomial rings")
    parser.add_argument("--emit-schema", action="store_true", help="print the JSON schema of every record and exit")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING (default) or ERROR")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", required=True, help="JSON ideal or facet list")
    common.add_argument("--field", default="q", help="q | f2 | fp:<p>")
    common.add_argument("--order", default=None, help="total order on generators, e.g. 2,1,3")
    common.add_argument("--pi", default=None, help="JSON file with a rooting map")
    common.add_argument("--kind", choices=["taylor", "lyubeznik", "rooted"], default="lyubeznik")
    common.add_argument("--emit-matrices", action="store_true")
    common.add_argument("--max-n", type=int, default=None)
    common.add_argument("--truncate", type=int, default=None)
    common.add_argument("--massey-k", type=int, default=3)
    common.add_argument("--guard-subsets", type=int, default=None)
    common.add_argument("--guard-perms", type=int, default=None)
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, default=None)

    sub = parser.add_subparsers(dest="command")
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def job_from_args(args: argparse.Namespace) -> JobSpec:
    source_file = JSONInputFile(args.input)
    logger.debug(f"reading {source_file.describe()}")
    data = source_file.load()
    source = classify(data)
    pi = JSONInputFile(args.pi).load() if args.pi else None
    kind = "rooted" if pi is not None and args.kind == "lyubeznik" else args.kind
    return JobSpec(
        command=args.command,
        ideal=data if source == "ideal" else None,
        facets=data if source == "facets" else None,
        field=args.field, order=args.order, pi=pi, kind=kind,
        emit_matrices=args.emit_matrices, max_n=args.max_n, truncate=args.truncate,
        massey_k=args.massey_k, guard_subsets=args.guard_subsets, guard_perms=args.guard_perms,
        seed=args.seed, threads=args.threads or get_guard_config().threads, output=args.format,
    )


def write_records(records, spec: JobSpec, out: TextIO) -> None:
    job_id = records[-1].job_id
    for k, record in enumerate(records):
        if spec.output == "json":
            data = {"id": new_record_id(job_id, k), **record.model_dump(mode="json")}
            out.write(json.dumps(data, ensure_ascii=False) + "\n")
        else:
            out.write(render_text(record) + "\n")


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=(args.log_level or get_log_level()).upper(), stream=sys.stderr)

    if args.emit_schema:
        out.write(json.dumps(get_record_schemas(strict=True), indent=2, ensure_ascii=False) + "\n")
        return EXIT_OK
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_INPUT

    try:
        spec = job_from_args(args)
        records = executor.run(spec)
        write_records(records, spec, out)
        return EXIT_OK
    except (InputError, ValidationError, json.JSONDecodeError, FileNotFoundError) as e:
        logger.error(f"input error: {e}")
        return EXIT_INPUT
    except GuardExceededError as e:
        logger.error(str(e))
        return EXIT_GUARD
    except InternalConsistencyError as e:
        logger.error(f"internal consistency failure: {e}", exc_info=True)
        if e.report is not None and hasattr(e.report, "model_dump_json"):
            out.write(e.report.model_dump_json() + "\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
