"""
Formal Vanishing Toolkit
Command-line entry point
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from app import __description__, __version__
from app.cli.corpus import run_corpus
from app.cli.render import render_corpus, render_report, to_json
from app.cli.runner import SessionRunner
from app.cli.session import parse_session
from app.utils.exceptions import EXIT_DERIVED_MISMATCH, EXIT_INPUT_ERROR, EXIT_OK, handle_cli_errors
from app.utils.logging import setup_logging

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="formal-vanishing", description=__description__)
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", metavar="FILE", help="session file to run")
    source.add_argument("--corpus", action="store_true", help="run the built-in example corpus and audit")
    parser.add_argument("--json", action="store_true", help="print JSON instead of text")
    parser.add_argument("--max-cells", type=int, metavar="N", help="Cech degree-box budget per report")
    parser.add_argument("--quiet", action="store_true", help="only log warnings and errors")
    parser.add_argument("--log-file", metavar="PATH", help="also log to a rotating file")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


@handle_cli_errors
def run(args: argparse.Namespace) -> int:
    if args.max_cells is not None and args.max_cells <= 0:
        logger.error("--max-cells must be positive")
        return EXIT_INPUT_ERROR

    if args.corpus:
        corpus_run = run_corpus(max_cells=args.max_cells)
        print(to_json(corpus_run) if args.json else render_corpus(corpus_run), end="" if not args.json else "\n")
        mismatches = corpus_run.derived_mismatches
        if mismatches:
            logger.error(f"{len(mismatches)} derived value(s) do not match the corpus")
            return EXIT_DERIVED_MISMATCH
        return EXIT_OK

    text = Path(args.input).read_text(encoding="utf-8")
    report = SessionRunner(max_cells=args.max_cells).run(parse_session(text))
    print(to_json(report) if args.json else render_report(report), end="" if not args.json else "\n")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(log_level="WARNING" if args.quiet else None, log_file=args.log_file)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
