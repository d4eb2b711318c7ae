from __future__ import annotations

import argparse
import contextlib
import os
import sys
from pathlib import Path
from typing import Iterator, NoReturn, Optional, Sequence, TextIO

from pretzelslice.constants import EXIT_IO, EXIT_OK, EXIT_SELFTEST_FAILED, EXIT_USAGE
from pretzelslice.core.errors import InvalidTupleError
from pretzelslice.core.report import CensusReport, StageTimer
from pretzelslice.logging.factory import DefaultLoggerFactory
from pretzelslice.logging.helpers import get_logger
from pretzelslice.parsing.parser import _build_parser
from pretzelslice.parsing.tuples import parse_tuple
from pretzelslice.rendering.records import make_writer, to_record
from pretzelslice.runtime.census import Census, CensusConfig, resolve_workers
from pretzelslice.runtime.pipeline import evaluate
from pretzelslice.runtime.selftest import SelfTest, all_passed, render_table

logger = get_logger("cli")

# Format flags typed after the `--` sentinel land among the tuple tokens.
_FORMAT_TOKENS = {"--json": "json", "--csv": "csv"}


def _configure_logging(ns: argparse.Namespace, stream: Optional[TextIO]) -> None:
    """Configure the 'pretzelslice' logger from the parsed flags."""
    global logger
    factory = DefaultLoggerFactory.from_flags(
        json_logs=ns.json_logs, verbose=ns.verbose, quiet=ns.quiet, stream=stream
    )
    logger = factory.get_logger("cli")


def _fatal(msg: str, code: int) -> int:
    logger.error(msg)
    return code


@contextlib.contextmanager
def _open_out(path: Optional[str], default: TextIO) -> Iterator[TextIO]:
    if not path:
        yield default
        return
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        yield fh


class PretzelSlice:
    """Top-level façade: parse argv, dispatch the subcommand, return an exit code."""

    @staticmethod
    def run(
        argv: Sequence[str], *, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None
    ) -> int:
        out = stdout or sys.stdout
        err = stderr or sys.stderr
        ns = _build_parser().parse_args(list(argv))
        _configure_logging(ns, err)

        if ns.command == "analyze":
            return PretzelSlice._analyze(ns, out)
        if ns.command == "census":
            return PretzelSlice._census(ns, out, err)
        return PretzelSlice._selftest(ns, out)

    # ------------------------------------------------------------------ #
    @staticmethod
    def _analyze(ns: argparse.Namespace, out: TextIO) -> int:
        fmt = ns.fmt
        tokens: list[str] = []
        for tok in ns.tuple:
            if tok in _FORMAT_TOKENS:
                fmt = _FORMAT_TOKENS[tok]
            else:
                tokens.append(tok)
        try:
            pt = parse_tuple(tokens)
        except InvalidTupleError as exc:
            return _fatal(f"cannot parse tuple: {exc}", EXIT_USAGE)
        record = to_record(evaluate(pt))
        try:
            with _open_out(ns.out, out) as stream:
                writer = make_writer(fmt, stream)
                writer.write(record)
                writer.close()
        except OSError as exc:
            return _fatal(f"cannot write {ns.out}: {exc}", EXIT_IO)
        return EXIT_OK

    @staticmethod
    def _census(ns: argparse.Namespace, out: TextIO, err: TextIO) -> int:
        try:
            config = CensusConfig.from_namespace(ns)
        except ValueError as exc:
            return _fatal(f"invalid census bounds: {exc}", EXIT_USAGE)

        report = CensusReport()
        try:
            with _open_out(ns.out, out) as stream:
                writer = make_writer(ns.fmt, stream)
                for verdict in Census(config).run(report):
                    with StageTimer(report, "write"):
                        writer.write(to_record(verdict))
                writer.close()
        except OSError as exc:
            return _fatal(f"cannot write census output: {exc}", EXIT_IO)

        # The summary goes to stderr whatever the log level.
        if ns.summary_json:
            err.write(report.to_json() + "\n")
        else:
            err.write(f"census: {report.summary_line()}\n")
        return EXIT_OK

    @staticmethod
    def _selftest(ns: argparse.Namespace, out: TextIO) -> int:
        try:
            suite = SelfTest(
                census_bound=ns.max,
                samples=ns.samples,
                oracle=ns.oracle,
                oracle_max=ns.oracle_max,
                workers=resolve_workers(ns.threads),
            )
        except ValueError as exc:
            return _fatal(f"invalid selftest options: {exc}", EXIT_USAGE)
        results = suite.run()
        out.write(render_table(results))
        return EXIT_OK if all_passed(results) else EXIT_SELFTEST_FAILED


def main() -> NoReturn:
    """Entry point for `pretzelslice` and `python -m pretzelslice`."""
    try:
        raise SystemExit(PretzelSlice.run(sys.argv[1:]))
    except KeyboardInterrupt:
        logger.error("Interrupted by user.")
        raise SystemExit(130)
    except BrokenPipeError:
        raise SystemExit(0)
    except Exception as exc:
        if os.getenv("DEBUG") == "1":
            raise
        logger.error("Unexpected error: %s", exc)
        raise SystemExit(1)


if __name__ == "__main__":
    main()
