"""Command line interface.

Exit codes: 0 on success, 1 on any input problem (bad paths, malformed
dictionaries or rules, bad flags), 2 when no record survives filtering.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional

from . import defaults
from .aggregation import national_shares, province_table, read_aggregate_csv
from .attribution import load_location_rules, unmatched_locations
from .errors import EmptyCorpusError, PulsoError
from .ingest import IngestFilter, iter_corpus
from .lexicon import load_lexicon, suggest_terms
from .pipeline import (
    correlate_against_official,
    correlation_entries,
    report_dict,
    run_pipeline,
    shares_dict,
    write_derived_outputs,
    write_outputs,
)
from .aggregation import UndefinedShareError
from .stats import load_official_results

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for an empty
    # corpus here, so usage problems are downgraded to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_timestamp(value: str) -> datetime:
    try:
        stamp = datetime.fromisoformat(value.replace("Z", "+00:00"))
    except ValueError:
        raise PulsoError(f"bad timestamp: {value!r}") from None
    if stamp.tzinfo is None:
        raise PulsoError(f"timestamp needs a UTC offset: {value!r}")
    return stamp


def _thread_count(value: Optional[int]) -> int:
    if value is not None:
        return value
    env = os.environ.get("PULSO_THREADS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise PulsoError(f"PULSO_THREADS is not an integer: {env!r}") from None
    return 1


def _build_filter(args) -> Optional[IngestFilter]:
    window_start = _parse_timestamp(args.window_from) if args.window_from else None
    window_end = _parse_timestamp(args.window_to) if args.window_to else None
    if not (args.keyword or args.follow or args.lang or window_start or window_end):
        return None
    try:
        return IngestFilter(
            keywords=frozenset(args.keyword or ()),
            follow_accounts=frozenset(args.follow or ()),
            lang=args.lang,
            window_start=window_start,
            window_end=window_end,
        )
    except ValueError as exc:
        raise PulsoError(str(exc)) from None


def _print_json(payload) -> None:
    print(json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2))


def _cmd_run(args) -> int:
    lexicon = load_lexicon(args.lexicon if args.lexicon else defaults.data_dir())
    rules = load_location_rules(
        args.locations if args.locations else defaults.data_dir() / "locations.tsv"
    )
    official = load_official_results(
        args.official if args.official else defaults.official_results_path()
    )
    result = run_pipeline(
        args.corpus,
        lexicon,
        rules,
        official,
        ingest_filter=_build_filter(args),
        threads=_thread_count(args.threads),
    )
    paths = write_outputs(result, args.out, decimals=args.decimals)
    report = report_dict(result)
    report["outputs"] = [str(path) for path in paths]
    _print_json(report)
    return 0


def _cmd_lexicon_validate(args) -> int:
    lexicon = load_lexicon(args.lexicon if args.lexicon else defaults.data_dir())
    _print_json(
        {
            "attributes": len(lexicon.attributes),
            "synonyms": len(lexicon.synonyms),
            "positive_words": len(lexicon.positive_words),
            "negative_words": len(lexicon.negative_words),
            "status": "ok",
        }
    )
    return 0


def _cmd_lexicon_suggest(args) -> int:
    lexicon = load_lexicon(args.lexicon if args.lexicon else defaults.data_dir())
    records = iter_corpus(args.corpus)
    for term, count in suggest_terms(records, lexicon, top_k=args.top):
        print(f"{term}\t{count}")
    return 0


def _cmd_locations_unmatched(args) -> int:
    rules = load_location_rules(
        args.locations if args.locations else defaults.data_dir() / "locations.tsv"
    )
    records = iter_corpus(args.corpus)
    for raw, count in unmatched_locations(records, rules):
        print(f"{raw}\t{count}")
    return 0


def _cmd_correlate(args) -> int:
    state = read_aggregate_csv(args.aggregate)
    official = load_official_results(
        args.official if args.official else defaults.official_results_path()
    )
    rows, _ = province_table(state, official)
    correlations = correlate_against_official(rows, percent=args.percent)
    _print_json(correlation_entries(correlations))
    return 0


def _cmd_report(args) -> int:
    state = read_aggregate_csv(args.aggregate)
    official = load_official_results(
        args.official if args.official else defaults.official_results_path()
    )
    try:
        shares = national_shares(state)
    except UndefinedShareError:
        shares = None
    rows, agreement_count = province_table(state, official)
    correlations = correlate_against_official(rows)
    paths = write_derived_outputs(shares, rows, correlations, args.out, args.decimals)
    _print_json(
        {
            "shares": shares_dict(shares),
            "agreement_count": agreement_count,
            "correlations": correlation_entries(correlations),
            "outputs": [str(path) for path in paths],
        }
    )
    return 0


def _add_lexicon_flag(parser) -> None:
    parser.add_argument(
        "--lexicon",
        type=Path,
        default=None,
        help="directory with the four dictionary files (default: bundled)",
    )


def _add_locations_flag(parser) -> None:
    parser.add_argument(
        "--locations",
        type=Path,
        default=None,
        help="location rule TSV (default: bundled)",
    )


def _add_official_flag(parser) -> None:
    parser.add_argument(
        "--official",
        type=Path,
        default=None,
        help="official results CSV (default: bundled 2015 runoff)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pulso", description="Tweet sentiment election analytics")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run the full pipeline over a corpus")
    run.add_argument("--corpus", type=Path, required=True, help="JSON Lines corpus")
    _add_lexicon_flag(run)
    _add_locations_flag(run)
    _add_official_flag(run)
    run.add_argument("--out", type=Path, required=True, help="output directory")
    run.add_argument("--lang", default=None, help="keep only this language")
    run.add_argument(
        "--from",
        dest="window_from",
        default=None,
        help="inclusive ISO-8601 window start (offset required)",
    )
    run.add_argument(
        "--to",
        dest="window_to",
        default=None,
        help="inclusive ISO-8601 window end (offset required)",
    )
    run.add_argument(
        "--keyword",
        action="append",
        default=None,
        help="keep tweets containing this keyword (repeatable)",
    )
    run.add_argument(
        "--follow",
        action="append",
        default=None,
        help="keep tweets authored by this account (repeatable)",
    )
    run.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker threads (default: PULSO_THREADS or 1)",
    )
    run.add_argument("--decimals", type=int, default=2, help="table decimals")
    run.set_defaults(handler=_cmd_run)

    lexicon = commands.add_parser("lexicon", help="dictionary maintenance")
    lexicon_commands = lexicon.add_subparsers(dest="subcommand", required=True)
    validate = lexicon_commands.add_parser("validate", help="check dictionary files")
    _add_lexicon_flag(validate)
    validate.set_defaults(handler=_cmd_lexicon_validate)
    suggest = lexicon_commands.add_parser(
        "suggest", help="frequent corpus terms missing from the dictionaries"
    )
    suggest.add_argument("--corpus", type=Path, required=True)
    _add_lexicon_flag(suggest)
    suggest.add_argument("--top", type=int, default=20, help="how many terms")
    suggest.set_defaults(handler=_cmd_lexicon_suggest)

    locations = commands.add_parser("locations", help="location rule maintenance")
    locations_commands = locations.add_subparsers(dest="subcommand", required=True)
    unmatched = locations_commands.add_parser(
        "unmatched", help="raw locations no rule matches, count-descending"
    )
    unmatched.add_argument("--corpus", type=Path, required=True)
    _add_locations_flag(unmatched)
    unmatched.set_defaults(handler=_cmd_locations_unmatched)

    correlate = commands.add_parser(
        "correlate", help="correlate an aggregate against official votes"
    )
    correlate.add_argument("--aggregate", type=Path, required=True)
    _add_official_flag(correlate)
    correlate.add_argument(
        "--percent",
        action="store_true",
        help="correlate two-candidate percentage shares instead of raw counts",
    )
    correlate.set_defaults(handler=_cmd_correlate)

    report = commands.add_parser(
        "report", help="regenerate derived tables from an aggregate"
    )
    report.add_argument("--aggregate", type=Path, required=True)
    _add_official_flag(report)
    report.add_argument("--out", type=Path, required=True)
    report.add_argument("--decimals", type=int, default=2)
    report.set_defaults(handler=_cmd_report)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except EmptyCorpusError as exc:
        print(f"pulso: {exc}", file=sys.stderr)
        return 2
    except (PulsoError, OSError, ValueError) as exc:
        print(f"pulso: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
