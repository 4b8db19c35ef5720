"""End-to-end run: read, filter, dedupe, score, aggregate, report.

Parsing, filtering and deduplication always happen sequentially in the
reading thread so first-occurrence-wins is well defined; scoring and
folding fan out to workers, each with a private AggregateState, merged at
the end.  The merge is a monoid, so a run with N threads is byte-identical
to a single-threaded run, not merely close.
"""

from __future__ import annotations

import json
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

from .aggregation import (
    AggregateState,
    LabeledTweet,
    NationalShares,
    ProvinceRow,
    UndefinedShareError,
    fold,
    merge,
    national_shares,
    province_table,
    write_aggregate_csv,
    write_province_csv,
)
from .attribution import (
    CandidateLabel,
    LocationResolver,
    LocationRule,
    classify,
)
from .errors import EmptyCorpusError
from .ingest import (
    IngestFilter,
    RecordParseError,
    TweetRecord,
    parse_record,
    passes_filter,
)
from .lexicon import Lexicon
from .scoring import DEFAULT_OPTIONS, ScorerOptions, analyze_tweet, tweet_score
from .stats import ConstantVectorError, CorrelationResult, OfficialResult, correlation_test

__all__ = [
    "CandidateCorrelation",
    "PipelineResult",
    "RunCounts",
    "correlate_against_official",
    "correlation_entries",
    "label_record",
    "report_dict",
    "run_pipeline",
    "shares_dict",
    "write_derived_outputs",
    "write_outputs",
]

_BATCH_SIZE = 256

AGGREGATE_CSV = "aggregate.csv"
SHARES_JSON = "shares.json"
PROVINCE_CSV = "province_table.csv"
CORRELATION_JSON = "correlation.json"


@dataclass(frozen=True)
class RunCounts:
    lines_read: int
    malformed: int
    filtered_out: int
    duplicates: int
    considered: int
    unlocatable: int


@dataclass(frozen=True)
class CandidateCorrelation:
    candidate: CandidateLabel
    result: Optional[CorrelationResult]
    error: Optional[str] = None


@dataclass
class PipelineResult:
    state: AggregateState
    shares: Optional[NationalShares]
    rows: list[ProvinceRow]
    agreement_count: Optional[int]
    correlations: list[CandidateCorrelation]
    counts: RunCounts


def label_record(
    record: TweetRecord,
    lexicon: Lexicon,
    resolver: LocationResolver,
    options: ScorerOptions = DEFAULT_OPTIONS,
) -> LabeledTweet:
    """Score one record and attach its candidate and location labels."""
    sentiments = analyze_tweet(record, lexicon, options)
    return LabeledTweet(
        label=tweet_score(s.score for s in sentiments),
        candidate=classify(record.text),
        location=resolver.resolve(record.user_location),
    )


def _read_survivors(
    corpus_path: Path, ingest_filter: Optional[IngestFilter], tallies: dict
) -> Iterator[TweetRecord]:
    seen: set[int] = set()
    with open(corpus_path, encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            tallies["lines_read"] += 1
            try:
                record = parse_record(line, number)
            except RecordParseError:
                tallies["malformed"] += 1
                continue
            if ingest_filter is not None and not passes_filter(record, ingest_filter):
                tallies["filtered_out"] += 1
                continue
            if record.id in seen:
                tallies["duplicates"] += 1
                continue
            seen.add(record.id)
            yield record


def _batches(records: Iterable[TweetRecord]) -> Iterator[list[TweetRecord]]:
    batch: list[TweetRecord] = []
    for record in records:
        batch.append(record)
        if len(batch) >= _BATCH_SIZE:
            yield batch
            batch = []
    if batch:
        yield batch


def _fold_batch(
    batch: list[TweetRecord],
    lexicon: Lexicon,
    resolver: LocationResolver,
    options: ScorerOptions,
) -> tuple[AggregateState, int]:
    state = AggregateState()
    unlocatable = 0
    for record in batch:
        labeled = label_record(record, lexicon, resolver, options)
        if labeled.location.province == "Sin Provincia":
            unlocatable += 1
        fold(state, labeled)
    return state, unlocatable


def correlate_against_official(
    rows: Sequence[ProvinceRow], percent: bool = False
) -> list[CandidateCorrelation]:
    """Correlate per-province positive tweets with official votes.

    Uses the rows that carry official votes (including zero-tweet rows).
    With ``percent`` the two-candidate shares are correlated instead of raw
    counts; rows with no tweets are skipped there because their share is
    undefined.  Degenerate inputs (too few provinces, constant vectors)
    yield an error entry instead of a result.
    """
    joined = [row for row in rows if row.votes_total is not None]
    if percent:
        joined = [row for row in joined if row.tweets_total > 0]
    vectors = {
        CandidateLabel.SCIOLI: (
            [row.pct_tw_scioli if percent else row.tweets_scioli for row in joined],
            [row.pct_v_scioli if percent else row.votes_scioli for row in joined],
        ),
        CandidateLabel.MACRI: (
            [row.pct_tw_macri if percent else row.tweets_macri for row in joined],
            [row.pct_v_macri if percent else row.votes_macri for row in joined],
        ),
    }
    correlations = []
    for candidate in (CandidateLabel.MACRI, CandidateLabel.SCIOLI):
        x, y = vectors[candidate]
        try:
            outcome = CandidateCorrelation(candidate, correlation_test(x, y))
        except (ValueError, ConstantVectorError) as exc:
            outcome = CandidateCorrelation(candidate, None, error=str(exc))
        correlations.append(outcome)
    return correlations


def run_pipeline(
    corpus_path: str | Path,
    lexicon: Lexicon,
    rules: Sequence[LocationRule],
    official: Optional[Sequence[OfficialResult]] = None,
    *,
    ingest_filter: Optional[IngestFilter] = None,
    options: ScorerOptions = DEFAULT_OPTIONS,
    threads: int = 1,
) -> PipelineResult:
    """Run the whole pipeline over a JSON Lines corpus.

    Raises EmptyCorpusError when no record survives parsing, filtering and
    deduplication.  ``threads`` > 1 parallelizes scoring without changing
    any result.  Filtering only happens when ``ingest_filter`` is given.
    """
    if threads < 1:
        raise ValueError("threads must be >= 1")
    corpus_path = Path(corpus_path)
    tallies = {"lines_read": 0, "malformed": 0, "filtered_out": 0, "duplicates": 0}
    survivors = _read_survivors(corpus_path, ingest_filter, tallies)
    resolver = LocationResolver(rules)
    state = AggregateState()
    unlocatable = 0

    if threads == 1:
        for record in survivors:
            labeled = label_record(record, lexicon, resolver, options)
            if labeled.location.province == "Sin Provincia":
                unlocatable += 1
            fold(state, labeled)
    else:
        # bounded queue of in-flight batches keeps memory independent of
        # corpus size
        with ThreadPoolExecutor(max_workers=threads) as executor:
            pending = deque()
            for batch in _batches(survivors):
                pending.append(
                    executor.submit(_fold_batch, batch, lexicon, resolver, options)
                )
                if len(pending) >= threads * 4:
                    done_state, done_unlocatable = pending.popleft().result()
                    state = merge(state, done_state)
                    unlocatable += done_unlocatable
            while pending:
                done_state, done_unlocatable = pending.popleft().result()
                state = merge(state, done_state)
                unlocatable += done_unlocatable

    if state.considered_total == 0:
        raise EmptyCorpusError(
            f"no records survived: {tallies['lines_read']} lines read, "
            f"{tallies['malformed']} malformed, {tallies['filtered_out']} filtered out, "
            f"{tallies['duplicates']} duplicates"
        )

    try:
        shares: Optional[NationalShares] = national_shares(state)
    except UndefinedShareError:
        shares = None

    if official is not None:
        rows, agreement_count = province_table(state, official)
        correlations = correlate_against_official(rows)
    else:
        rows, agreement_count, correlations = [], None, []

    counts = RunCounts(
        lines_read=tallies["lines_read"],
        malformed=tallies["malformed"],
        filtered_out=tallies["filtered_out"],
        duplicates=tallies["duplicates"],
        considered=state.considered_total,
        unlocatable=unlocatable,
    )
    return PipelineResult(
        state=state,
        shares=shares,
        rows=rows,
        agreement_count=agreement_count,
        correlations=correlations,
        counts=counts,
    )


def shares_dict(shares: Optional[NationalShares]) -> dict:
    if shares is None:
        return {
            "n_scioli": 0,
            "n_macri": 0,
            "two_candidate_total": 0,
            "pct_scioli": None,
            "pct_macri": None,
        }
    return {
        "n_scioli": shares.n_scioli,
        "n_macri": shares.n_macri,
        "two_candidate_total": shares.two_candidate_total,
        "pct_scioli": shares.pct_scioli,
        "pct_macri": shares.pct_macri,
    }


def correlation_entries(correlations: Sequence[CandidateCorrelation]) -> list[dict]:
    entries = []
    for item in sorted(correlations, key=lambda c: c.candidate.value):
        result = item.result
        entries.append(
            {
                "candidate": item.candidate.value,
                "n": result.n if result else None,
                "r": result.r if result else None,
                "p": result.p_value if result else None,
                "degenerate": result.degenerate if result else False,
                "error": item.error,
            }
        )
    return entries


def _dump_json(payload, path: Path) -> None:
    path.write_text(
        json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2) + "\n",
        encoding="utf-8",
    )


def write_derived_outputs(
    shares: Optional[NationalShares],
    rows: Sequence[ProvinceRow],
    correlations: Sequence[CandidateCorrelation],
    out_dir: str | Path,
    decimals: int = 2,
) -> list[Path]:
    """Write shares.json, province_table.csv and correlation.json."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    shares_path = out_dir / SHARES_JSON
    province_path = out_dir / PROVINCE_CSV
    correlation_path = out_dir / CORRELATION_JSON
    _dump_json(shares_dict(shares), shares_path)
    write_province_csv(rows, province_path, decimals=decimals)
    _dump_json(correlation_entries(correlations), correlation_path)
    return [shares_path, province_path, correlation_path]


def write_outputs(
    result: PipelineResult, out_dir: str | Path, decimals: int = 2
) -> list[Path]:
    """Write aggregate.csv, shares.json, province_table.csv, correlation.json.

    All four files are emitted in sorted order with stable formatting, so
    identical results produce byte-identical files.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    aggregate_path = out_dir / AGGREGATE_CSV
    write_aggregate_csv(result.state, aggregate_path)
    derived = write_derived_outputs(
        result.shares, result.rows, result.correlations, out_dir, decimals=decimals
    )
    return [aggregate_path, *derived]


def report_dict(result: PipelineResult) -> dict:
    """JSON-ready run summary printed by the command line interface."""
    counts = result.counts
    return {
        "lines_read": counts.lines_read,
        "malformed": counts.malformed,
        "filtered_out": counts.filtered_out,
        "duplicates": counts.duplicates,
        "considered": counts.considered,
        "unlocatable": counts.unlocatable,
        "shares": shares_dict(result.shares),
        "agreement_count": result.agreement_count,
        "correlations": correlation_entries(result.correlations),
    }
