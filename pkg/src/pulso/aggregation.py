"""Mergeable aggregation of labeled tweets and the derived result tables.

AggregateState is a commutative monoid: fold labeled tweets into any number
of states, merge the states in any order, and the result equals folding the
whole stream into one state.  That is what makes multi-threaded runs exact,
not approximate.
"""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .attribution import CandidateLabel, LocationEntry
from .errors import PulsoError
from .scoring import SentimentLabel
from .stats import OfficialResult

__all__ = [
    "AggregateState",
    "LabeledTweet",
    "NationalShares",
    "ProvinceRow",
    "UndefinedShareError",
    "fold",
    "merge",
    "national_shares",
    "province_table",
    "read_aggregate_csv",
    "write_aggregate_csv",
    "write_province_csv",
]

GroupKey = tuple[str, str, CandidateLabel, SentimentLabel]


class UndefinedShareError(PulsoError):
    """No positive tweets name either candidate, so shares are undefined."""


@dataclass(frozen=True)
class LabeledTweet:
    label: SentimentLabel
    candidate: CandidateLabel
    location: LocationEntry


@dataclass
class AggregateState:
    """Counts per (country, province, candidate, sentiment) plus the total.

    Invariant: considered_total equals the sum of all counter values.
    """

    counters: Counter = field(default_factory=Counter)
    considered_total: int = 0


def fold(state: AggregateState, labeled: LabeledTweet) -> AggregateState:
    """Add one labeled tweet to ``state`` in place and return it."""
    key: GroupKey = (
        labeled.location.country,
        labeled.location.province,
        labeled.candidate,
        labeled.label,
    )
    state.counters[key] += 1
    state.considered_total += 1
    return state


def merge(a: AggregateState, b: AggregateState) -> AggregateState:
    """Combine two states into a new one; commutative and associative."""
    return AggregateState(
        counters=a.counters + b.counters,
        considered_total=a.considered_total + b.considered_total,
    )


@dataclass(frozen=True)
class NationalShares:
    n_scioli: int
    n_macri: int
    pct_scioli: float
    pct_macri: float

    @property
    def two_candidate_total(self) -> int:
        return self.n_scioli + self.n_macri


def national_shares(state: AggregateState) -> NationalShares:
    """Two-candidate shares over positive tweets that name one candidate.

    Only Positivo cells whose candidate is Macri or Scioli count; mixed and
    unattributed tweets are excluded.  Raises UndefinedShareError when that
    total is zero.
    """
    n_scioli = 0
    n_macri = 0
    for (_, _, candidate, sentiment), count in state.counters.items():
        if sentiment is not SentimentLabel.POSITIVO:
            continue
        if candidate is CandidateLabel.SCIOLI:
            n_scioli += count
        elif candidate is CandidateLabel.MACRI:
            n_macri += count
    total = n_scioli + n_macri
    if total == 0:
        raise UndefinedShareError("no positive tweets name a single candidate")
    return NationalShares(
        n_scioli=n_scioli,
        n_macri=n_macri,
        pct_scioli=n_scioli * 100 / total,
        pct_macri=n_macri * 100 / total,
    )


@dataclass(frozen=True)
class ProvinceRow:
    """One (country, province) row of the per-province comparison table.

    Vote columns are None for rows with no official results (foreign
    countries, unresolved locations).  Percentage properties are None when
    their denominator is zero, and render as blank cells in the CSV.
    """

    country: str
    province: str
    tweets_scioli: int
    tweets_macri: int
    votes_scioli: Optional[int] = None
    votes_macri: Optional[int] = None

    @property
    def tweets_total(self) -> int:
        return self.tweets_scioli + self.tweets_macri

    @property
    def votes_total(self) -> Optional[int]:
        if self.votes_scioli is None or self.votes_macri is None:
            return None
        return self.votes_scioli + self.votes_macri

    @property
    def pct_tw_scioli(self) -> Optional[float]:
        total = self.tweets_total
        return self.tweets_scioli * 100 / total if total else None

    @property
    def pct_tw_macri(self) -> Optional[float]:
        total = self.tweets_total
        return self.tweets_macri * 100 / total if total else None

    @property
    def pct_v_scioli(self) -> Optional[float]:
        total = self.votes_total
        return self.votes_scioli * 100 / total if total else None

    @property
    def pct_v_macri(self) -> Optional[float]:
        total = self.votes_total
        return self.votes_macri * 100 / total if total else None

    def tweet_winner(self) -> Optional[CandidateLabel]:
        if self.tweets_scioli > self.tweets_macri:
            return CandidateLabel.SCIOLI
        if self.tweets_macri > self.tweets_scioli:
            return CandidateLabel.MACRI
        return None

    def vote_winner(self) -> Optional[CandidateLabel]:
        if self.votes_scioli is None or self.votes_macri is None:
            return None
        if self.votes_scioli > self.votes_macri:
            return CandidateLabel.SCIOLI
        if self.votes_macri > self.votes_scioli:
            return CandidateLabel.MACRI
        return None


def province_table(
    state: AggregateState, official: Sequence[OfficialResult]
) -> tuple[list[ProvinceRow], int]:
    """Build the per-province table of positive tweets vs official votes.

    Rows cover every (country, province) group holding at least one positive
    tweet for Macri or Scioli, sorted by tweet total descending (ties by
    country then province).  Official votes join the first row whose
    province matches by name; official provinces with no tweets at all are
    appended as zero rows under country "Sin País".

    The second return value is the agreement count: official provinces
    where a strict tweet majority and a strict vote majority pick the same
    candidate.  Ties and zero rows never agree.
    """
    cells: dict[tuple[str, str], list[int]] = {}
    for (country, province, candidate, sentiment), count in state.counters.items():
        if sentiment is not SentimentLabel.POSITIVO:
            continue
        if candidate is CandidateLabel.SCIOLI:
            cells.setdefault((country, province), [0, 0])[0] += count
        elif candidate is CandidateLabel.MACRI:
            cells.setdefault((country, province), [0, 0])[1] += count

    ordered = sorted(
        cells.items(), key=lambda item: (-(item[1][0] + item[1][1]), item[0])
    )
    votes_by_province = {result.province: result for result in official}
    joined: set[str] = set()
    rows: list[ProvinceRow] = []
    for (country, province), (n_scioli, n_macri) in ordered:
        result = None
        if province in votes_by_province and province not in joined:
            result = votes_by_province[province]
            joined.add(province)
        rows.append(
            ProvinceRow(
                country=country,
                province=province,
                tweets_scioli=n_scioli,
                tweets_macri=n_macri,
                votes_scioli=result.votes_scioli if result else None,
                votes_macri=result.votes_macri if result else None,
            )
        )
    for result in sorted(official, key=lambda r: r.province):
        if result.province not in joined:
            rows.append(
                ProvinceRow(
                    country="Sin País",
                    province=result.province,
                    tweets_scioli=0,
                    tweets_macri=0,
                    votes_scioli=result.votes_scioli,
                    votes_macri=result.votes_macri,
                )
            )

    agreement = 0
    for row in rows:
        if row.votes_total is None:
            continue
        tweet_winner = row.tweet_winner()
        if tweet_winner is not None and tweet_winner is row.vote_winner():
            agreement += 1
    return rows, agreement


_AGGREGATE_HEADER = ["country", "province", "candidate", "sentiment", "count"]


def write_aggregate_csv(state: AggregateState, path: str | Path) -> None:
    """Write the full counter table, sorted for byte-stable output."""
    rows = sorted(
        (
            (country, province, candidate.value, sentiment.text, count)
            for (country, province, candidate, sentiment), count in state.counters.items()
        ),
        key=lambda row: row[:4],
    )
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(_AGGREGATE_HEADER)
        writer.writerows(rows)


def read_aggregate_csv(path: str | Path) -> AggregateState:
    """Rebuild an AggregateState written by write_aggregate_csv."""
    state = AggregateState()
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header != _AGGREGATE_HEADER:
            raise PulsoError(f"{path}: unexpected aggregate header: {header}")
        for line in reader:
            if len(line) != 5:
                raise PulsoError(f"{path}: bad aggregate row: {line}")
            country, province, candidate_text, sentiment_text, count_text = line
            try:
                candidate = CandidateLabel(candidate_text)
                sentiment = SentimentLabel.from_text(sentiment_text)
                count = int(count_text)
            except ValueError as exc:
                raise PulsoError(f"{path}: bad aggregate row: {line} ({exc})") from None
            if count <= 0:
                raise PulsoError(f"{path}: nonpositive count in row: {line}")
            state.counters[(country, province, candidate, sentiment)] += count
            state.considered_total += count
    return state


def write_province_csv(
    rows: Sequence[ProvinceRow], path: str | Path, decimals: int = 2
) -> None:
    """Write the province table; percentages rendered at ``decimals`` places."""

    def pct(value: Optional[float]) -> str:
        return "" if value is None else f"{value:.{decimals}f}"

    def num(value: Optional[int]) -> str:
        return "" if value is None else str(value)

    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(
            [
                "country",
                "province",
                "tweets_scioli",
                "tweets_macri",
                "tweets_total",
                "votes_scioli",
                "votes_macri",
                "pct_tw_scioli",
                "pct_tw_macri",
                "pct_v_scioli",
                "pct_v_macri",
            ]
        )
        for row in rows:
            writer.writerow(
                [
                    row.country,
                    row.province,
                    row.tweets_scioli,
                    row.tweets_macri,
                    row.tweets_total,
                    num(row.votes_scioli),
                    num(row.votes_macri),
                    pct(row.pct_tw_scioli),
                    pct(row.pct_tw_macri),
                    pct(row.pct_v_scioli),
                    pct(row.pct_v_macri),
                ]
            )
