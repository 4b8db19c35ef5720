"""Corpus ingestion: JSON Lines parsing, filtering and deduplication.

One tweet per line, field names matching the capture table's column names
(dots included, e.g. "user.screen_name", "coordinates.coordinates.0").
A malformed line is an error to count and skip, never a reason to abort
the run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from pathlib import Path
from typing import Iterable, Iterator, Optional

from .errors import PulsoError

__all__ = [
    "DEFAULT_FOLLOW_ACCOUNTS",
    "DEFAULT_KEYWORDS",
    "ELECTION_CUTOFF",
    "IngestFilter",
    "RecordParseError",
    "TweetRecord",
    "dedupe",
    "iter_corpus",
    "parse_record",
    "passes_filter",
]

# harvest configuration kept live until the polls closed
DEFAULT_KEYWORDS = (
    "Cambiamos",
    "Cadena3Elecciones",
    "Argentina",
    "Elecciones2015",
    "macri",
    "fpv",
    "Balotaje",
    "ELECCIONES",
    "Scioli",
    "yolovotoamm",
    "peronismo",
    "MacriPresidente",
    "macripresidente",
    "CambiamosConMacri",
    "VamosConMacri",
    "mm2015",
    "MeHackearonLaCuenta",
    "CampañaSucia",
    "CampañaDeMiedo",
    "YoVotoAScioli",
    "MacriNosMiente",
    "SiMacriGana",
    "SiGanaMacri",
    "ScioliPresidente",
    "MIVICTORIA",
    "Balotaje2015",
    "argentinadebate",
    "ganascioli",
    "QueGaneScioli",
    "Mesaza",
    "GanoMacri",
)

DEFAULT_FOLLOW_ACCOUNTS = (
    "danieloscioli",
    "clarincom",
    "pagina_12",
    "infobae",
    "CSN",
    "6780ficial",
    "mauriciomacri",
    "TRIBUNACOMAR",
    "todonoticias",
    "lanacion",
    "TV_PUBLICA",
)

# polls closed at 18:00 Argentina time (UTC-3) on runoff day
ELECTION_CUTOFF = datetime(2015, 11, 22, 17, 59, 59, tzinfo=timezone(timedelta(hours=-3)))


class RecordParseError(PulsoError):
    """One corpus line could not be parsed into a TweetRecord."""

    def __init__(self, message: str, line_number: int = 0):
        super().__init__(message)
        self.line_number = line_number


@dataclass(frozen=True)
class TweetRecord:
    id: int
    created_at: datetime
    text: str
    lang: str
    user_name: str = ""
    screen_name: str = ""
    followers_count: int = 0
    user_location: str = ""
    retweet_count: Optional[int] = None
    retweeted_id: Optional[int] = None
    retweeted_favorite_count: Optional[int] = None
    retweeted_text: Optional[str] = None
    coordinates: Optional[tuple[float, float]] = None
    hashtags: tuple[str, ...] = ()


def _parse_created_at(value, fail) -> datetime:
    if not isinstance(value, str):
        fail("created_at must be a string")
    try:
        stamp = datetime.fromisoformat(value.replace("Z", "+00:00"))
    except ValueError:
        fail(f"bad created_at timestamp: {value!r}")
    if stamp.tzinfo is None:
        fail(f"created_at lacks a UTC offset: {value!r}")
    return stamp


def parse_record(line: str, line_number: int = 0) -> TweetRecord:
    """Parse one JSON line into a TweetRecord.

    Required fields: id (int), created_at (ISO-8601 with offset), text
    (string, <= 500 chars) and lang (string, <= 5 chars, lowercased).
    Optional fields are type-checked when present; JSON null counts as
    absent.  Unknown fields are ignored.  Raises RecordParseError.
    """

    def fail(message: str):
        raise RecordParseError(message, line_number)

    try:
        data = json.loads(line)
    except json.JSONDecodeError as exc:
        raise RecordParseError(f"invalid JSON: {exc}", line_number) from None
    if not isinstance(data, dict):
        fail("record is not a JSON object")

    def get_int(key: str, minimum: Optional[int] = None):
        value = data.get(key)
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, int):
            fail(f"{key} must be an integer")
        if minimum is not None and value < minimum:
            fail(f"{key} must be >= {minimum}")
        return value

    def get_str(key: str, max_len: int):
        value = data.get(key)
        if value is None:
            return None
        if not isinstance(value, str):
            fail(f"{key} must be a string")
        if len(value) > max_len:
            fail(f"{key} longer than {max_len} characters")
        return value

    def get_float(key: str):
        value = data.get(key)
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            fail(f"{key} must be a number")
        return float(value)

    tweet_id = get_int("id")
    if tweet_id is None:
        fail("missing id")
    created_at = _parse_created_at(data.get("created_at"), fail)
    text = get_str("text", 500)
    if text is None:
        fail("missing text")
    lang = get_str("lang", 5)
    if not lang:
        fail("missing lang")

    longitude = get_float("coordinates.coordinates.0")
    latitude = get_float("coordinates.coordinates.1")
    if (longitude is None) != (latitude is None):
        fail("coordinates need both components")
    coordinates = None if longitude is None else (longitude, latitude)

    hashtags = tuple(
        tag
        for tag in (
            get_str("entities.hashtags.0.text", 144),
            get_str("entities.hashtags.1.text", 144),
        )
        if tag is not None
    )

    return TweetRecord(
        id=tweet_id,
        created_at=created_at,
        text=text,
        lang=lang.lower(),
        user_name=get_str("user.name", 144) or "",
        screen_name=get_str("user.screen_name", 144) or "",
        followers_count=get_int("user.followers_count", minimum=0) or 0,
        user_location=get_str("user.location", 500) or "",
        retweet_count=get_int("retweeted_status.retweet_count", minimum=0),
        retweeted_id=get_int("retweeted_status.id"),
        retweeted_favorite_count=get_int("retweeted_status.favorite_count", minimum=0),
        retweeted_text=get_str("retweeted_status.text", 500),
        coordinates=coordinates,
        hashtags=hashtags,
    )


@dataclass(frozen=True)
class IngestFilter:
    """Which records enter the pipeline.

    A record passes when its text contains any keyword case-insensitively
    OR its author is a followed account (no topical gate when both sets are
    empty), its lang equals ``lang`` when set, and its timestamp falls in
    the inclusive window.  Window bounds must carry a UTC offset; they are
    compared on the UTC timeline.
    """

    keywords: frozenset[str] = frozenset()
    follow_accounts: frozenset[str] = frozenset()
    lang: Optional[str] = None
    window_start: Optional[datetime] = None
    window_end: Optional[datetime] = None

    def __post_init__(self):
        for name in ("window_start", "window_end"):
            bound = getattr(self, name)
            if bound is not None and bound.tzinfo is None:
                raise ValueError(f"{name} must carry a UTC offset")
        if (
            self.window_start is not None
            and self.window_end is not None
            and self.window_start > self.window_end
        ):
            raise ValueError("window_start is after window_end")

    @classmethod
    def default(cls) -> "IngestFilter":
        """The harvest configuration: runoff keywords and accounts, Spanish
        tweets, everything up to poll close."""
        return cls(
            keywords=frozenset(DEFAULT_KEYWORDS),
            follow_accounts=frozenset(DEFAULT_FOLLOW_ACCOUNTS),
            lang="es",
            window_end=ELECTION_CUTOFF,
        )


def _folded_sets(ingest_filter: IngestFilter) -> tuple[tuple[str, ...], frozenset[str]]:
    # memoized on the frozen instance, same trick as a cached_property
    cached = ingest_filter.__dict__.get("_folded")
    if cached is None:
        cached = (
            tuple(sorted({k.casefold() for k in ingest_filter.keywords})),
            frozenset(a.casefold() for a in ingest_filter.follow_accounts),
        )
        ingest_filter.__dict__["_folded"] = cached
    return cached


def passes_filter(record: TweetRecord, ingest_filter: IngestFilter) -> bool:
    if ingest_filter.lang is not None and record.lang != ingest_filter.lang:
        return False
    if ingest_filter.window_start is not None and record.created_at < ingest_filter.window_start:
        return False
    if ingest_filter.window_end is not None and record.created_at > ingest_filter.window_end:
        return False
    keywords, accounts = _folded_sets(ingest_filter)
    if keywords or accounts:
        text = record.text.casefold()
        if not any(keyword in text for keyword in keywords):
            if record.screen_name.casefold() not in accounts:
                return False
    return True


def iter_corpus(
    path: str | Path, errors: Optional[list[RecordParseError]] = None
) -> Iterator[TweetRecord]:
    """Yield records from a JSON Lines file, skipping malformed lines.

    Blank lines are ignored.  Parse errors are appended to ``errors`` when
    a list is given, otherwise dropped.  No filtering, no deduplication.
    """
    with open(path, encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                yield parse_record(line, number)
            except RecordParseError as exc:
                if errors is not None:
                    errors.append(exc)


def dedupe(records: Iterable[TweetRecord]) -> Iterator[TweetRecord]:
    """Drop records whose id was already seen; first occurrence wins."""
    seen: set[int] = set()
    for record in records:
        if record.id not in seen:
            seen.add(record.id)
            yield record
