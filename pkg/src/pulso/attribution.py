"""Candidate attribution and location normalization.

Candidate attribution is a case-insensitive substring test on the raw tweet
text.  Location normalization maps the free-text profile location to a
(province, country) pair through an ordered rule table: the first rule whose
pattern occurs in the folded location wins, so specific patterns must be
ordered before general ones.
"""

from __future__ import annotations

import unicodedata
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

from .errors import PulsoError

__all__ = [
    "CandidateLabel",
    "LocationEntry",
    "LocationResolver",
    "LocationRule",
    "LocationRuleError",
    "UNKNOWN_LOCATION",
    "classify",
    "load_location_rules",
    "normalize_location",
    "unmatched_locations",
]


class CandidateLabel(str, Enum):
    MACRI = "Macri"
    SCIOLI = "Scioli"
    SCIOLI_MACRI = "Scioli-Macri"
    SIN_CANDIDATO = "Sin Candidato"


def classify(text: str) -> CandidateLabel:
    """Label a tweet by which candidate surnames its text mentions."""
    folded = text.casefold()
    mentions_macri = "macri" in folded
    mentions_scioli = "scioli" in folded
    if mentions_macri and mentions_scioli:
        return CandidateLabel.SCIOLI_MACRI
    if mentions_macri:
        return CandidateLabel.MACRI
    if mentions_scioli:
        return CandidateLabel.SCIOLI
    return CandidateLabel.SIN_CANDIDATO


class LocationRuleError(PulsoError):
    """The location rule table is malformed."""


@dataclass(frozen=True)
class LocationRule:
    order: int
    pattern: str
    province: str
    country: str


@dataclass(frozen=True)
class LocationEntry:
    province: str
    country: str


UNKNOWN_LOCATION = LocationEntry(province="Sin Provincia", country="Sin País")


def _fold(text: str) -> str:
    return unicodedata.normalize("NFC", text).lower()


def load_location_rules(path: str | Path) -> list[LocationRule]:
    """Load rules from a TSV of order, pattern, province, country.

    Orders must be unique integers; rules are returned sorted by order.
    Patterns are folded at load time so matching is case-insensitive.
    """
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise LocationRuleError(f"missing rule file: {path}") from None
    rules: list[LocationRule] = []
    seen: set[int] = set()
    for number, line in enumerate(raw.splitlines(), start=1):
        if not line.strip():
            continue
        columns = line.split("\t")
        if len(columns) != 4:
            raise LocationRuleError(
                f"{path}:{number}: expected 4 tab-separated columns, "
                f"got {len(columns)}"
            )
        order_text, pattern, province, country = (c.strip() for c in columns)
        try:
            order = int(order_text)
        except ValueError:
            raise LocationRuleError(
                f"{path}:{number}: order is not an integer: {order_text!r}"
            ) from None
        if order in seen:
            raise LocationRuleError(f"{path}:{number}: duplicate order {order}")
        seen.add(order)
        if not pattern or not province or not country:
            raise LocationRuleError(f"{path}:{number}: empty column")
        rules.append(
            LocationRule(
                order=order, pattern=_fold(pattern), province=province, country=country
            )
        )
    rules.sort(key=lambda rule: rule.order)
    return rules


def normalize_location(raw: str, rules: Sequence[LocationRule]) -> LocationEntry:
    """Resolve a raw profile location; first matching rule wins.

    Empty input and rule misses both map to UNKNOWN_LOCATION.
    """
    if raw:
        folded = _fold(raw)
        for rule in rules:
            if rule.pattern in folded:
                return LocationEntry(province=rule.province, country=rule.country)
    return UNKNOWN_LOCATION


class LocationResolver:
    """normalize_location memoized per distinct raw string.

    Profile locations repeat heavily, so the cache is bounded by the number
    of distinct strings, not by corpus size.
    """

    def __init__(self, rules: Sequence[LocationRule]):
        self._rules = list(rules)
        self._cache: dict[str, LocationEntry] = {}

    def resolve(self, raw: str) -> LocationEntry:
        entry = self._cache.get(raw)
        if entry is None:
            entry = normalize_location(raw, self._rules)
            self._cache[raw] = entry
        return entry


def unmatched_locations(
    records: Iterable, rules: Sequence[LocationRule]
) -> list[tuple[str, int]]:
    """Count distinct non-empty raw locations no rule matches.

    Returns (raw, count) pairs, count-descending, ties broken by the raw
    string.  Records may be TweetRecords or plain strings.  Feed the result
    to whoever curates the rule table.
    """
    resolver = LocationResolver(rules)
    counts: Counter[str] = Counter()
    for item in records:
        raw = getattr(item, "user_location", item)
        if raw and resolver.resolve(raw) == UNKNOWN_LOCATION:
            counts[raw] += 1
    return sorted(counts.items(), key=lambda pair: (-pair[1], pair[0]))
