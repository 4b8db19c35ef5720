"""Small builders shared across test modules."""

from __future__ import annotations

import json
from pathlib import Path

from pulso import Lexicon


def tweet_dict(
    tweet_id: int,
    text: str,
    lang: str = "es",
    created: str = "2015-11-20T10:00:00-03:00",
    location: str = "",
    **extra,
) -> dict:
    record = {
        "id": tweet_id,
        "created_at": created,
        "text": text,
        "lang": lang,
    }
    if location:
        record["user.location"] = location
    record.update(extra)
    return record


def write_jsonl(path: Path, items) -> Path:
    lines = [
        item if isinstance(item, str) else json.dumps(item, ensure_ascii=False)
        for item in items
    ]
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return path


def make_lexicon(
    attributes=(), synonyms=None, positive=(), negative=()
) -> Lexicon:
    """Build a Lexicon directly from canonical forms, bypassing the loader."""
    return Lexicon(
        attributes=frozenset(attributes),
        synonyms=dict(synonyms or {}),
        positive_words=frozenset(positive),
        negative_words=frozenset(negative),
    )
