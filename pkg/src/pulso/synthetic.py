"""Deterministic synthetic corpus generator for demos and tests.

The generator mixes candidate mentions, dictionary terms, hashtags, URLs,
noisy locations, languages, timestamps on both sides of the poll-close
cutoff, duplicate ids and malformed lines, all driven by one seeded RNG so
a given (n, seed) pair always produces the same bytes.
"""

from __future__ import annotations

import json
import random
from datetime import datetime, timedelta, timezone
from pathlib import Path

__all__ = ["generate_corpus"]

_ART = timezone(timedelta(hours=-3))

_CANDIDATES = ["Macri", "macri", "MACRI", "Scioli", "scioli", "SCIOLI", "Macri y Scioli"]
_POSITIVE = ["Cambiemos", "CambiemosConMacri", "CaravanaNaranja", "yolovotoamm", "678ConLaGenteAdentro"]
_NEGATIVE = ["Aníbal", "CampañaDeMiedo", "2001", "90", "aumentará los impuestos", "Anibal fernandez"]
_FILLER = ["el", "voto", "mañana", "urnas", "hoy", "vamos", "jaja", "país", "balotaje", "gana", "para", "todos"]
_DECOR = ["http://t.co/abc123", "https://t.co/Zz9", "@amigo", "#Balotaje2015", "#Cambiemos", "#FPV", "..."]
_LOCATIONS = [
    "Córdoba, Argentina",
    "CABA",
    "caba - argentina",
    "Buenos Aires",
    "Rosario",
    "tucuman",
    "La Rioja",
    "San Miguel de Tucumán",
    "Neuquén capital",
    "Madrid",
    "montevideo",
    "mi casa",
    "el mundo",
    "Springfield",
    "",
]
_SCREEN_NAMES = ["clarincom", "votante77", "lanacion", "pibeDeBarrio", "mariaj", "TV_PUBLICA"]
_LANGS = ["es", "es", "es", "es", "es", "es", "es", "es", "en", "pt"]

_EPOCH = datetime(2015, 11, 5, 0, 0, 0, tzinfo=_ART)
_SPAN_SECONDS = 18 * 24 * 3600  # through runoff evening, past the cutoff


def _sentence(rng: random.Random) -> str:
    words = []
    if rng.random() < 0.75:
        words.append(rng.choice(_CANDIDATES))
    for _ in range(rng.randint(2, 7)):
        bucket = rng.random()
        if bucket < 0.18:
            words.append(rng.choice(_POSITIVE))
        elif bucket < 0.30:
            words.append(rng.choice(_NEGATIVE))
        elif bucket < 0.42:
            words.append(rng.choice(_DECOR))
        else:
            words.append(rng.choice(_FILLER))
    rng.shuffle(words)
    text = " ".join(words)
    return text + rng.choice([".", "!", "?", "", ""])


def _record(rng: random.Random, tweet_id: int) -> dict:
    text = " ".join(_sentence(rng) for _ in range(rng.randint(1, 3)))
    stamp = _EPOCH + timedelta(seconds=rng.randrange(_SPAN_SECONDS))
    record = {
        "id": tweet_id,
        "created_at": stamp.isoformat(),
        "text": text[:500],
        "lang": rng.choice(_LANGS),
        "user.screen_name": rng.choice(_SCREEN_NAMES),
        "user.location": rng.choice(_LOCATIONS),
    }
    if rng.random() < 0.4:
        record["user.name"] = "Usuario " + str(rng.randint(1, 999))
        record["user.followers_count"] = rng.randint(0, 50000)
    if rng.random() < 0.2:
        record["retweeted_status.id"] = tweet_id - rng.randint(1, 10**6)
        record["retweeted_status.retweet_count"] = rng.randint(0, 5000)
    if rng.random() < 0.1:
        record["coordinates.coordinates.0"] = round(rng.uniform(-73.0, -53.0), 6)
        record["coordinates.coordinates.1"] = round(rng.uniform(-55.0, -21.0), 6)
    if rng.random() < 0.3:
        record["entities.hashtags.0.text"] = rng.choice(["Balotaje2015", "Cambiemos", "FPV"])
    return record


def generate_corpus(
    path: str | Path,
    n: int,
    *,
    seed: int = 0,
    malformed_rate: float = 0.02,
    duplicate_rate: float = 0.02,
) -> int:
    """Write ``n`` tweet lines (plus occasional malformed ones) to ``path``.

    Returns the total number of lines written.  Duplicates repeat an
    earlier id with fresh content, so dedupe keeps the first occurrence.
    """
    rng = random.Random(seed)
    path = Path(path)
    lines: list[str] = []
    issued_ids: list[int] = []
    next_id = 667000000000000000
    for _ in range(n):
        if issued_ids and rng.random() < duplicate_rate:
            tweet_id = rng.choice(issued_ids)
        else:
            next_id += rng.randint(1, 99)
            tweet_id = next_id
        issued_ids.append(tweet_id)
        lines.append(json.dumps(_record(rng, tweet_id), ensure_ascii=False))
        if rng.random() < malformed_rate:
            lines.append(
                rng.choice(
                    [
                        "{truncated",
                        '{"id": "not-an-int", "created_at": "2015-11-20T10:00:00-03:00", "text": "x", "lang": "es"}',
                        '{"id": 1}',
                        "[]",
                    ]
                )
            )
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return len(lines)
