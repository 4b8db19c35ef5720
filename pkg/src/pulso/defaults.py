"""Access to the data files bundled with the package.

The dictionaries and the location rule table are the published runoff
configuration; the reference CSVs carry the per-province positive-tweet
tallies and the official vote counts of the 2015 runoff, used by the demos
and the acceptance tests.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .attribution import LocationRule, load_location_rules
from .lexicon import Lexicon, load_lexicon
from .stats import OfficialResult, load_official_results

__all__ = [
    "ReferenceRow",
    "data_dir",
    "default_lexicon",
    "default_location_rules",
    "load_reference_table",
    "official_results",
    "official_results_path",
    "reference_table_path",
]


def data_dir() -> Path:
    """Directory holding the bundled data files."""
    return Path(str(resources.files("pulso").joinpath("data")))


def default_lexicon() -> Lexicon:
    return load_lexicon(data_dir())


def default_location_rules() -> list[LocationRule]:
    return load_location_rules(data_dir() / "locations.tsv")


def official_results_path() -> Path:
    return data_dir() / "official_results_2015.csv"


def official_results() -> list[OfficialResult]:
    return load_official_results(official_results_path())


def reference_table_path() -> Path:
    return data_dir() / "cuadro2_reference.csv"


@dataclass(frozen=True)
class ReferenceRow:
    """One row of the published per-province results table.

    Optional columns are None where the published table leaves the cell
    blank (vote data for foreign countries and unresolved locations).
    """

    country: str
    province: str
    tweets_scioli: int
    tweets_macri: int
    tweets_total: int
    votes_scioli: Optional[int]
    votes_macri: Optional[int]
    votes_total: Optional[int]
    population: Optional[int]
    pct_tw_scioli: Optional[float]
    pct_tw_macri: Optional[float]
    pct_v_scioli: Optional[float]
    pct_v_macri: Optional[float]
    pct_tweets: Optional[float]
    pct_votes: Optional[float]
    pct_population: Optional[float]


def _opt_int(cell: str) -> Optional[int]:
    return int(cell) if cell else None


def _opt_float(cell: str) -> Optional[float]:
    return float(cell) if cell else None


def load_reference_table(path: Optional[str | Path] = None) -> list[ReferenceRow]:
    """Load the published per-province table (bundled copy by default)."""
    path = Path(path) if path is not None else reference_table_path()
    rows: list[ReferenceRow] = []
    with open(path, encoding="utf-8", newline="") as handle:
        for record in csv.DictReader(handle):
            rows.append(
                ReferenceRow(
                    country=record["country"],
                    province=record["province"],
                    tweets_scioli=int(record["tweets_scioli"]),
                    tweets_macri=int(record["tweets_macri"]),
                    tweets_total=int(record["tweets_total"]),
                    votes_scioli=_opt_int(record["votes_scioli"]),
                    votes_macri=_opt_int(record["votes_macri"]),
                    votes_total=_opt_int(record["votes_total"]),
                    population=_opt_int(record["population"]),
                    pct_tw_scioli=_opt_float(record["pct_tw_scioli"]),
                    pct_tw_macri=_opt_float(record["pct_tw_macri"]),
                    pct_v_scioli=_opt_float(record["pct_v_scioli"]),
                    pct_v_macri=_opt_float(record["pct_v_macri"]),
                    pct_tweets=_opt_float(record["pct_tweets"]),
                    pct_votes=_opt_float(record["pct_votes"]),
                    pct_population=_opt_float(record["pct_population"]),
                )
            )
    return rows
