"""Pearson correlation with a two-sided significance test, plus the
official vote table the tweet counts are correlated against.

The p-value comes from the exact relation between the t distribution and
the regularized incomplete beta function: with t = r*sqrt(n-2)/sqrt(1-r^2)
and df = n-2, the two-sided p equals I_{df/(df+t^2)}(df/2, 1/2).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np
from scipy.special import betainc

from .errors import PulsoError

__all__ = [
    "ConstantVectorError",
    "CorrelationResult",
    "OfficialResult",
    "OfficialResultsError",
    "correlation_test",
    "load_official_results",
    "pearson_r",
]


class ConstantVectorError(PulsoError):
    """A vector has zero variance, so the correlation is undefined."""


class OfficialResultsError(PulsoError):
    """The official results file is malformed."""


@dataclass(frozen=True)
class CorrelationResult:
    r: float
    p_value: float
    n: int
    degenerate: bool = False


def _as_vector(values, name: str) -> np.ndarray:
    vector = np.asarray(values, dtype=float)
    if vector.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    return vector


def pearson_r(x: Sequence[float], y: Sequence[float]) -> float:
    """Product-moment correlation of two equal-length vectors.

    Computed two-pass on centered values in double precision; the result is
    clamped to [-1, 1] to absorb rounding overshoot.  Raises ValueError on
    length mismatch or fewer than two points, ConstantVectorError when
    either vector has zero variance.
    """
    xv = _as_vector(x, "x")
    yv = _as_vector(y, "y")
    if xv.size != yv.size:
        raise ValueError(f"length mismatch: {xv.size} vs {yv.size}")
    if xv.size < 2:
        raise ValueError("need at least two points")
    dx = xv - xv.mean()
    dy = yv - yv.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        raise ConstantVectorError("zero variance vector")
    r = float(dx @ dy) / float(np.sqrt(sxx * syy))
    return max(-1.0, min(1.0, r))


def correlation_test(x: Sequence[float], y: Sequence[float]) -> CorrelationResult:
    """Pearson r with its two-sided p-value under the t distribution.

    Needs at least three points (df = n - 2 >= 1).  When |r| = 1 the t
    statistic diverges; the result carries p = 0 and the degenerate flag.
    """
    xv = _as_vector(x, "x")
    if xv.size < 3:
        raise ValueError("need at least three points for a p-value")
    r = pearson_r(x, y)
    n = int(xv.size)
    if abs(r) == 1.0:
        return CorrelationResult(r=r, p_value=0.0, n=n, degenerate=True)
    df = n - 2
    t_squared = df * r * r / (1.0 - r * r)
    p = float(betainc(df / 2.0, 0.5, df / (df + t_squared)))
    return CorrelationResult(r=r, p_value=max(0.0, min(1.0, p)), n=n)


@dataclass(frozen=True)
class OfficialResult:
    province: str
    votes_scioli: int
    votes_macri: int


_OFFICIAL_HEADER = ["province", "votes_scioli", "votes_macri"]


def load_official_results(path: str | Path) -> list[OfficialResult]:
    """Load the official per-province runoff votes from CSV.

    Columns: province, votes_scioli, votes_macri.  Vote counts must be
    non-negative integers and province names unique.
    """
    path = Path(path)
    try:
        handle = open(path, encoding="utf-8", newline="")
    except FileNotFoundError:
        raise OfficialResultsError(f"missing official results file: {path}") from None
    results: list[OfficialResult] = []
    seen: set[str] = set()
    with handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header != _OFFICIAL_HEADER:
            raise OfficialResultsError(f"{path}: unexpected header: {header}")
        for number, line in enumerate(reader, start=2):
            if len(line) != 3:
                raise OfficialResultsError(f"{path}:{number}: expected 3 columns")
            province, scioli_text, macri_text = (c.strip() for c in line)
            if not province:
                raise OfficialResultsError(f"{path}:{number}: empty province")
            if province in seen:
                raise OfficialResultsError(f"{path}:{number}: duplicate province {province!r}")
            seen.add(province)
            try:
                votes_scioli = int(scioli_text)
                votes_macri = int(macri_text)
            except ValueError:
                raise OfficialResultsError(
                    f"{path}:{number}: vote counts must be integers"
                ) from None
            if votes_scioli < 0 or votes_macri < 0:
                raise OfficialResultsError(f"{path}:{number}: negative vote count")
            results.append(
                OfficialResult(
                    province=province, votes_scioli=votes_scioli, votes_macri=votes_macri
                )
            )
    return results
