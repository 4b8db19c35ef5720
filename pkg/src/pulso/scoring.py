"""Sentence segmentation, tokenization and dictionary scoring.

A tweet is split into sentences, each sentence into tokens in canonical
match form, and each sentence is scored independently: +1 per positive
dictionary hit, -1 per negative hit.  The first token (or contiguous
phrase) that matches an attribute or synonym becomes the sentence's
attribute.  A token is consumed by at most one match.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Optional

from .lexicon import Lexicon, canonical_form

__all__ = [
    "ScorerOptions",
    "SentenceSentiment",
    "SentimentLabel",
    "analyze_tweet",
    "score_sentence",
    "segment_sentences",
    "tokenize",
    "tweet_score",
]


@dataclass(frozen=True)
class ScorerOptions:
    filter_links: bool = True
    filter_user_mentions: bool = False
    filter_hashtags: bool = False


DEFAULT_OPTIONS = ScorerOptions()


class SentimentLabel(IntEnum):
    """Sign of a tweet's summed sentence scores."""

    NEGATIVO = -1
    NEUTRO = 0
    POSITIVO = 1

    @property
    def text(self) -> str:
        return _LABEL_TEXT[self]

    @classmethod
    def from_text(cls, text: str) -> "SentimentLabel":
        try:
            return _TEXT_LABEL[text]
        except KeyError:
            raise ValueError(f"unknown sentiment label: {text!r}") from None


_LABEL_TEXT = {
    SentimentLabel.NEGATIVO: "Negativo",
    SentimentLabel.NEUTRO: "Neutro",
    SentimentLabel.POSITIVO: "Positivo",
}
_TEXT_LABEL = {text: label for label, text in _LABEL_TEXT.items()}


@dataclass(frozen=True)
class SentenceSentiment:
    text: str
    attribute: Optional[str]
    score: int


_SENTENCE_BOUNDARY = re.compile(r"(?<=[.!?…])\s+")


def segment_sentences(text: str) -> list[str]:
    """Split ``text`` on newlines and on sentence-final punctuation.

    The punctuation mark stays with the preceding sentence; empty segments
    are discarded, so whitespace-only input yields no sentences.
    """
    segments = []
    for line in text.split("\n"):
        for segment in _SENTENCE_BOUNDARY.split(line):
            segment = segment.strip()
            if segment:
                segments.append(segment)
    return segments


def _strippable(char: str) -> bool:
    return unicodedata.category(char)[0] in "PS"


def _strip_token(token: str) -> str:
    # surrounding punctuation and symbols go, but a leading '#' or '@'
    # marker is never stripped from the front
    end = len(token)
    while end > 0 and _strippable(token[end - 1]):
        end -= 1
    start = 0
    while start < end and _strippable(token[start]) and token[start] not in "#@":
        start += 1
    out = token[start:end]
    return "" if out in ("#", "@") else out


def tokenize(
    sentence: str,
    options: ScorerOptions = DEFAULT_OPTIONS,
    keep_verbatim: frozenset[str] = frozenset(),
) -> list[str]:
    """Whitespace-split ``sentence`` into canonical match form tokens.

    Surrounding punctuation is stripped (keeping a leading '#' or '@'),
    URL tokens are dropped when ``options.filter_links`` is set, and
    mention/hashtag tokens are dropped per the remaining options.

    A token whose stripped form is empty survives verbatim when its
    canonical form appears in ``keep_verbatim``; this is how punctuation
    emoticons listed in a dictionary reach the scorer.
    """
    tokens = []
    for raw in sentence.split():
        stripped = _strip_token(raw)
        if stripped:
            token = canonical_form(stripped)
        else:
            token = canonical_form(raw)
            if token not in keep_verbatim:
                continue
        if options.filter_links and token.startswith(("http://", "https://")):
            continue
        if options.filter_user_mentions and token.startswith("@"):
            continue
        if options.filter_hashtags and token.startswith("#"):
            continue
        tokens.append(token)
    return tokens


def _entry_tokens(form: str) -> tuple[str, ...]:
    return tuple(form.split(" "))


def _build_index(lexicon: Lexicon) -> dict:
    attr: dict[str, list] = {}
    pos: dict[str, list] = {}
    neg: dict[str, list] = {}

    def add(table: dict, form: str, payload) -> None:
        entry = _entry_tokens(form)
        table.setdefault(entry[0], []).append((entry, payload))

    for form in lexicon.attributes:
        add(attr, form, form)
    for form, base in lexicon.synonyms.items():
        add(attr, form, base)
    for form in lexicon.positive_words:
        add(pos, form, None)
    for form in lexicon.negative_words:
        add(neg, form, None)
    for table in (attr, pos, neg):
        for candidates in table.values():
            # longest phrase first, then lexicographic for determinism
            candidates.sort(key=lambda item: (-len(item[0]), item[0]))
    return {"attr": attr, "pos": pos, "neg": neg}


def _index_for(lexicon: Lexicon) -> dict:
    # memoized on the instance the same way cached_property stores its
    # value; Lexicon is frozen so the index never goes stale
    index = lexicon.__dict__.get("_scoring_index")
    if index is None:
        index = _build_index(lexicon)
        lexicon.__dict__["_scoring_index"] = index
    return index


def _longest_match(tokens: list[str], i: int, candidates: list) -> Optional[tuple]:
    for entry, payload in candidates:
        j = i + len(entry)
        if j <= len(tokens) and tuple(tokens[i:j]) == entry:
            return entry, payload
    return None


def score_sentence(
    tokens: list[str], lexicon: Lexicon, text: Optional[str] = None
) -> SentenceSentiment:
    """Score one tokenized sentence against ``lexicon``.

    Tokens must already be in canonical match form.  The scan is left to
    right; at each position an attribute or synonym match takes precedence
    over a positive match, which takes precedence over a negative one, and
    within a class the longest phrase starting there wins.  Matched tokens
    are consumed.  The attribute is the first one matched; later attribute
    hits neither rebind it nor affect the score.
    """
    index = _index_for(lexicon)
    attribute: Optional[str] = None
    score = 0
    i = 0
    while i < len(tokens):
        first = tokens[i]
        hit = _longest_match(tokens, i, index["attr"].get(first, ()))
        if hit is not None:
            if attribute is None:
                attribute = hit[1]
            i += len(hit[0])
            continue
        hit = _longest_match(tokens, i, index["pos"].get(first, ()))
        if hit is not None:
            score += 1
            i += len(hit[0])
            continue
        hit = _longest_match(tokens, i, index["neg"].get(first, ()))
        if hit is not None:
            score -= 1
            i += len(hit[0])
            continue
        i += 1
    if text is None:
        text = " ".join(tokens)
    return SentenceSentiment(text=text, attribute=attribute, score=score)


def analyze_tweet(
    record, lexicon: Lexicon, options: ScorerOptions = DEFAULT_OPTIONS
) -> list[SentenceSentiment]:
    """Segment, tokenize and score a tweet; one SentenceSentiment per sentence.

    ``record`` may be a TweetRecord or a plain string.  Empty text yields an
    empty list.  Language filtering is the caller's job (the ingest filter);
    this function scores whatever it is given.
    """
    text = getattr(record, "text", record)
    keep = lexicon.verbatim_tokens
    return [
        score_sentence(tokenize(segment, options, keep), lexicon, text=segment)
        for segment in segment_sentences(text)
    ]


def tweet_score(scores: Iterable[int]) -> SentimentLabel:
    """Collapse per-sentence scores to the tweet label by the sign of the sum.

    An empty iterable sums to zero and is Neutro.
    """
    total = sum(scores)
    if total > 0:
        return SentimentLabel.POSITIVO
    if total < 0:
        return SentimentLabel.NEGATIVO
    return SentimentLabel.NEUTRO
