"""Sentiment dictionaries: loading, validation, saving and term suggestion.

A lexicon is four dictionaries working together:

* attributes: the entities tweets are scored against (candidate surnames),
* synonyms: alternate spellings and campaign hashtags mapped to an attribute,
* positive words: terms and phrases that add one point,
* negative words: terms and phrases that subtract one point.

All matching elsewhere in the package happens in *canonical match form*
(Unicode NFC + casefold), so entries are stored canonicalized.  Diacritics
are significant: "Aníbal" and "Anibal" are distinct entries.  Original
spellings are retained so a lexicon can be written back to disk unchanged.
"""

from __future__ import annotations

import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, NamedTuple

from .errors import PulsoError

__all__ = [
    "Lexicon",
    "LexiconError",
    "TermFrequency",
    "canonical_form",
    "load_lexicon",
    "save_lexicon",
    "suggest_terms",
]

WHITE_LIST_FILE = "white_list.txt"
NORMALIZATION_FILE = "normalization.tsv"
POSITIVE_FILE = "pos_words.txt"
NEGATIVE_FILE = "neg_words.txt"


class LexiconError(PulsoError):
    """A dictionary file is missing, malformed or inconsistent."""


def canonical_form(text: str) -> str:
    """Return the canonical match form of ``text``: NFC then casefold.

    Accents survive ("Aníbal" -> "aníbal"), case does not.
    """
    return unicodedata.normalize("NFC", text).casefold()


def _collapse_spaces(text: str) -> str:
    # multi-word entries must align with whitespace tokenization
    return " ".join(text.split())


class TermFrequency(NamedTuple):
    term: str
    count: int


@dataclass(frozen=True)
class Lexicon:
    """Immutable bundle of the four dictionaries, in canonical match form.

    ``synonyms`` maps the canonical form of each synonym to the canonical
    attribute it stands for.  ``display_forms`` maps canonical forms back to
    the spelling first seen on disk, for faithful round-tripping.
    """

    attributes: frozenset[str]
    synonyms: dict[str, str]
    positive_words: frozenset[str]
    negative_words: frozenset[str]
    display_forms: dict[str, str] = field(default_factory=dict)

    @cached_property
    def known_forms(self) -> frozenset[str]:
        """Every canonical entry across the four dictionaries."""
        return frozenset(
            set(self.attributes)
            | set(self.synonyms)
            | set(self.positive_words)
            | set(self.negative_words)
        )

    @cached_property
    def verbatim_tokens(self) -> frozenset[str]:
        """Single-token entries, used to rescue tokens that stripping empties."""
        return frozenset(form for form in self.known_forms if " " not in form)

    def display(self, form: str) -> str:
        return self.display_forms.get(form, form)


def _iter_entry_lines(path: Path) -> Iterable[tuple[int, str]]:
    try:
        raw = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise LexiconError(f"missing dictionary file: {path}") from None
    for number, line in enumerate(raw.splitlines(), start=1):
        if line.strip():
            yield number, line.strip()


def _load_word_file(path: Path) -> tuple[set[str], dict[str, str]]:
    entries: set[str] = set()
    display: dict[str, str] = {}
    for _, line in _iter_entry_lines(path):
        spelled = _collapse_spaces(line)
        form = canonical_form(spelled)
        entries.add(form)
        display.setdefault(form, spelled)
    return entries, display


def load_lexicon(directory: str | Path) -> Lexicon:
    """Load the four dictionary files from ``directory``.

    Raises LexiconError when a file is missing, the attribute list is empty,
    a synonym maps to an unknown attribute, a normalization line does not
    have exactly two tab-separated columns, or a term appears in both the
    positive and the negative list.
    """
    directory = Path(directory)
    display: dict[str, str] = {}

    attributes, attr_display = _load_word_file(directory / WHITE_LIST_FILE)
    if not attributes:
        raise LexiconError(f"empty attribute list: {directory / WHITE_LIST_FILE}")
    display.update(attr_display)

    synonyms: dict[str, str] = {}
    norm_path = directory / NORMALIZATION_FILE
    for number, line in _iter_entry_lines(norm_path):
        columns = line.split("\t")
        if len(columns) != 2:
            raise LexiconError(
                f"{norm_path}:{number}: expected 2 tab-separated columns, "
                f"got {len(columns)}"
            )
        base_spelled = _collapse_spaces(columns[0])
        syn_spelled = _collapse_spaces(columns[1])
        if not base_spelled or not syn_spelled:
            raise LexiconError(f"{norm_path}:{number}: empty column")
        base = canonical_form(base_spelled)
        if base not in attributes:
            raise LexiconError(
                f"{norm_path}:{number}: synonym target {base_spelled!r} is not "
                f"in the attribute list"
            )
        form = canonical_form(syn_spelled)
        if form in attributes:
            if form == base:
                # identity row, the attribute list already covers it
                continue
            raise LexiconError(
                f"{norm_path}:{number}: synonym {syn_spelled!r} is itself an "
                f"attribute and cannot map elsewhere"
            )
        if form in synonyms and synonyms[form] != base:
            raise LexiconError(
                f"{norm_path}:{number}: synonym {syn_spelled!r} maps to two "
                f"different attributes"
            )
        synonyms[form] = base
        display.setdefault(form, syn_spelled)

    positive, pos_display = _load_word_file(directory / POSITIVE_FILE)
    for form, spelled in pos_display.items():
        display.setdefault(form, spelled)
    negative, neg_display = _load_word_file(directory / NEGATIVE_FILE)
    for form, spelled in neg_display.items():
        display.setdefault(form, spelled)

    overlap = positive & negative
    if overlap:
        listed = ", ".join(sorted(overlap))
        raise LexiconError(f"terms in both polarity lists: {listed}")

    return Lexicon(
        attributes=frozenset(attributes),
        synonyms=synonyms,
        positive_words=frozenset(positive),
        negative_words=frozenset(negative),
        display_forms=display,
    )


def save_lexicon(lexicon: Lexicon, directory: str | Path) -> None:
    """Write the four dictionary files, one entry per line, sorted.

    Uses the remembered display spellings, so load -> save -> load yields an
    equal Lexicon.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    def write_words(name: str, forms: Iterable[str]) -> None:
        lines = [lexicon.display(form) for form in sorted(forms)]
        (directory / name).write_text(
            "".join(line + "\n" for line in lines), encoding="utf-8"
        )

    write_words(WHITE_LIST_FILE, lexicon.attributes)
    write_words(POSITIVE_FILE, lexicon.positive_words)
    write_words(NEGATIVE_FILE, lexicon.negative_words)

    rows = [
        f"{lexicon.display(base)}\t{lexicon.display(form)}\n"
        for form, base in sorted(lexicon.synonyms.items())
    ]
    (directory / NORMALIZATION_FILE).write_text("".join(rows), encoding="utf-8")


def suggest_terms(corpus: Iterable, lexicon: Lexicon, top_k: int = 20) -> list[TermFrequency]:
    """Rank terms from ``corpus`` that are absent from every dictionary.

    Terms are raw space-separated words with original casing preserved
    ("Macri" and "macri" count separately); a term is excluded when its
    canonical form is already a lexicon entry.  Returns at most ``top_k``
    terms, count-descending, ties broken lexicographically.  Corpus items
    may be TweetRecords or plain strings.
    """
    if top_k < 0:
        raise ValueError("top_k must be non-negative")
    counts: Counter[str] = Counter()
    for item in corpus:
        text = getattr(item, "text", item)
        for term in text.split(" "):
            if term:
                counts[term] += 1
    known = lexicon.known_forms
    ranked = sorted(
        (
            TermFrequency(term, count)
            for term, count in counts.items()
            if canonical_form(term) not in known
        ),
        key=lambda tf: (-tf.count, tf.term),
    )
    return ranked[:top_k]
