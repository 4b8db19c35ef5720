"""
Tuning the dictionaries against a fresh corpus
==============================================

The original word lists were grown by looking at what the corpus
actually says: frequent terms missing from every dictionary are
candidates for the sentiment lists, and locations nobody mapped yet
get new rules.  This script runs one loop of that process.
"""

import json
import tempfile
from pathlib import Path

from pulso import (
    IngestFilter,
    Lexicon,
    analyze_tweet,
    dedupe,
    iter_corpus,
    load_lexicon,
    passes_filter,
    save_lexicon,
    suggest_terms,
    tweet_score,
    unmatched_locations,
)
from pulso.defaults import default_lexicon, default_location_rules

workdir = Path(tempfile.mkdtemp(prefix="pulso-tune-"))

# A morning of fresh tweets.  "imparable" shows up three times but is
# in no dictionary yet, and three users set their location to
# neighborhoods the rule table does not know.
tweets = [
    (1, "Macri imparable en el debate", "Villa Crespo"),
    (2, "Scioli y su CaravanaNaranja", "Rosario"),
    (3, "Macri imparable rumbo al balotaje", "Villa Crespo"),
    (4, "Dicen que Macri viene imparable", ""),
    (5, "Scioli responde a Macri", "Temperley"),
]
corpus = workdir / "corpus.jsonl"
with open(corpus, "w", encoding="utf-8") as handle:
    for tweet_id, text, location in tweets:
        record = {
            "id": tweet_id,
            "created_at": "2015-11-20T10:00:00-03:00",
            "text": text,
            "lang": "es",
        }
        if location:
            record["user.location"] = location
        handle.write(json.dumps(record, ensure_ascii=False) + "\n")

ingest = IngestFilter.default()
records = [
    record
    for record in dedupe(iter_corpus(corpus))
    if passes_filter(record, ingest)
]
print(f"{len(records)} records pass the ingest filter")

# Step 1: which frequent terms does no dictionary know?  Candidate
# names and stopwords show up too; a human picks the keepers.
lexicon = default_lexicon()
for term, count in suggest_terms(records, lexicon, top_k=5):
    print(f"  {count}x {term}")

# Step 2: which user locations match no rule?
for location, count in unmatched_locations(records, default_location_rules()):
    print(f"  {count}x {location!r}")

# "imparable" reads as praise, so it joins the positive list.  Lexicon
# objects are immutable; build a new one and save it as the four
# dictionary files.
tuned = Lexicon(
    attributes=lexicon.attributes,
    synonyms=dict(lexicon.synonyms),
    positive_words=lexicon.positive_words | {"imparable"},
    negative_words=lexicon.negative_words,
    display_forms=dict(lexicon.display_forms),
)
save_lexicon(tuned, workdir / "dictionaries")
print("saved", sorted(p.name for p in (workdir / "dictionaries").iterdir()))

# Step 3: rescore with the reloaded dictionaries.  Tweets that were
# neutral mentions of macri before now count as positive.
reloaded = load_lexicon(workdir / "dictionaries")
for record in records:
    before = tweet_score(s.score for s in analyze_tweet(record, lexicon))
    after = tweet_score(s.score for s in analyze_tweet(record, reloaded))
    marker = "->" if before is not after else "  "
    print(f"  {record.text!r}: {before.text} {marker} {after.text}")
