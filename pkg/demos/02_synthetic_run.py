"""
Running the pipeline on a synthetic corpus
==========================================

Generates a corpus of fake runoff tweets, pushes it through the full
pipeline, and writes the four output files.
"""

import tempfile
from pathlib import Path

from pulso import IngestFilter, generate_corpus, run_pipeline, report_dict, write_outputs
from pulso.defaults import default_lexicon, default_location_rules, official_results

workdir = Path(tempfile.mkdtemp(prefix="pulso-demo-"))
corpus = workdir / "corpus.jsonl"

# The generator seeds a few malformed lines and duplicate ids on
# purpose, so the run report has something to count.
lines = generate_corpus(corpus, 5_000, seed=7)
print(f"wrote {lines} lines to {corpus}")

result = run_pipeline(
    corpus,
    default_lexicon(),
    default_location_rules(),
    official_results(),
    ingest_filter=IngestFilter.default(),
    threads=4,
)

# The counts walk from raw lines down to the tweets that were scored.
counts = result.counts
print("lines read:   ", counts.lines_read)
print("malformed:    ", counts.malformed)
print("filtered out: ", counts.filtered_out)
print("duplicates:   ", counts.duplicates)
print("considered:   ", counts.considered)

# National shares over positive single-candidate tweets.
shares = result.shares
print(f"macri  {shares.n_macri:>5} positive tweets ({shares.pct_macri:.2f}%)")
print(f"scioli {shares.n_scioli:>5} positive tweets ({shares.pct_scioli:.2f}%)")

# Per-province rows joined against the official vote counts, plus the
# number of provinces where the tweet majority matched the ballot.
print(f"{len(result.rows)} province rows, {result.agreement_count} agree with the vote")
for corr in result.correlations:
    if corr.error:
        print(f"{corr.candidate.value}: {corr.error}")
    else:
        r = corr.result
        print(f"{corr.candidate.value}: r={r.r:.4f} p={r.p_value:.3g} n={r.n}")

# Everything above is also available as files.
for path in write_outputs(result, workdir / "out"):
    print("wrote", path)

# report_dict carries the same numbers as a JSON-friendly dict, which
# is what the command line prints after a run.
print("report keys:", sorted(report_dict(result)))
