"""
Rebuilding the 2015 runoff tables
=================================

The package bundles the per-province positive-tweet tallies of the
original runoff study and the official vote counts.  This script folds
those tallies back into an aggregate and rebuilds every headline
number: national shares, the gap to the ballot, per-province agreement,
and the tweet-vote correlations.
"""

from pulso import (
    AggregateState,
    CandidateLabel,
    SentimentLabel,
    correlate_against_official,
    national_shares,
    province_table,
)
from pulso.defaults import load_reference_table, official_results

rows = load_reference_table()
official = official_results()
print(f"{len(rows)} table rows, {len(official)} provinces with official counts")

# The table stores only positive tweet counts per candidate, which is
# exactly what the aggregate keys on.
state = AggregateState()
for row in rows:
    key = (row.country, row.province)
    if row.tweets_scioli:
        state.counters[(*key, CandidateLabel.SCIOLI, SentimentLabel.POSITIVO)] += row.tweets_scioli
    if row.tweets_macri:
        state.counters[(*key, CandidateLabel.MACRI, SentimentLabel.POSITIVO)] += row.tweets_macri
    state.considered_total += row.tweets_total

# National shares: Macri took 51.55% of the positive tweets.
shares = national_shares(state)
print(f"tweets: macri {shares.n_macri:,} ({shares.pct_macri:.2f}%), "
      f"scioli {shares.n_scioli:,} ({shares.pct_scioli:.2f}%)")

# The ballot said 51.40 / 48.60, a gap of about 0.15 points.
votes_macri = sum(r.votes_macri for r in official)
votes_scioli = sum(r.votes_scioli for r in official)
pct_votes_macri = votes_macri * 100 / (votes_macri + votes_scioli)
print(f"votes:  macri {votes_macri:,} ({pct_votes_macri:.2f}%)")
print(f"gap:    {abs(shares.pct_macri - pct_votes_macri):.2f} points")

# How much of the corpus resolved to a province that can be compared
# against the ballot.
locatable = sum(r.tweets_total for r in rows if r.votes_total is not None)
total = sum(r.tweets_total for r in rows)
print(f"located in a voting province: {locatable:,} of {total:,} "
      f"({locatable * 100 / total:.2f}%)")

# Join tweets and votes per province and count where the tweet
# majority picked the same winner as the ballot.
table, agreement = province_table(state, official)
voting = [row for row in table if row.votes_total is not None]
print(f"agreement: {agreement} of {len(voting)} provinces")

# Tweet share and vote share move together across provinces.
for corr in correlate_against_official(voting):
    result = corr.result
    print(f"{corr.candidate.value}: r={result.r:.4f} p={result.p_value:.3g} n={result.n}")
