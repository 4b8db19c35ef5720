"""Streaming lexicon-based sentiment analytics over election tweets.

The package scores tweets sentence by sentence against configurable
dictionaries, attributes them to candidates and provinces, aggregates the
labels into a mergeable state, and compares the per-province positive-tweet
counts with official vote tallies via Pearson correlation.
"""

from .aggregation import (
    AggregateState,
    LabeledTweet,
    NationalShares,
    ProvinceRow,
    UndefinedShareError,
    fold,
    merge,
    national_shares,
    province_table,
    read_aggregate_csv,
    write_aggregate_csv,
    write_province_csv,
)
from .attribution import (
    CandidateLabel,
    LocationEntry,
    LocationResolver,
    LocationRule,
    LocationRuleError,
    UNKNOWN_LOCATION,
    classify,
    load_location_rules,
    normalize_location,
    unmatched_locations,
)
from .errors import EmptyCorpusError, PulsoError
from .ingest import (
    DEFAULT_FOLLOW_ACCOUNTS,
    DEFAULT_KEYWORDS,
    ELECTION_CUTOFF,
    IngestFilter,
    RecordParseError,
    TweetRecord,
    dedupe,
    iter_corpus,
    parse_record,
    passes_filter,
)
from .lexicon import (
    Lexicon,
    LexiconError,
    TermFrequency,
    canonical_form,
    load_lexicon,
    save_lexicon,
    suggest_terms,
)
from .pipeline import (
    CandidateCorrelation,
    PipelineResult,
    RunCounts,
    correlate_against_official,
    label_record,
    report_dict,
    run_pipeline,
    write_outputs,
)
from .scoring import (
    ScorerOptions,
    SentenceSentiment,
    SentimentLabel,
    analyze_tweet,
    score_sentence,
    segment_sentences,
    tokenize,
    tweet_score,
)
from .stats import (
    ConstantVectorError,
    CorrelationResult,
    OfficialResult,
    OfficialResultsError,
    correlation_test,
    load_official_results,
    pearson_r,
)
from .synthetic import generate_corpus

__version__ = "0.1.0"

__all__ = [
    "AggregateState",
    "CandidateCorrelation",
    "CandidateLabel",
    "ConstantVectorError",
    "CorrelationResult",
    "DEFAULT_FOLLOW_ACCOUNTS",
    "DEFAULT_KEYWORDS",
    "ELECTION_CUTOFF",
    "EmptyCorpusError",
    "IngestFilter",
    "LabeledTweet",
    "Lexicon",
    "LexiconError",
    "LocationEntry",
    "LocationResolver",
    "LocationRule",
    "LocationRuleError",
    "NationalShares",
    "OfficialResult",
    "OfficialResultsError",
    "PipelineResult",
    "ProvinceRow",
    "PulsoError",
    "RecordParseError",
    "RunCounts",
    "ScorerOptions",
    "SentenceSentiment",
    "SentimentLabel",
    "TermFrequency",
    "TweetRecord",
    "UNKNOWN_LOCATION",
    "UndefinedShareError",
    "analyze_tweet",
    "canonical_form",
    "classify",
    "correlate_against_official",
    "correlation_test",
    "dedupe",
    "fold",
    "generate_corpus",
    "iter_corpus",
    "label_record",
    "load_lexicon",
    "load_location_rules",
    "load_official_results",
    "merge",
    "national_shares",
    "normalize_location",
    "parse_record",
    "passes_filter",
    "pearson_r",
    "province_table",
    "read_aggregate_csv",
    "report_dict",
    "run_pipeline",
    "save_lexicon",
    "score_sentence",
    "segment_sentences",
    "suggest_terms",
    "tokenize",
    "tweet_score",
    "unmatched_locations",
    "write_aggregate_csv",
    "write_outputs",
    "write_province_csv",
]
