"""Parallel spell checking over n-gram statistics built from any text corpus."""

from .baselines import hamming, lcs, levenshtein, soundex
from .candidates import Candidate, CandidateSet, generate_candidates, letter_bigrams
from .correct import (
    CheckOptions,
    Correction,
    CorrectionReport,
    Nominee,
    build_nominees,
    correct_text,
    select_correction,
)
from .detect import (
    DetectedError,
    ErrorKind,
    detect_errors,
    detect_realword_suspects,
    partition,
)
from .errors import EmptyCorpusError, NgidxParseError
from .evaluate import (
    EvaluationReport,
    InjectedError,
    InjectionPlan,
    InjectionResult,
    evaluate,
    inject_errors,
    read_ground_truth,
    single_edit_variants,
    write_ground_truth,
)
from .index import MAX_ORDER, NgramIndex
from .ingest import IngestOptions, build_index
from .tokenize import Token, TokenizedText, context_window, tokenize

__version__ = "0.1.0"

__all__ = [
    "Candidate",
    "CandidateSet",
    "CheckOptions",
    "Correction",
    "CorrectionReport",
    "DetectedError",
    "EmptyCorpusError",
    "ErrorKind",
    "EvaluationReport",
    "IngestOptions",
    "InjectedError",
    "InjectionPlan",
    "InjectionResult",
    "MAX_ORDER",
    "NgidxParseError",
    "NgramIndex",
    "Nominee",
    "Token",
    "TokenizedText",
    "build_index",
    "build_nominees",
    "context_window",
    "correct_text",
    "detect_errors",
    "detect_realword_suspects",
    "evaluate",
    "generate_candidates",
    "hamming",
    "inject_errors",
    "lcs",
    "letter_bigrams",
    "levenshtein",
    "partition",
    "read_ground_truth",
    "select_correction",
    "single_edit_variants",
    "soundex",
    "tokenize",
    "write_ground_truth",
]
