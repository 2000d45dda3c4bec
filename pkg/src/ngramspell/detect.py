"""Parallel error detection: non-word lookup misses and real-word suspects.

Tokens are partitioned into contiguous blocks, one per worker; workers scan
their block against the read-only index and append hits to private buffers
that are concatenated in block order. Output is therefore identical for any
worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .candidates import generate_candidates
from .edits import single_edit_variants
from .index import NgramIndex
from .tokenize import TokenizedText, context_window


class ErrorKind(str, Enum):
    NON_WORD = "non-word"
    REAL_WORD_SUSPECT = "real-word-suspect"


@dataclass(frozen=True, slots=True)
class DetectedError:
    token_index: int
    kind: ErrorKind
    word: str


def partition(n: int, p: int) -> list[range]:
    """Block-distribute n items over p workers; sizes differ by at most one.

    The first n % p workers receive the extra item; with more workers than
    items the trailing ranges are empty.
    """
    if p < 1:
        raise ValueError(f"worker count must be >= 1, got {p}")
    if n < 0:
        raise ValueError(f"item count must be >= 0, got {n}")
    base, extra = divmod(n, p)
    ranges = []
    start = 0
    for i in range(p):
        size = base + (1 if i < extra else 0)
        ranges.append(range(start, start + size))
        start += size
    return ranges


def _run_blocks(scan, tokens: TokenizedText, p: int) -> list[DetectedError]:
    blocks = partition(len(tokens), p)
    if p <= 1:
        buffers = [scan(block) for block in blocks]
    else:
        with ThreadPoolExecutor(max_workers=p) as pool:
            buffers = list(pool.map(scan, blocks))
    return [err for buf in buffers for err in buf]


def detect_errors(
    tokens: TokenizedText, index: NgramIndex, p: int = 1
) -> list[DetectedError]:
    """Flag every checkable token whose normalized form is not a unigram."""

    def scan(block: range) -> list[DetectedError]:
        found = []
        for i in block:
            tok = tokens[i]
            if tok.checkable and not index.contains_unigram(tok.normalized):
                found.append(DetectedError(i, ErrorKind.NON_WORD, tok.normalized))
        return found

    return _run_blocks(scan, tokens, p)


def realword_candidate_pool(word: str, index: NgramIndex, k: int = 5) -> list[str]:
    """Corrections considered for an in-lexicon word, best first.

    Bigram-sharing candidates come first in their rank order; in-lexicon
    single-edit variants follow, ordered by unigram frequency. The variants
    matter because a transposition ("from" vs "form") can leave the two
    words with no letter bigram in common.
    """
    pool = generate_candidates(word, index, k=k).words()
    seen = set(pool)
    variants = [
        v
        for v in single_edit_variants(word)
        if len(v) >= 2 and v not in seen and index.contains_unigram(v)
    ]
    variants.sort(key=lambda w: (-index.unigram_count(w), w))
    return pool + variants


def detect_realword_suspects(
    tokens: TokenizedText,
    index: NgramIndex,
    min_context: int = 2,
    tau: int = 1,
    k: int = 5,
    p: int = 1,
) -> list[DetectedError]:
    """Flag in-lexicon tokens whose context looks wrong but fixable.

    A checkable, in-lexicon token is suspect when the longest available
    context n-gram ending at it (at most 5 words, at least `min_context`)
    has count zero while substituting some correction candidate yields a
    context n-gram, at that order or any backoff order down to 2, with a
    count of at least `tau`.
    """

    def improvable(context: tuple[str, ...], word: str) -> bool:
        for cand in realword_candidate_pool(word, index, k=k):
            if cand == word:
                continue
            for start in range(len(context)):
                if index.ngram_count((*context[start:], cand)) >= tau:
                    return True
        return False

    def scan(block: range) -> list[DetectedError]:
        found = []
        for i in block:
            tok = tokens[i]
            if not tok.checkable:
                continue
            word = tok.normalized
            if not index.contains_unigram(word):
                continue
            context = context_window(tokens, i, limit=4)
            if len(context) + 1 < max(min_context, 2):
                continue
            if index.ngram_count((*context, word)) != 0:
                continue
            if improvable(context, word):
                found.append(DetectedError(i, ErrorKind.REAL_WORD_SUSPECT, word))
        return found

    return _run_blocks(scan, tokens, p)
