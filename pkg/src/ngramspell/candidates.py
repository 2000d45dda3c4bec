"""Correction candidates by shared letter-bigram scoring.

Every lexicon word sharing at least one adjacent character pair with the
error word is scored by the number of distinct shared pairs; the score is
computed by merging the posting lists of the error word's bigrams. Ranking
is score descending, then length proximity, then unigram frequency, then
lexicographic order, all deterministic.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .index import NgramIndex


@dataclass(frozen=True, slots=True)
class Candidate:
    word: str
    shared_bigrams: int
    length_delta: int


@dataclass(frozen=True, slots=True)
class CandidateSet:
    error_word: str
    candidates: tuple[Candidate, ...]

    def words(self) -> list[str]:
        return [c.word for c in self.candidates]

    def __len__(self) -> int:
        return len(self.candidates)


def letter_bigrams(word: str) -> list[str]:
    """Distinct adjacent character pairs in first-occurrence order."""
    seen: dict[str, None] = {}
    for i in range(len(word) - 1):
        seen.setdefault(word[i : i + 2], None)
    return list(seen)


def generate_candidates(
    error_word: str, index: NgramIndex, k: int = 5, p: int = 1
) -> CandidateSet:
    """Top-k lexicon words ranked by distinct shared bigrams with `error_word`.

    Posting lists for the error word's bigrams can be fetched in parallel;
    the merge and the ranking are order-independent, so the result does not
    depend on `p`.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    bigrams = letter_bigrams(error_word)
    if not bigrams:
        raise ValueError(
            f"cannot generate candidates for {error_word!r}: no letter bigrams"
        )
    if p > 1 and len(bigrams) > 1:
        with ThreadPoolExecutor(max_workers=min(p, len(bigrams))) as pool:
            lists = list(pool.map(index.posting_ids, bigrams))
    else:
        lists = [index.posting_ids(bg) for bg in bigrams]

    ids = np.concatenate(lists)
    if ids.size == 0:
        return CandidateSet(error_word, ())

    uniq, shared = np.unique(ids, return_counts=True)
    deltas = np.abs(index.word_lengths[uniq] - len(error_word))
    # lexsort: primary key last; word id ascending equals lexicographic order
    ranking = np.lexsort((uniq, -index.word_counts[uniq], deltas, -shared))
    top = ranking[: min(k, ranking.size)]
    chosen = tuple(
        Candidate(
            word=index.lexicon_words[uniq[i]],
            shared_bigrams=int(shared[i]),
            length_delta=int(deltas[i]),
        )
        for i in top
    )
    return CandidateSet(error_word, chosen)
