"""Immutable 1..5-gram frequency index with a letter-bigram posting index.

The index stores occurrence counts for word sequences of orders 1 through 5
plus an inverted index over the unigram lexicon: for every adjacent character
pair, the sorted ids of all lexicon words containing that pair. Posting lists
are derived from the lexicon at construction time and are never serialized.

All query methods are read-only and safe to call concurrently from any
number of threads once the index is constructed.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import NgidxParseError

MAX_ORDER = 5

_HEADER = "NGIDX v1"


class NgramIndex:
    """Queryable store of n-gram counts keyed by space-joined word sequences.

    Construction validates that counts are positive, that every key of order
    k splits into exactly k non-empty words, and that every word appearing in
    a higher-order gram is also present as a unigram.
    """

    __slots__ = (
        "_orders",
        "lexicon_words",
        "_word_id",
        "_postings",
        "word_lengths",
        "word_counts",
    )

    def __init__(self, counts_by_order: Mapping[int, Mapping[str, int]]):
        orders: dict[int, dict[str, int]] = {k: {} for k in range(1, MAX_ORDER + 1)}
        for k, table in counts_by_order.items():
            if not 1 <= k <= MAX_ORDER:
                raise ValueError(f"n-gram order must be in 1..{MAX_ORDER}, got {k}")
            dst = orders[k]
            for key, count in table.items():
                words = key.split(" ")
                if len(words) != k or any(not w for w in words):
                    raise ValueError(f"key {key!r} is not a {k}-word sequence")
                if not isinstance(count, int) or count < 1:
                    raise ValueError(f"count for {key!r} must be a positive integer")
                dst[key] = count

        unigrams = orders[1]
        for k in range(2, MAX_ORDER + 1):
            for key in orders[k]:
                for w in key.split(" "):
                    if w not in unigrams:
                        raise ValueError(
                            f"word {w!r} of {k}-gram {key!r} is missing from unigrams"
                        )

        self._orders = orders
        # Ids follow lexicographic order, so sorted posting ids double as
        # sorted words. Non-alphabetic unigrams stay queryable but are not
        # candidate material.
        self.lexicon_words: tuple[str, ...] = tuple(
            sorted(w for w in unigrams if w.isalpha())
        )
        self._word_id = {w: i for i, w in enumerate(self.lexicon_words)}
        self.word_lengths = np.array(
            [len(w) for w in self.lexicon_words], dtype=np.int64
        )
        self.word_counts = np.array(
            [unigrams[w] for w in self.lexicon_words], dtype=np.int64
        )

        postings: dict[str, list[int]] = {}
        for wid, word in enumerate(self.lexicon_words):
            for j in range(len(word) - 1):
                pair = word[j : j + 2]
                ids = postings.setdefault(pair, [])
                if not ids or ids[-1] != wid:
                    ids.append(wid)
        self._postings = {
            pair: np.array(ids, dtype=np.int64) for pair, ids in postings.items()
        }

    # -- queries ---------------------------------------------------------

    def contains_unigram(self, word: str) -> bool:
        """True iff `word` has a stored count >= 1; empty input is never present."""
        return word in self._orders[1]

    def unigram_count(self, word: str) -> int:
        return self._orders[1].get(word, 0)

    def ngram_count(self, sequence: Sequence[str]) -> int:
        """Stored count of a 1..5-word sequence, 0 when absent."""
        k = len(sequence)
        if not 1 <= k <= MAX_ORDER:
            raise ValueError(f"sequence length must be in 1..{MAX_ORDER}, got {k}")
        return self._orders[k].get(" ".join(sequence), 0)

    def posting_ids(self, bigram: str) -> np.ndarray:
        """Sorted lexicon word ids whose word contains `bigram` as adjacent chars."""
        ids = self._postings.get(bigram)
        if ids is None:
            return np.empty(0, dtype=np.int64)
        return ids

    def postings_for_bigram(self, bigram: str) -> list[str]:
        """Sorted, duplicate-free lexicon words containing `bigram`."""
        return [self.lexicon_words[i] for i in self.posting_ids(bigram)]

    def order_sizes(self) -> dict[int, int]:
        """Number of stored entries per n-gram order."""
        return {k: len(self._orders[k]) for k in range(1, MAX_ORDER + 1)}

    def items(self, k: int) -> Iterable[tuple[str, int]]:
        """Stored (sequence, count) pairs of order k, unordered."""
        return self._orders[k].items()

    # -- persistence -----------------------------------------------------

    def save(self, path: str | Path) -> None:
        """Write the NGIDX v1 text format; entries sorted for byte-stable output."""
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(_HEADER + "\n")
            for k in range(1, MAX_ORDER + 1):
                fh.write(f"[{k}]\n")
                for key in sorted(self._orders[k]):
                    fh.write(f"{self._orders[k][key]}\t{key}\n")

    @classmethod
    def load(cls, path: str | Path) -> "NgramIndex":
        """Parse an NGIDX v1 file; posting lists are rebuilt, not read."""
        path = str(path)
        orders: dict[int, dict[str, int]] = {k: {} for k in range(1, MAX_ORDER + 1)}
        current = 0
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().split("\n")
        if lines and lines[-1] == "":
            lines.pop()

        if not lines:
            raise NgidxParseError("empty file, expected NGIDX header", line=1, path=path)
        header = lines[0]
        if header != _HEADER:
            if header.startswith("NGIDX"):
                raise NgidxParseError(
                    f"unsupported version {header!r}, expected {_HEADER!r}",
                    line=1,
                    path=path,
                )
            raise NgidxParseError(
                f"malformed header {header!r}, expected {_HEADER!r}", line=1, path=path
            )

        for lineno, line in enumerate(lines[1:], start=2):
            if line.startswith("[") and line.endswith("]"):
                body = line[1:-1]
                if not body.isdigit() or not 1 <= int(body) <= MAX_ORDER:
                    raise NgidxParseError(
                        f"bad section marker {line!r}", line=lineno, path=path
                    )
                k = int(body)
                if k != current + 1:
                    raise NgidxParseError(
                        f"section [{k}] out of order, expected [{current + 1}]",
                        line=lineno,
                        path=path,
                    )
                current = k
                continue
            if current == 0:
                raise NgidxParseError(
                    "entry before first section marker", line=lineno, path=path
                )
            count_s, sep, rest = line.partition("\t")
            if not sep:
                raise NgidxParseError("missing tab separator", line=lineno, path=path)
            if not count_s.isdigit():
                raise NgidxParseError(
                    f"non-numeric count {count_s!r}", line=lineno, path=path
                )
            count = int(count_s)
            if count < 1:
                raise NgidxParseError("count must be >= 1", line=lineno, path=path)
            words = rest.split(" ")
            if len(words) != current or any(not w for w in words):
                raise NgidxParseError(
                    f"expected {current} word(s), got {rest!r}", line=lineno, path=path
                )
            if current >= 2:
                for w in words:
                    if w not in orders[1]:
                        raise NgidxParseError(
                            f"word {w!r} not present in unigram section",
                            line=lineno,
                            path=path,
                        )
            table = orders[current]
            if rest in table:
                raise NgidxParseError(
                    f"duplicate entry {rest!r}", line=lineno, path=path
                )
            table[rest] = count

        if current != MAX_ORDER:
            raise NgidxParseError(
                f"missing section marker [{current + 1}]", line=len(lines), path=path
            )
        return cls(orders)
