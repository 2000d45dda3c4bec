"""Build an NgramIndex from plain-text corpora by counting word n-grams."""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .errors import EmptyCorpusError
from .index import MAX_ORDER, NgramIndex
from .tokenize import tokenize


@dataclass(frozen=True)
class IngestOptions:
    """Counting controls: highest order, per-order pruning, sentence handling."""

    max_order: int = 5
    min_count: Mapping[int, int] = field(default_factory=dict)
    sentence_split: bool = True

    def __post_init__(self) -> None:
        if not 1 <= self.max_order <= MAX_ORDER:
            raise ValueError(f"max_order must be in 1..{MAX_ORDER}, got {self.max_order}")
        for k, threshold in self.min_count.items():
            if not 1 <= k <= MAX_ORDER:
                raise ValueError(f"min_count order {k} out of range 1..{MAX_ORDER}")
            if threshold < 1:
                raise ValueError(f"min_count[{k}] must be >= 1, got {threshold}")

    def threshold(self, k: int) -> int:
        return self.min_count.get(k, 1)


def _count_file(path: str | Path, opts: IngestOptions) -> list[Counter]:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise OSError(f"corpus file {path} is not valid UTF-8: {exc}") from exc

    counters: list[Counter] = [Counter() for _ in range(opts.max_order + 1)]
    run: list[str] = []

    def flush() -> None:
        n = len(run)
        for k in range(1, min(opts.max_order, n) + 1):
            counters[k].update(
                " ".join(run[i : i + k]) for i in range(n - k + 1)
            )
        run.clear()

    for tok in tokenize(text):
        if not tok.checkable:
            flush()
            continue
        run.append(tok.normalized)
        if opts.sentence_split and tok.ends_sentence:
            flush()
    flush()
    return counters


def build_index(
    corpus_paths: Sequence[str | Path],
    opts: IngestOptions | None = None,
    workers: int | None = None,
) -> NgramIndex:
    """Count n-grams of orders 1..max_order over the given UTF-8 text files.

    Counting runs per-file (in parallel when several files are given) and is
    merged by summation, so the result is a pure function of the corpus bytes
    and the options. Pruning keeps an order-k entry only when its count meets
    min_count[k]; unigrams of surviving higher-order grams are always retained
    with their exact counts.
    """
    opts = opts or IngestOptions()
    paths = list(corpus_paths)
    if not paths:
        raise EmptyCorpusError("no corpus files given")

    if workers is None:
        workers = min(len(paths), os.cpu_count() or 1)
    if workers <= 1 or len(paths) == 1:
        shards = [_count_file(p, opts) for p in paths]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            shards = list(pool.map(lambda p: _count_file(p, opts), paths))

    merged: list[Counter] = [Counter() for _ in range(opts.max_order + 1)]
    for shard in shards:
        for k in range(1, opts.max_order + 1):
            merged[k].update(shard[k])

    if not merged[1]:
        raise EmptyCorpusError(
            "corpus contains no checkable tokens: " + ", ".join(map(str, paths))
        )

    pruned: dict[int, dict[str, int]] = {}
    for k in range(1, opts.max_order + 1):
        threshold = opts.threshold(k)
        if threshold > 1:
            pruned[k] = {g: c for g, c in merged[k].items() if c >= threshold}
        else:
            pruned[k] = dict(merged[k])

    # Pruning the unigram table must not orphan words still referenced by
    # surviving higher-order grams.
    unigrams = pruned[1]
    for k in range(2, opts.max_order + 1):
        for gram in pruned[k]:
            for w in gram.split(" "):
                if w not in unigrams:
                    unigrams[w] = merged[1][w]

    return NgramIndex(pruned)
