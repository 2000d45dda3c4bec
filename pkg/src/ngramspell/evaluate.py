"""Seeded corruption of clean text and measurement of correction quality."""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .correct import CorrectionReport
from .detect import ErrorKind
from .edits import ALPHABET, single_edit_variants
from .index import NgramIndex
from .tokenize import TokenizedText, tokenize

__all__ = [
    "ALPHABET",
    "EvaluationReport",
    "InjectedError",
    "InjectionPlan",
    "InjectionResult",
    "KindCounts",
    "evaluate",
    "inject_errors",
    "read_ground_truth",
    "single_edit_variants",
    "write_ground_truth",
]

_MAX_DRAWS = 20


@dataclass(frozen=True)
class InjectionPlan:
    """How much to corrupt: token fraction, real-word share, RNG seed."""

    rate: float = 0.01
    realword_frac: float = 0.13
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0 < self.rate <= 1:
            raise ValueError(f"rate must be in (0, 1], got {self.rate}")
        if not 0 <= self.realword_frac <= 1:
            raise ValueError(
                f"realword_frac must be in [0, 1], got {self.realword_frac}"
            )


@dataclass(frozen=True, slots=True)
class InjectedError:
    position: int
    original: str
    corrupted: str
    kind: ErrorKind


@dataclass(frozen=True)
class InjectionResult:
    corrupted_text: str
    tokens: TokenizedText
    truth: tuple[InjectedError, ...]
    skipped: tuple[int, ...]


def _round_half_up(x: float) -> int:
    return int(x + 0.5)


def inject_errors(
    tokens: TokenizedText, index: NgramIndex, plan: InjectionPlan
) -> InjectionResult:
    """Corrupt a seeded sample of checkable tokens with single-edit errors.

    Non-word slots draw random variants until one falls outside the lexicon
    (and stays checkable); real-word slots replace the word with an in-lexicon
    variant. Slots with no usable variant are skipped and reported. The same
    plan over the same tokens reproduces the same corruption byte for byte.
    """
    rng = random.Random(plan.seed)
    eligible = [t.index for t in tokens if t.checkable]
    target = _round_half_up(plan.rate * len(eligible))
    if target < 1:
        return InjectionResult(tokens.text, tokens, (), ())

    chosen = rng.sample(eligible, target)
    n_realword = _round_half_up(plan.realword_frac * target)

    truth: list[InjectedError] = []
    skipped: list[int] = []
    for slot, position in enumerate(chosen):
        word = tokens[position].normalized
        variants = sorted(single_edit_variants(word))
        corrupted = None
        if slot < n_realword:
            pool = [
                v
                for v in variants
                if len(v) >= 2 and index.contains_unigram(v)
            ]
            if pool:
                corrupted = rng.choice(pool)
            kind = ErrorKind.REAL_WORD_SUSPECT
        else:
            for _ in range(_MAX_DRAWS):
                v = rng.choice(variants)
                if len(v) >= 2 and not index.contains_unigram(v):
                    corrupted = v
                    break
            kind = ErrorKind.NON_WORD
        if corrupted is None:
            skipped.append(position)
        else:
            truth.append(InjectedError(position, word, corrupted, kind))

    truth.sort(key=lambda rec: rec.position)
    skipped.sort()

    parts = []
    pos = 0
    text = tokens.text
    for rec in truth:
        start, end = tokens[rec.position].core_span
        parts.append(text[pos:start])
        parts.append(rec.corrupted)
        pos = end
    parts.append(text[pos:])
    corrupted_text = "".join(parts)

    corrupted_tokens = tokenize(corrupted_text)
    if len(corrupted_tokens) != len(tokens):
        raise RuntimeError("corruption changed the token structure")
    return InjectionResult(corrupted_text, corrupted_tokens, tuple(truth), tuple(skipped))


def write_ground_truth(truth: Iterable[InjectedError], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for rec in truth:
            fh.write(f"{rec.position}\t{rec.original}\t{rec.corrupted}\t{rec.kind.value}\n")


def read_ground_truth(path: str | Path) -> tuple[InjectedError, ...]:
    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            position, original, corrupted, kind = line.rstrip("\n").split("\t")
            records.append(
                InjectedError(int(position), original, corrupted, ErrorKind(kind))
            )
    return tuple(records)


@dataclass
class KindCounts:
    injected: int = 0
    corrected: int = 0
    not_corrected: int = 0
    falsely_corrected: int = 0

    @property
    def correction_rate(self) -> float:
        return self.corrected / self.injected if self.injected else 0.0


@dataclass
class EvaluationReport:
    non_word: KindCounts
    real_word: KindCounts
    collateral_changes: int = 0

    @property
    def total(self) -> KindCounts:
        return KindCounts(
            injected=self.non_word.injected + self.real_word.injected,
            corrected=self.non_word.corrected + self.real_word.corrected,
            not_corrected=self.non_word.not_corrected + self.real_word.not_corrected,
            falsely_corrected=self.non_word.falsely_corrected
            + self.real_word.falsely_corrected,
        )

    def summary(self) -> str:
        def block(title: str, c: KindCounts) -> list[str]:
            pct = (
                lambda n: f"{round(100 * n / c.injected)}%" if c.injected else "n/a"
            )
            return [
                f"{title}: {c.injected}",
                f"  corrected          {c.corrected:>8}  ({pct(c.corrected)})",
                f"  not corrected      {c.not_corrected:>8}  ({pct(c.not_corrected)})",
                f"  falsely corrected  {c.falsely_corrected:>8}  ({pct(c.falsely_corrected)})",
            ]

        lines = block("Total errors", self.total)
        lines += block("Non-word errors", self.non_word)
        lines += block("Real-word errors", self.real_word)
        lines.append(f"Collateral changes: {self.collateral_changes}")
        return "\n".join(lines)


def evaluate(
    report: CorrectionReport, truth: Sequence[InjectedError]
) -> EvaluationReport:
    """Bucket every injected error as corrected, untouched or made worse.

    The correction report must come from checking the corrupted token stream
    the ground truth refers to; any disagreement raises.
    """
    tokens = report.tokens
    decided = {c.token_index: c for c in report.corrections}

    counts = {
        ErrorKind.NON_WORD: KindCounts(),
        ErrorKind.REAL_WORD_SUSPECT: KindCounts(),
    }
    for rec in truth:
        if rec.position >= len(tokens):
            raise ValueError(
                f"ground truth position {rec.position} is beyond the token stream"
            )
        observed = tokens[rec.position].normalized
        if observed != rec.corrupted:
            raise ValueError(
                f"token stream mismatch at {rec.position}: "
                f"expected {rec.corrupted!r}, found {observed!r}"
            )
        bucket = counts[rec.kind]
        bucket.injected += 1
        decision = decided.get(rec.position)
        final = decision.chosen if decision and decision.chosen else rec.corrupted
        if final == rec.original:
            bucket.corrected += 1
        elif final == rec.corrupted:
            bucket.not_corrected += 1
        else:
            bucket.falsely_corrected += 1

    injected_positions = {rec.position for rec in truth}
    collateral = sum(
        1
        for c in report.corrections
        if c.chosen is not None
        and c.token_index not in injected_positions
        and c.chosen != tokens[c.token_index].normalized
    )
    return EvaluationReport(
        non_word=counts[ErrorKind.NON_WORD],
        real_word=counts[ErrorKind.REAL_WORD_SUSPECT],
        collateral_changes=collateral,
    )
