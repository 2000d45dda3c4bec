"""Context-sensitive correction: nominee sentences scored by corpus frequency.

For each detected error the candidate words are embedded after up to four
preceding words of original context; the candidate whose nominee sequence has
the highest stored count wins. Contexts always use the original token stream,
never corrections made elsewhere, which keeps per-error work independent and
the whole pass parallel.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Sequence

from .candidates import CandidateSet, generate_candidates
from .detect import (
    DetectedError,
    ErrorKind,
    detect_errors,
    detect_realword_suspects,
    realword_candidate_pool,
)
from .index import NgramIndex
from .tokenize import TokenizedText, context_window, tokenize

CONTEXT_WORDS = 4


@dataclass(frozen=True, slots=True)
class Nominee:
    context: tuple[str, ...]
    candidate: str
    frequency: int

    @property
    def order(self) -> int:
        return len(self.context) + 1


@dataclass(frozen=True, slots=True)
class Correction:
    token_index: int
    original: str
    chosen: str | None
    nominee_frequency: int
    fallback_used: bool
    kind: ErrorKind


@dataclass(frozen=True)
class CheckOptions:
    """Pipeline knobs; `tau` guards acceptance of real-word corrections."""

    k: int = 5
    backoff: bool = True
    realword: bool = False
    tau: float = 2.0
    min_context: int = 2
    suspect_tau: int = 1

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.tau < 0:
            raise ValueError(f"tau must be >= 0, got {self.tau}")


@dataclass(frozen=True)
class CorrectionReport:
    text: str
    corrected_text: str
    tokens: TokenizedText
    corrections: tuple[Correction, ...]

    def changed(self) -> list[Correction]:
        return [c for c in self.corrections if c.chosen is not None]


def build_nominees(
    tokens: TokenizedText,
    error_index: int,
    candidates: CandidateSet,
    index: NgramIndex,
) -> list[Nominee]:
    """One nominee per candidate: up to four preceding words plus the candidate.

    The context is drawn from the original tokens and truncated at the text
    start, at sentence boundaries and at non-checkable tokens.
    """
    context = context_window(tokens, error_index, limit=CONTEXT_WORDS)
    return [
        Nominee(context, c.word, index.ngram_count((*context, c.word)))
        for c in candidates.candidates
    ]


def _settle(
    nominees: Sequence[Nominee], index: NgramIndex, backoff: bool
) -> tuple[int, int, tuple[str, ...], bool]:
    """Pick the winning nominee position.

    Returns (position, frequency, context backed off to, fallback flag). When
    every nominee scores zero at full order, backoff re-scores all of them
    with one fewer context word, down to order 2; after that the first-ranked
    candidate wins by fallback.
    """
    context = nominees[0].context
    freqs = [n.frequency for n in nominees]
    while True:
        best = max(freqs)
        if best > 0:
            return freqs.index(best), best, context, False
        if not backoff or len(context) <= 1:
            return 0, 0, context, True
        context = context[1:]
        freqs = [index.ngram_count((*context, n.candidate)) for n in nominees]


def select_correction(
    nominees: Sequence[Nominee],
    index: NgramIndex,
    backoff: bool = True,
    *,
    token_index: int = -1,
    original: str = "",
    kind: ErrorKind = ErrorKind.NON_WORD,
) -> Correction:
    """Choose the candidate of the maximum-frequency nominee.

    Ties resolve to the earlier nominee, i.e. the better candidate rank; when
    nothing scores above zero the first nominee is returned with the fallback
    flag set.
    """
    if not nominees:
        raise ValueError("select_correction requires at least one nominee")
    pos, freq, _, fallback = _settle(nominees, index, backoff)
    return Correction(
        token_index=token_index,
        original=original,
        chosen=nominees[pos].candidate,
        nominee_frequency=freq,
        fallback_used=fallback,
        kind=kind,
    )


def _decide(
    tokens: TokenizedText,
    err: DetectedError,
    index: NgramIndex,
    opts: CheckOptions,
) -> Correction:
    unchanged = Correction(
        token_index=err.token_index,
        original=err.word,
        chosen=None,
        nominee_frequency=0,
        fallback_used=False,
        kind=err.kind,
    )

    if err.kind is ErrorKind.NON_WORD:
        candidates = generate_candidates(err.word, index, k=opts.k)
        if not candidates.candidates:
            return unchanged
        nominees = build_nominees(tokens, err.token_index, candidates, index)
        pos, freq, _, fallback = _settle(nominees, index, opts.backoff)
        return replace(
            unchanged,
            chosen=nominees[pos].candidate,
            nominee_frequency=freq,
            fallback_used=fallback,
        )

    # Real-word suspects draw from the wider pool (bigram candidates plus
    # in-lexicon single-edit variants) and must beat the original word's own
    # frequency at the order where the winner settled, by the acceptance
    # factor.
    pool = realword_candidate_pool(err.word, index, k=opts.k)
    if not pool:
        return unchanged
    window = context_window(tokens, err.token_index, limit=CONTEXT_WORDS)
    nominees = [
        Nominee(window, word, index.ngram_count((*window, word))) for word in pool
    ]
    pos, freq, context, fallback = _settle(nominees, index, opts.backoff)
    chosen = nominees[pos].candidate
    if fallback or freq == 0 or chosen == err.word:
        return unchanged
    own = index.ngram_count((*context, err.word))
    if freq >= opts.tau * own:
        return replace(unchanged, chosen=chosen, nominee_frequency=freq)
    return unchanged


def _capitalized(word: str, like_first_char: str) -> str:
    if like_first_char.isupper():
        return word[0].upper() + word[1:]
    return word


def _splice(text: str, tokens: TokenizedText, corrections: Sequence[Correction]) -> str:
    parts = []
    pos = 0
    for corr in corrections:
        if corr.chosen is None:
            continue
        tok = tokens[corr.token_index]
        start, end = tok.core_span
        parts.append(text[pos:start])
        parts.append(_capitalized(corr.chosen, text[start]))
        pos = end
    parts.append(text[pos:])
    return "".join(parts)


def correct_text(
    text: str,
    index: NgramIndex,
    p: int = 1,
    options: CheckOptions | None = None,
) -> CorrectionReport:
    """Run the full pipeline: tokenize, detect, generate, select, splice.

    Per-error decisions are independent and run across `p` workers; results
    are merged in token order, so the report is identical for any `p`.
    """
    opts = options or CheckOptions()
    tokens = tokenize(text)
    errors = detect_errors(tokens, index, p)
    if opts.realword:
        suspects = detect_realword_suspects(
            tokens,
            index,
            min_context=opts.min_context,
            tau=opts.suspect_tau,
            k=opts.k,
            p=p,
        )
        errors = sorted(errors + suspects, key=lambda e: e.token_index)

    if p > 1 and len(errors) > 1:
        with ThreadPoolExecutor(max_workers=p) as pool:
            corrections = tuple(
                pool.map(lambda e: _decide(tokens, e, index, opts), errors)
            )
    else:
        corrections = tuple(_decide(tokens, e, index, opts) for e in errors)

    corrected = _splice(text, tokens, corrections)
    return CorrectionReport(
        text=text, corrected_text=corrected, tokens=tokens, corrections=corrections
    )
