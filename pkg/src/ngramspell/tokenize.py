"""Tokenization: whitespace/hyphen splitting with source spans.

Every token keeps its exact source substring, so the input text is
reconstructible from the token stream plus the gaps between spans. The
normalized form strips surrounding punctuation and case-folds; only
all-letter cores of length >= 2 are checkable by the spelling pipeline.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

# Hyphens and dashes separate tokens; everything else non-whitespace sticks
# to the word it touches.
_DASHES = "\\-\u2010\u2011\u2012\u2013\u2014"
_TOKEN_RE = re.compile(rf"[^\s{_DASHES}]+")

_SENTENCE_MARKS = frozenset(".!?")


@dataclass(frozen=True, slots=True)
class Token:
    surface: str
    normalized: str
    span: tuple[int, int]
    index: int
    checkable: bool
    # span of the stripped word core inside the source; equals `span` when
    # the surface carries no surrounding punctuation
    core_span: tuple[int, int]
    ends_sentence: bool


@dataclass(frozen=True, slots=True)
class TokenizedText:
    text: str
    tokens: tuple[Token, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[Token]:
        return iter(self.tokens)

    def __getitem__(self, i: int) -> Token:
        return self.tokens[i]

    def reconstruct(self) -> str:
        """Rebuild the source text from token surfaces and the gaps between them."""
        parts = []
        pos = 0
        for tok in self.tokens:
            start, end = tok.span
            parts.append(self.text[pos:start])
            parts.append(tok.surface)
            pos = end
        parts.append(self.text[pos:])
        return "".join(parts)


def _analyze(surface: str) -> tuple[str, int, int, bool]:
    """Return (normalized, core_start, core_end, ends_sentence) for a surface.

    Offsets are relative to the surface. The core is the surface stripped of
    leading/trailing non-alphanumeric characters; it normalizes to a word
    only when it is purely alphabetic.
    """
    start = 0
    end = len(surface)
    while start < end and not surface[start].isalnum():
        start += 1
    while end > start and not surface[end - 1].isalnum():
        end -= 1
    core = surface[start:end]
    normalized = core.casefold() if core.isalpha() else ""
    trailing = surface[end:] if core else surface
    ends_sentence = any(c in _SENTENCE_MARKS for c in trailing)
    return normalized, start, end, ends_sentence


def tokenize(text: str) -> TokenizedText:
    """Split text into ordered tokens with spans, normalized forms and flags.

    Hyphenated compounds become separate tokens. A token is checkable when
    its normalized form is at least two letters long; anything containing
    digits or interior symbols is passed through unchecked.
    """
    tokens = []
    for i, match in enumerate(_TOKEN_RE.finditer(text)):
        surface = match.group()
        normalized, rel_start, rel_end, ends_sentence = _analyze(surface)
        checkable = len(normalized) >= 2
        tokens.append(
            Token(
                surface=surface,
                normalized=normalized,
                span=(match.start(), match.end()),
                index=i,
                checkable=checkable,
                core_span=(match.start() + rel_start, match.start() + rel_end),
                ends_sentence=ends_sentence,
            )
        )
    return TokenizedText(text=text, tokens=tuple(tokens))


def context_window(tokens: TokenizedText, index: int, limit: int = 4) -> tuple[str, ...]:
    """Normalized words of up to `limit` tokens preceding `index`.

    The window never crosses a sentence boundary and stops at any token the
    index would not have included in an n-gram run (non-checkable tokens),
    so a returned context always corresponds to a contiguous indexed run.
    """
    words: list[str] = []
    for j in range(index - 1, -1, -1):
        tok = tokens[j]
        if tok.ends_sentence or not tok.checkable:
            break
        words.append(tok.normalized)
        if len(words) == limit:
            break
    words.reverse()
    return tuple(words)
