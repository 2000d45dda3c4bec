"""Single-edit string neighborhoods (delete, insert, substitute, transpose)."""

from __future__ import annotations

ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def single_edit_variants(word: str) -> set[str]:
    """All strings exactly one edit away: delete, insert a-z, substitute, transpose."""
    if len(word) < 2:
        raise ValueError(f"word must have length >= 2, got {word!r}")
    splits = [(word[:i], word[i:]) for i in range(len(word) + 1)]
    deletes = {a + b[1:] for a, b in splits if b}
    inserts = {a + c + b for a, b in splits for c in ALPHABET}
    substitutes = {a + c + b[1:] for a, b in splits if b for c in ALPHABET if c != b[0]}
    transposes = {a + b[1] + b[0] + b[2:] for a, b in splits if len(b) > 1}
    variants = deletes | inserts | substitutes | transposes
    variants.discard(word)
    return variants
