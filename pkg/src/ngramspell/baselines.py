"""Classical reference algorithms: Soundex, Levenshtein, Hamming, LCS."""

from __future__ import annotations

_SOUNDEX_CLASSES = {
    "aehiouyw": "0",
    "bfpv": "1",
    "cgjkqsxz": "2",
    "dt": "3",
    "l": "4",
    "mn": "5",
    "r": "6",
}
_SOUNDEX_CODE = {c: d for letters, d in _SOUNDEX_CLASSES.items() for c in letters}


def soundex(word: str) -> str:
    """Phonetic code: first letter plus three digits.

    The tail letters map to digit classes, adjacent equal digits collapse,
    zeros drop out, and the result is truncated or zero-padded to length 4.
    Only ASCII alphabetic input is accepted.
    """
    if not word or not word.isascii() or not word.isalpha():
        raise ValueError(f"soundex requires a non-empty ASCII alphabetic word, got {word!r}")
    lowered = word.lower()
    digits = [_SOUNDEX_CODE[c] for c in lowered[1:]]
    collapsed = []
    for d in digits:
        if not collapsed or collapsed[-1] != d:
            collapsed.append(d)
    tail = "".join(collapsed).replace("0", "")
    return lowered[0].upper() + (tail + "000")[:3]


def levenshtein(a: str, b: str) -> int:
    """Minimum number of unit-cost insertions, deletions and substitutions."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        for j, cb in enumerate(b, start=1):
            current.append(
                min(
                    previous[j] + 1,
                    current[j - 1] + 1,
                    previous[j - 1] + (ca != cb),
                )
            )
        previous = current
    return previous[-1]


def hamming(a: str, b: str) -> int:
    """Number of differing positions; defined only for equal-length strings."""
    if len(a) != len(b):
        raise ValueError(
            f"hamming distance is invalid for lengths {len(a)} and {len(b)}"
        )
    return sum(x != y for x, y in zip(a, b))


def lcs(a: str, b: str) -> tuple[int, str]:
    """Longest common subsequence length plus one witness subsequence.

    The witness is the one produced by a traceback that prefers diagonal
    moves, which makes the returned string deterministic when several
    subsequences of maximal length exist.
    """
    m, n = len(a), len(b)
    dp = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        row = dp[i]
        prev = dp[i - 1]
        ca = a[i - 1]
        for j in range(1, n + 1):
            if ca == b[j - 1]:
                row[j] = prev[j - 1] + 1
            else:
                row[j] = prev[j] if prev[j] >= row[j - 1] else row[j - 1]
    out = []
    i, j = m, n
    while i > 0 and j > 0:
        if a[i - 1] == b[j - 1]:
            out.append(a[i - 1])
            i -= 1
            j -= 1
        elif dp[i - 1][j] >= dp[i][j - 1]:
            i -= 1
        else:
            j -= 1
    out.reverse()
    return dp[m][n], "".join(out)
