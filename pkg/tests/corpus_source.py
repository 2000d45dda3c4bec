"""Deterministic large-corpus provisioning for the acceptance suite.

The sandbox has no general network access, so the million-word evaluation
corpus is assembled from English prose that is already on disk: the
documentation strings of a fixed list of installed scientific packages.
Extraction walks files in sorted order and filters doctest/code lines, so
the same environment always yields byte-identical corpus files.
"""

from __future__ import annotations

import ast
import sysconfig
from pathlib import Path

PACKAGES = ("numpy", "scipy", "pandas", "sklearn")

_SKIP_PREFIXES = (">>>", "...", "#", "$")


def _docstrings(path: Path) -> list[str]:
    try:
        tree = ast.parse(path.read_text(encoding="utf-8", errors="ignore"))
    except SyntaxError:
        return []
    found = []
    for node in ast.walk(tree):
        if isinstance(node, (ast.Module, ast.FunctionDef, ast.AsyncFunctionDef, ast.ClassDef)):
            doc = ast.get_docstring(node)
            if doc:
                found.append(doc)
    return found


def _prose_lines(doc: str) -> list[str]:
    lines = []
    for raw in doc.splitlines():
        line = raw.strip()
        if not line or line.startswith(_SKIP_PREFIXES):
            continue
        letters = sum(c.isalpha() for c in line)
        if letters < len(line) / 2:
            continue
        lines.append(line)
    return lines


def package_prose(package: str) -> str:
    root = Path(sysconfig.get_paths()["purelib"]) / package
    chunks = []
    for path in sorted(root.rglob("*.py")):
        for doc in _docstrings(path):
            chunks.extend(_prose_lines(doc))
    return "\n".join(chunks) + "\n"


def write_corpus(directory: Path, min_words: int = 1_000_000) -> list[Path]:
    """Write one prose file per source package until `min_words` is reached."""
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    total = 0
    for package in PACKAGES:
        text = package_prose(package)
        path = directory / f"{package}.txt"
        path.write_text(text, encoding="utf-8")
        paths.append(path)
        total += len(text.split())
        if total >= min_words:
            break
    if total < min_words:
        raise RuntimeError(
            f"only {total} words of local prose available, need {min_words}"
        )
    return paths
