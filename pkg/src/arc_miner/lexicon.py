"""Polarity and valence-shifter lookup tables.

Both are tab-separated UTF-8 files, ``token<TAB>value`` for polarity and
``token<TAB>category`` for shifters. Blank lines and ``#`` comments are
ignored. Lexicons are immutable after load and safe to share.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import LexiconError

SHIFTER_CATEGORIES = ("negator", "amplifier", "deamplifier", "adversative")


@dataclass(frozen=True)
class PolarityLexicon:
    entries: dict[str, float] = field(default_factory=dict)

    def lookup(self, token: str) -> float | None:
        return self.entries.get(token)

    def __contains__(self, token: str) -> bool:
        return token in self.entries

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class ShifterLexicon:
    entries: dict[str, str] = field(default_factory=dict)

    def lookup(self, token: str) -> str | None:
        return self.entries.get(token)

    def __contains__(self, token: str) -> bool:
        return token in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def _iter_rows(path: str | Path):
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise LexiconError(f"{path}:{lineno}: expected token<TAB>value")
            yield lineno, parts[0].strip().lower(), parts[1].strip()


def load_polarity(path: str | Path) -> PolarityLexicon:
    """Load a polarity table; fails fast on duplicates, zeros, or emptiness."""
    entries: dict[str, float] = {}
    for lineno, token, raw in _iter_rows(path):
        try:
            value = float(raw)
        except ValueError:
            raise LexiconError(f"{path}:{lineno}: unparseable polarity {raw!r}") from None
        if not math.isfinite(value) or value == 0.0:
            raise LexiconError(
                f"{path}:{lineno}: polarity must be finite and non-zero, got {raw!r}"
            )
        if token in entries:
            raise LexiconError(f"{path}:{lineno}: duplicate token {token!r}")
        entries[token] = value
    if not entries:
        raise LexiconError(f"{path}: polarity table is empty")
    return PolarityLexicon(entries)


def load_shifters(path: str | Path) -> ShifterLexicon:
    """Load a shifter table mapping tokens to one of the four categories."""
    entries: dict[str, str] = {}
    for lineno, token, category in _iter_rows(path):
        category = category.lower()
        if category not in SHIFTER_CATEGORIES:
            raise LexiconError(
                f"{path}:{lineno}: unknown shifter category {category!r}"
            )
        if token in entries:
            raise LexiconError(f"{path}:{lineno}: duplicate token {token!r}")
        entries[token] = category
    return ShifterLexicon(entries)
