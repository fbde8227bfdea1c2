"""Naive-context weighted sentiment extraction for non-punctuated text.

Each token matched by the polarity lexicon anchors a fixed window of
``window_radius`` tokens on either side (clipped at text boundaries). The
output value at the anchor is its polarity times the product of the
shifter weights of the surrounding window tokens; non-shifter context
words contribute 1. Everything else in the series is 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .lexicon import PolarityLexicon, ShifterLexicon


@dataclass(frozen=True)
class ExtractionParams:
    window_radius: int = 2
    weight_negator: float = -1.00
    weight_amplifier: float = 1.50
    weight_deamplifier: float = 0.50
    weight_adversative: float = 0.25

    def weight_for(self, category: str) -> float:
        return {
            "negator": self.weight_negator,
            "amplifier": self.weight_amplifier,
            "deamplifier": self.weight_deamplifier,
            "adversative": self.weight_adversative,
        }[category]


@dataclass
class SentimentSeries:
    transcript_id: str
    values: list[float]
    hit_indices: list[int] = field(default_factory=list)


def tokenize(text: str) -> list[str]:
    """Lowercase whitespace tokenization for continuous transcript text.

    Surrounding characters that are not letters, digits, or apostrophes
    are trimmed; internal apostrophes are kept; empty tokens dropped.
    """
    tokens = []
    for chunk in text.lower().split():
        i, j = 0, len(chunk)
        while i < j and not (chunk[i].isalnum() or chunk[i] == "'"):
            i += 1
        while j > i and not (chunk[j - 1].isalnum() or chunk[j - 1] == "'"):
            j -= 1
        if i < j:
            tokens.append(chunk[i:j])
    return tokens


def shifter_weight(
    token: str, shifters: ShifterLexicon, params: ExtractionParams
) -> float:
    category = shifters.lookup(token)
    return 1.0 if category is None else params.weight_for(category)


def extract(
    tokens: list[str],
    polarity: PolarityLexicon,
    shifters: ShifterLexicon,
    params: ExtractionParams | None = None,
    transcript_id: str = "",
) -> SentimentSeries:
    """Compute the per-token weighted sentiment series.

    A token present in both lexicons acts as a polarity hit at the focal
    position and as a shifter only at context positions; polarity words
    inside another hit's window contribute weight 1.
    """
    if params is None:
        params = ExtractionParams()
    n = len(tokens)
    r = params.window_radius
    values = [0.0] * n
    hits: list[int] = []
    for i, token in enumerate(tokens):
        pol = polarity.lookup(token)
        if pol is None:
            continue
        value = pol
        for j in range(max(0, i - r), min(n - 1, i + r) + 1):
            if j != i:
                value *= shifter_weight(tokens[j], shifters, params)
        values[i] = value
        hits.append(i)
    return SentimentSeries(transcript_id=transcript_id, values=values, hit_indices=hits)


def write_series(series_list: list[SentimentSeries], path: str | Path) -> None:
    """Record-stream output: one object per line, transcript_id plus values."""
    with open(path, "w", encoding="utf-8") as fh:
        for s in series_list:
            fh.write(
                json.dumps({"transcript_id": s.transcript_id, "values": s.values})
                + "\n"
            )


def read_series(path: str | Path) -> list[SentimentSeries]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            values = [float(v) for v in rec["values"]]
            hits = [i for i, v in enumerate(values) if v != 0.0]
            out.append(
                SentimentSeries(
                    transcript_id=rec["transcript_id"], values=values, hit_indices=hits
                )
            )
    return out
