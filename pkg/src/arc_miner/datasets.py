"""Bundled data files and synthetic fixtures.

The package ships a small test lexicon pair, the taxonomy template
table, and a 20-document mini corpus used by the end-to-end examples and
tests. ``make_synthetic_arcs`` generates labeled trajectory families for
exercising the clustering stage.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

import numpy as np

_DATA = resources.files("arc_miner") / "data"


def data_path(name: str) -> Path:
    """Absolute path of a bundled data file."""
    return Path(str(_DATA / name))


def polarity_path() -> Path:
    return data_path("polarity_test.tsv")


def shifters_path() -> Path:
    return data_path("shifters_test.tsv")


def templates_path() -> Path:
    return data_path("taxonomy_templates.csv")


def mini_corpus_paths() -> tuple[Path, Path]:
    """(captions directory, metadata CSV) of the bundled mini corpus."""
    return data_path("mini_corpus/captions"), data_path("mini_corpus/meta.csv")


def make_synthetic_arcs(
    n_per_family: int = 200,
    bins: int = 100,
    noise: float = 0.1,
    seed: int = 0,
) -> tuple[np.ndarray, np.ndarray]:
    """Three noisy arc families (rising, falling, U-shaped) with labels.

    Returns (points, labels) with points of shape
    (3 * n_per_family, bins) and integer labels 0..2.
    """
    rng = np.random.default_rng(seed)
    t = np.linspace(0.0, 1.0, bins)
    shapes = [
        2 * t - 1,            # rising
        1 - 2 * t,            # falling
        (2 * t - 1) ** 2 * 2 - 1,  # U-shaped
    ]
    points = []
    labels = []
    for family, shape in enumerate(shapes):
        block = shape[None, :] + rng.normal(0.0, noise, size=(n_per_family, bins))
        points.append(block)
        labels.extend([family] * n_per_family)
    return np.vstack(points), np.array(labels)
