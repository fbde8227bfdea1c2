"""The seven-style trajectory taxonomy.

Templates are coarse piecewise-linear encodings of the verbal style
descriptions (e.g. "negative first half, positive second half"), used
only to propose labels for fitted centroids; final labels may always be
overridden by hand. "Rags to riches" and "riches to rags" are exact
mirror shapes.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .trajectory import Trajectory, read_trajectories

LABELS = (
    "Downhill from here",
    "Mood swings",
    "Rags to riches",
    "Riches to rags",
    "Bump in the road",
    "End on a high note",
    "Twin peaks",
)

# (position in [0, 1], level) anchor points per style
_ANCHORS = {
    "Downhill from here": [(0.0, 1.0), (0.2, -0.5), (0.45, -0.4), (0.6, 0.3),
                           (0.8, 0.2), (1.0, -0.8)],
    "Mood swings": [(0.0, -1.0), (0.3, 0.8), (0.55, -0.3), (0.75, -0.3),
                    (1.0, 0.5)],
    "Rags to riches": [(0.0, -1.0), (1.0, 1.0)],
    "Riches to rags": [(0.0, 1.0), (1.0, -1.0)],
    "Bump in the road": [(0.0, 0.5), (0.5, -1.0), (1.0, 0.5)],
    "End on a high note": [(0.0, -0.4), (0.7, -0.4), (1.0, 1.0)],
    "Twin peaks": [(0.0, 0.0), (0.25, 1.0), (0.5, 0.2), (0.75, 1.0),
                   (1.0, 0.0)],
}


def default_templates(bins: int = 100) -> dict[str, np.ndarray]:
    """Bundled templates as a label -> shape mapping."""
    grid = np.linspace(0.0, 1.0, bins)
    out = {}
    for label in LABELS:
        xs, ys = zip(*_ANCHORS[label])
        out[label] = np.interp(grid, xs, ys)
    return out


def load_templates(path: str | Path) -> dict[str, np.ndarray]:
    """Read templates from a trajectory-format table, one row per label."""
    return {t.transcript_id: t.bins for t in read_trajectories(path)}


def write_templates(templates: dict[str, np.ndarray], path: str | Path) -> None:
    from .trajectory import write_trajectories

    write_trajectories(
        [Trajectory(label, np.asarray(shape), False) for label, shape in templates.items()],
        path,
    )
