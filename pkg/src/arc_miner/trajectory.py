"""Narrative-time trajectories via DCT low-pass reconstruction.

A sentiment series of arbitrary token length is projected onto a fixed
number of narrative-time bins: forward type-II DCT, keep the first
``low_pass`` coefficients, reconstruct at the bin resolution, then
min-max scale to [-1, 1]. Constant reconstructions (e.g. no sentiment
hits) are flagged degenerate and mapped to all zeros.

Convention (unnormalized type-II / half-weighted type-III pair):

            N-1
    X[k] =  sum  x[n] * cos(pi*k*(2n+1) / (2N))
            n=0

                      M-1
    y[m] = X[0]/2  +  sum  X[k] * cos(pi*k*(2m+1) / (2M))
                      k=1

Global scale and offset cancel in the final scaling step, so any
positive rescaling of this convention yields identical trajectories.
"""

from __future__ import annotations

import csv
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.fft import dct as _scipy_dct

from .errors import DataError, ParameterError
from .sentiment import SentimentSeries


@dataclass(frozen=True)
class TrajectoryParams:
    bins: int = 100
    low_pass: int = 5

    def __post_init__(self):
        if self.bins < 1:
            raise ParameterError("bins must be >= 1")
        if not (1 <= self.low_pass <= self.bins):
            raise ParameterError("low_pass must satisfy 1 <= low_pass <= bins")


@dataclass
class Trajectory:
    transcript_id: str
    bins: np.ndarray
    degenerate: bool


def dct_forward(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise ParameterError("dct_forward requires a non-empty 1-D vector")
    # scipy's type-II is 2x the convention above
    return _scipy_dct(x, type=2) / 2.0


def low_pass_reconstruct(X, low_pass: int, bins: int) -> np.ndarray:
    X = np.asarray(X, dtype=float)
    if bins < 1 or low_pass < 1 or low_pass > bins:
        raise ParameterError("need 1 <= low_pass <= bins")
    if low_pass > X.size:
        warnings.warn(
            f"low_pass={low_pass} exceeds coefficient count {X.size}; "
            f"keeping all {X.size} coefficients",
            stacklevel=2,
        )
        low_pass = X.size
    padded = np.zeros(bins)
    padded[:low_pass] = X[:low_pass]
    # scipy's type-III is X[0] + 2*sum(...); halving gives X[0]/2 + sum(...)
    return _scipy_dct(padded, type=3) / 2.0


def scale_to_unit(y) -> tuple[np.ndarray, bool]:
    y = np.asarray(y, dtype=float)
    if not np.all(np.isfinite(y)):
        raise DataError("non-finite values in reconstruction")
    lo, hi = y.min(), y.max()
    if hi > lo:
        return 2.0 * (y - lo) / (hi - lo) - 1.0, False
    return np.zeros_like(y), True


def make_trajectory(
    series: SentimentSeries, params: TrajectoryParams | None = None
) -> Trajectory:
    if params is None:
        params = TrajectoryParams()
    coeffs = dct_forward(series.values)
    recon = low_pass_reconstruct(coeffs, params.low_pass, params.bins)
    scaled, degenerate = scale_to_unit(recon)
    return Trajectory(
        transcript_id=series.transcript_id, bins=scaled, degenerate=degenerate
    )


def write_trajectories(trajectories: list[Trajectory], path: str | Path) -> None:
    """CSV output: header id,degenerate,b000..b0NN; 17 significant digits."""
    if not trajectories:
        raise ParameterError("no trajectories to write")
    m = len(trajectories[0].bins)
    header = ["id", "degenerate"] + [f"b{i:03d}" for i in range(m)]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for t in trajectories:
            if len(t.bins) != m:
                raise ParameterError("mixed bin counts in one trajectory table")
            writer.writerow(
                [t.transcript_id, "true" if t.degenerate else "false"]
                + [f"{v:.17g}" for v in t.bins]
            )


def read_trajectories(path: str | Path) -> list[Trajectory]:
    out = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or header[:2] != ["id", "degenerate"]:
            raise ParameterError(f"{path}: not a trajectory table")
        for row in reader:
            if not row:
                continue
            out.append(
                Trajectory(
                    transcript_id=row[0],
                    bins=np.array([float(v) for v in row[2:]]),
                    degenerate=row[1] == "true",
                )
            )
    return out
