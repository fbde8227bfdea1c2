"""Descriptive and categorical statistics for clustered corpora.

Chi-square goodness of fit against a uniform null, chi-square tests of
association with Pearson and adjusted standardized residuals, view-count
standardization, one-sided outlier flagging, and grouped descriptives.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import gammaincc

from .errors import ParameterError


@dataclass
class GofResult:
    chi2: float
    df: int
    p: float
    residuals: np.ndarray


@dataclass
class ContingencyTable:
    row_labels: list[str]
    col_labels: list[str]
    counts: np.ndarray

    def __post_init__(self):
        self.counts = np.asarray(self.counts)
        r, c = self.counts.shape
        if r < 2 or c < 2:
            raise ParameterError("contingency table needs at least 2 rows and 2 columns")
        if np.any(self.counts < 0):
            raise ParameterError("contingency counts must be non-negative")
        if np.any(self.counts.sum(axis=1) == 0) or np.any(self.counts.sum(axis=0) == 0):
            raise ParameterError("every row and column sum must be positive")


@dataclass
class AssocResult:
    chi2: float
    df: int
    p: float
    pearson_residuals: np.ndarray
    adjusted_residuals: np.ndarray


def chi2_upper_tail(x: float, df: int) -> float:
    """Upper-tail chi-square probability, Q(df/2, x/2)."""
    if x < 0 or df < 1:
        raise ParameterError("need x >= 0 and df >= 1")
    return float(gammaincc(df / 2.0, x / 2.0))


def chisq_gof(counts) -> GofResult:
    """Goodness of fit against a uniform expected distribution."""
    counts = np.asarray(counts, dtype=float)
    if counts.ndim != 1 or counts.size < 2:
        raise ParameterError("need at least 2 categories")
    if np.any(counts < 0) or counts.sum() <= 0:
        raise ParameterError("counts must be non-negative with positive total")
    expected = counts.sum() / counts.size
    residuals = (counts - expected) / np.sqrt(expected)
    chi2 = float((residuals**2).sum())
    df = counts.size - 1
    return GofResult(chi2=chi2, df=df, p=chi2_upper_tail(chi2, df), residuals=residuals)


def gof_residuals(counts) -> np.ndarray:
    return chisq_gof(counts).residuals


def chisq_assoc(table: ContingencyTable) -> AssocResult:
    """Chi-square test of independence with both residual flavors."""
    counts = table.counts.astype(float)
    total = counts.sum()
    row = counts.sum(axis=1, keepdims=True)
    col = counts.sum(axis=0, keepdims=True)
    expected = row @ col / total
    pearson = (counts - expected) / np.sqrt(expected)
    adjusted = pearson / np.sqrt((1 - row / total) * (1 - col / total))
    chi2 = float((pearson**2).sum())
    df = (counts.shape[0] - 1) * (counts.shape[1] - 1)
    return AssocResult(
        chi2=chi2,
        df=df,
        p=chi2_upper_tail(chi2, df),
        pearson_residuals=pearson,
        adjusted_residuals=adjusted,
    )


def standardize_views(view_count: float, days_online: int) -> float:
    """Views per day online."""
    if days_online < 1:
        raise ParameterError("days_online must be >= 1")
    return view_count / days_online


def outlier_mask(values, z_threshold: float = 3.0) -> np.ndarray:
    """Flag values more than z_threshold sample SDs above the mean.

    One-sided: values below the mean are never flagged. Constant input
    yields an all-false mask.
    """
    values = np.asarray(values, dtype=float)
    if values.size < 2:
        raise ParameterError("need at least 2 values")
    sd = values.std(ddof=1)
    if sd == 0:
        return np.zeros(values.size, dtype=bool)
    return values > values.mean() + z_threshold * sd


def descriptives(values, group_keys=None) -> list[dict]:
    """Per-group n, mean, and sample SD (0 with n == 1 flagged)."""
    values = np.asarray(values, dtype=float)
    if group_keys is None:
        group_keys = [""] * values.size
    groups: dict = {}
    for key, v in zip(group_keys, values):
        groups.setdefault(key, []).append(v)
    out = []
    for key in sorted(groups):
        vs = np.asarray(groups[key])
        out.append(
            {
                "group": key,
                "n": int(vs.size),
                "mean": float(vs.mean()),
                "sd": float(vs.std(ddof=1)) if vs.size > 1 else 0.0,
            }
        )
    return out
