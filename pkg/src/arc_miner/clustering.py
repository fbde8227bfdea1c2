"""Seeded k-means over narrative trajectories.

k-means++ initialization, Lloyd iterations with deterministic tie
breaking (lowest cluster index) and empty-cluster repair by seizing the
point currently farthest from its centroid. ``fit`` runs independent
restarts with per-restart seeds spawned from one master seed and keeps
the lowest-WSS model, so results are reproducible and identical under
serial or threaded execution.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import InvariantError, ParameterError


@dataclass
class ArcModel:
    k: int
    seed: int
    restarts: int
    centroids: np.ndarray
    assignments: np.ndarray
    wss: float
    iterations: int
    wss_history: list[float] = field(default_factory=list)


@dataclass
class ClusterSummary:
    cluster_id: int
    n: int
    mean: np.ndarray
    sd: np.ndarray
    ci_low: np.ndarray
    ci_high: np.ndarray
    label: str = "unmatched"


def _sq_dists(points: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    """Pairwise squared Euclidean distances, shape (n_points, n_centroids)."""
    diff = points[:, None, :] - centroids[None, :, :]
    return np.einsum("ijk,ijk->ij", diff, diff)


def kmeanspp_init(
    points: np.ndarray, k: int, rng: np.random.Generator
) -> np.ndarray:
    """k-means++ seeding: first centroid uniform, the rest D^2-weighted."""
    points = np.asarray(points, dtype=float)
    n_distinct = np.unique(points, axis=0).shape[0]
    if k < 1 or k > n_distinct:
        raise ParameterError(
            f"k={k} must be between 1 and the number of distinct points ({n_distinct})"
        )
    n = points.shape[0]
    chosen = [int(rng.integers(n))]
    d2 = _sq_dists(points, points[chosen[-1]][None, :])[:, 0]
    for _ in range(1, k):
        total = d2.sum()
        if total <= 0:
            raise InvariantError("no distinct point left for k-means++ seeding")
        idx = int(rng.choice(n, p=d2 / total))
        chosen.append(idx)
        d2 = np.minimum(d2, _sq_dists(points, points[idx][None, :])[:, 0])
    return points[chosen].copy()


def lloyd(
    points: np.ndarray, init_centroids: np.ndarray, max_iter: int = 300
) -> ArcModel:
    """Lloyd iterations until assignments stabilize or max_iter.

    WSS is recorded after every centroid update; it never increases.
    """
    points = np.asarray(points, dtype=float)
    centroids = np.array(init_centroids, dtype=float, copy=True)
    k = centroids.shape[0]
    n = points.shape[0]
    assignments = np.full(n, -1, dtype=int)
    wss_history: list[float] = []
    iterations = 0

    for iterations in range(1, max_iter + 1):
        d2 = _sq_dists(points, centroids)
        new_assignments = np.argmin(d2, axis=1)  # ties -> lowest index

        # repair empty clusters by seizing the worst-fitting point
        point_cost = d2[np.arange(n), new_assignments]
        for c in range(k):
            if not np.any(new_assignments == c):
                victim = int(np.argmax(point_cost))
                new_assignments[victim] = c
                point_cost[victim] = 0.0

        for c in range(k):
            members = points[new_assignments == c]
            centroids[c] = members.mean(axis=0)

        d2 = _sq_dists(points, centroids)
        wss = float(d2[np.arange(n), new_assignments].sum())
        wss_history.append(wss)

        if np.array_equal(new_assignments, assignments):
            assignments = new_assignments
            break
        assignments = new_assignments

    return ArcModel(
        k=k,
        seed=0,
        restarts=1,
        centroids=centroids,
        assignments=assignments,
        wss=wss_history[-1],
        iterations=iterations,
        wss_history=wss_history,
    )


def _one_restart(points, k, child_seed, max_iter):
    rng = np.random.default_rng(child_seed)
    init = kmeanspp_init(points, k, rng)
    return lloyd(points, init, max_iter=max_iter)


def fit(
    points: np.ndarray,
    k: int,
    restarts: int = 25,
    seed: int = 0,
    max_iter: int = 300,
    n_jobs: int = 1,
) -> ArcModel:
    """Best-of-restarts k-means; bit-identical for any n_jobs."""
    if restarts < 1:
        raise ParameterError("restarts must be >= 1")
    points = np.asarray(points, dtype=float)
    children = np.random.SeedSequence(seed).spawn(restarts)

    if n_jobs == 1:
        models = [_one_restart(points, k, c, max_iter) for c in children]
    else:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            models = list(
                pool.map(lambda c: _one_restart(points, k, c, max_iter), children)
            )

    best = min(range(restarts), key=lambda i: (models[i].wss, i))
    model = models[best]
    model.seed = seed
    model.restarts = restarts
    return model


def scree(
    points: np.ndarray,
    k_min: int = 1,
    k_max: int = 30,
    restarts: int = 25,
    seed: int = 0,
    n_jobs: int = 1,
) -> list[tuple[int, float]]:
    """WSS of the best fit for each k in [k_min, k_max]."""
    if not (1 <= k_min <= k_max):
        raise ParameterError("need 1 <= k_min <= k_max")
    return [
        (k, fit(points, k, restarts=restarts, seed=seed, n_jobs=n_jobs).wss)
        for k in range(k_min, k_max + 1)
    ]


def suggest_elbow(curve: list[tuple[int, float]]) -> int | None:
    """Advisory elbow: the k with the largest second difference of WSS."""
    if len(curve) < 3:
        return None
    ks = [k for k, _ in curve]
    wss = [w for _, w in curve]
    d2 = [wss[i - 1] - 2 * wss[i] + wss[i + 1] for i in range(1, len(wss) - 1)]
    return ks[1 + int(np.argmax(d2))]


def summarize(
    model: ArcModel, points: np.ndarray, templates=None
) -> list[ClusterSummary]:
    """Per-cluster per-bin mean, sample SD, and 99% CI (2.576 * SD / sqrt(n))."""
    points = np.asarray(points, dtype=float)
    summaries = []
    for c in range(model.k):
        members = points[model.assignments == c]
        n = members.shape[0]
        if n == 0:
            raise InvariantError(f"cluster {c} is empty after fitting")
        mean = members.mean(axis=0)
        sd = members.std(axis=0, ddof=1) if n > 1 else np.zeros(points.shape[1])
        half = 2.576 * sd / np.sqrt(n)
        label = "unmatched"
        if templates is not None:
            label = match_taxonomy(model.centroids[c], templates)
        summaries.append(
            ClusterSummary(
                cluster_id=c,
                n=n,
                mean=mean,
                sd=sd,
                ci_low=mean - half,
                ci_high=mean + half,
                label=label,
            )
        )
    return summaries


def match_taxonomy(centroid: np.ndarray, templates) -> str:
    """Label of the template best Pearson-correlated with the centroid.

    Returns "unmatched" for constant centroids or when the best
    correlation falls below 0.5. ``templates`` is an iterable of
    (label, shape) pairs or a mapping label -> shape.
    """
    centroid = np.asarray(centroid, dtype=float)
    if np.ptp(centroid) == 0:
        return "unmatched"
    items = templates.items() if hasattr(templates, "items") else list(templates)
    best_label, best_corr = "unmatched", -np.inf
    for label, shape in items:
        shape = np.asarray(shape, dtype=float)
        if np.ptp(shape) == 0:
            raise ParameterError(f"taxonomy template {label!r} is constant")
        corr = float(np.corrcoef(centroid, shape)[0, 1])
        if corr > best_corr:
            best_label, best_corr = label, corr
    return best_label if best_corr >= 0.5 else "unmatched"


def write_model(
    model: ArcModel, ids: list[str], path: str | Path
) -> None:
    """Persist a fitted model as one JSON document, assignments keyed by id."""
    if len(ids) != len(model.assignments):
        raise ParameterError("ids and assignments length mismatch")
    doc = {
        "k": model.k,
        "seed": model.seed,
        "restarts": model.restarts,
        "wss": model.wss,
        "iterations": model.iterations,
        "centroids": [[float(v) for v in row] for row in model.centroids],
        "assignments": {i: int(a) for i, a in zip(ids, model.assignments)},
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def read_model(path: str | Path) -> tuple[ArcModel, list[str]]:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    ids = list(doc["assignments"].keys())
    model = ArcModel(
        k=int(doc["k"]),
        seed=int(doc["seed"]),
        restarts=int(doc["restarts"]),
        centroids=np.array(doc["centroids"], dtype=float),
        assignments=np.array([doc["assignments"][i] for i in ids], dtype=int),
        wss=float(doc["wss"]),
        iterations=int(doc["iterations"]),
    )
    return model, ids
