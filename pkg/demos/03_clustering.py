"""Clustering synthetic arc families and labeling the centroids.

Generates three noisy trajectory families, runs the scree curve, fits
k-means at the suggested k, and matches each centroid against the
seven-style taxonomy.
"""

from arc_miner import fit, scree, suggest_elbow, summarize
from arc_miner.datasets import make_synthetic_arcs
from arc_miner.taxonomy import default_templates

points, truth = make_synthetic_arcs(n_per_family=150, noise=0.1, seed=11)
print(f"{points.shape[0]} trajectories, {points.shape[1]} bins each")

curve = scree(points, k_min=1, k_max=8, restarts=10, seed=0)
print("\n  k   WSS")
for k, wss in curve:
    print(f"  {k}  {wss:10.2f}")
elbow = suggest_elbow(curve)
print(f"advisory elbow: k = {elbow}")

model = fit(points, elbow, restarts=25, seed=0)
print(f"\nfitted k = {model.k}, wss = {model.wss:.2f}, {model.iterations} iterations")

for s in summarize(model, points, templates=default_templates()):
    print(f"  cluster {s.cluster_id}: n = {s.n:4d}  label = {s.label}")
