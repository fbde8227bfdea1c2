"""End-to-end run on the bundled 20-document mini corpus.

Equivalent to the `arc-miner pipeline` command; writes every stage
artifact (corpus, series, trajectories, scree, model, summaries, stats,
SVG figures) into ./pipeline_out.
"""

import json
from pathlib import Path

from arc_miner import datasets
from arc_miner.cli import main

captions, meta = datasets.mini_corpus_paths()
out = Path("pipeline_out")

code = main([
    "pipeline",
    "--captions-dir", str(captions),
    "--meta", str(meta),
    "--out", str(out),
    "--seed", "42",
])
assert code == 0

stats = json.loads((out / "stats.json").read_text())
print("\ncluster counts:", stats["cluster_counts"])
print(f"GOF chi2({stats['gof']['df']}) = {stats['gof']['chi2']:.2f}, "
      f"p = {stats['gof']['p']:.3g}")
summaries = json.loads((out / "summaries.json").read_text())
for s in summaries:
    print(f"  cluster {s['cluster']}: n = {s['n']}  label = {s['label']}")
print(f"\nfigures: {out / 'arcs.svg'}, {out / 'scree.svg'}")
