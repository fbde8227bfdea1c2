"""From a token-length sentiment series to a 100-bin narrative arc.

Builds a sparse sentiment series whose positive mass migrates toward
the end of the document, projects it onto standardized narrative time,
and prints a coarse text rendering of the resulting curve.
"""

import numpy as np

from arc_miner import SentimentSeries, TrajectoryParams, make_trajectory

rng = np.random.default_rng(0)

n_tokens = 600
values = np.zeros(n_tokens)
hits = rng.choice(n_tokens, size=60, replace=False)
for i in hits:
    position = i / n_tokens
    # negative early, positive late
    values[i] = rng.normal(loc=2 * position - 1, scale=0.3)

trajectory = make_trajectory(
    SentimentSeries("demo", list(values)), TrajectoryParams(bins=100, low_pass=5)
)

print(f"degenerate: {trajectory.degenerate}")
print(f"min {trajectory.bins.min():+.3f} at bin {trajectory.bins.argmin()}, "
      f"max {trajectory.bins.max():+.3f} at bin {trajectory.bins.argmax()}")

rows = 11
levels = np.linspace(1.0, -1.0, rows)
for level in levels:
    line = "".join(
        "*" if abs(trajectory.bins[m] - level) < 0.1 else " " for m in range(100)
    )
    print(f"{level:+.1f} |{line}|")
print("      bin 0" + " " * 86 + "bin 99")
