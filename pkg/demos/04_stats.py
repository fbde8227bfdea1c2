"""Categorical statistics on cluster memberships.

Goodness of fit of cluster sizes against a uniform null, and a gender
by cluster association test with both residual flavors.
"""

import numpy as np

from arc_miner import ContingencyTable, chisq_assoc, chisq_gof, outlier_mask

counts = [4308, 3176, 4270, 3315, 3611, 4933, 3211]
gof = chisq_gof(counts)
print(f"cluster sizes: {counts}")
print(f"GOF vs uniform: chi2({gof.df}) = {gof.chi2:.2f}, p = {gof.p:.3g}")
print("standardized residuals:", np.round(gof.residuals, 2))

table = ContingencyTable(
    row_labels=["family", "female", "male"],
    col_labels=[f"c{i}" for i in range(1, 8)],
    counts=np.array(
        [
            [1450, 1000, 1500, 1050, 1250, 1300, 1400],
            [320, 250, 300, 380, 250, 270, 280],
            [2100, 1800, 2200, 1750, 1950, 3000, 1400],
        ]
    ),
)
assoc = chisq_assoc(table)
print(f"\nassociation: chi2({assoc.df}) = {assoc.chi2:.2f}, p = {assoc.p:.3g}")
print("adjusted residuals:")
for label, row in zip(table.row_labels, assoc.adjusted_residuals):
    print(f"  {label:7s}", np.round(row, 2))

views = np.concatenate([np.random.default_rng(1).lognormal(8, 1, 500), [1e7]])
mask = outlier_mask(views, z_threshold=3.0)
print(f"\nview outliers flagged: {mask.sum()} of {views.size}")
