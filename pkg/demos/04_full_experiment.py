"""
The full toy experiment: teacher, PTQ, QAT and CR-QAT over three seeds
======================================================================

This is the same sequence the acceptance suite relies on, written out with
the harness API.  Every run is cached under ``runs/`` (or ``$LOWBIT_OVD_RUNS``),
so a second execution only prints the tables.  From scratch it takes a few
hours on one CPU core.
"""

# %%
import os

from lowbit_ovd import harness
from lowbit_ovd.config import default_config

out = os.environ.get("LOWBIT_OVD_RUNS", "runs")
base = default_config().with_values({"out": out})
seeds = (0, 1, 2)

# %%
# Data and the full-precision teacher come first; every student starts from
# the teacher's weights.
for seed in seeds:
    harness.ensure_prerequisites(base.with_values({"seed": seed}))

# %%
# The canonical runs, then the two ablation grids.
methods = ("ptq-minmax", "ptq-percentile", "ptq-mse", "qat", "cqat", "kd-qat", "cr-qat")
for seed in seeds:
    for method in methods:
        harness.run(base.with_values({"seed": seed, "method": method}))

for axis in ("curriculum-kd", "trkd-variant"):
    print(f"\n{axis}")
    print(harness.format_table(harness.ablate(base, axis, seeds, prepare=False)))

# %%
# Distortion against the teacher and the Spearman correlation between
# embedding-level and confidence-level relational distortion.
summary = harness.analyze(base, seeds, methods)
for method, entry in summary["methods"].items():
    print(f"{method:>15}  novel AP {entry['ap_val_novel']:.3f}  alignment MAE {entry['alignment_mae']:.4f}"
          f"  relational MAE {entry['relational_mae']:.4f}")
print("Spearman rho:", summary["spearman"])
