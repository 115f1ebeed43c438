"""
Text-anchored relational distillation on hand-made embeddings
=============================================================

TRKD compares, for every text present in an image, the matrix of cosines
between that text embedding and the regions assigned to it.  This script
builds those matrices for a tiny example and shows why the loss averages
per text before averaging across texts.
"""

# %%
import numpy as np

from lowbit_ovd.losses import build_relational_matrix, trkd_loss
from lowbit_ovd.model import Assignment, DetectionOutputs, make_grid
from lowbit_ovd.tensor import DiffTensor

rng = np.random.default_rng(3)
text = rng.normal(size=(2, 6))
text /= np.linalg.norm(text, axis=1, keepdims=True)

# %%
# Row and column 0 of the relational matrix hold the text, the other rows
# hold its regions.  The diagonal is 1 and the matrix is symmetric.
regions = rng.normal(size=(3, 6))
S = build_relational_matrix(text[0], regions).matrix
print(np.round(S, 3))


# %%
# A student that drifts from the teacher changes these cosines.  Text 0 has
# one region and text 1 has nine, so a flat average over all matrix entries
# would be dominated by text 1.  The per-text average gives each text equal
# weight.
def outputs(emb):
    n = emb.shape[1]
    return DetectionOutputs([], DiffTensor(emb), DiffTensor(np.zeros((1, n, 2))),
                            DiffTensor(np.ones((1, n, 4))), np.arange(2), text, make_grid())


label = np.full(80, -1)
label[0], label[10:19] = 0, 1
assignment = Assignment(np.where(label >= 0, 0, -1), label, {0: np.array([0]), 1: np.arange(10, 19)})
teacher = rng.normal(size=(1, 80, 6))
student = teacher + rng.normal(size=teacher.shape) * 0.5
for delta in (1.0, 0.1):
    value = float(trkd_loss(outputs(teacher), outputs(student), [assignment], delta=delta).data)
    print(f"TRKD with delta={delta}: {value:.4f}")

# %%
# Cosine differences between a quantized student and its teacher are around
# 0.1.  With delta = 1 the Smooth L1 loss squares them and the signal almost
# vanishes next to the task loss; delta = 0.1 matches the threshold to that
# scale, which is why it is the package default.
