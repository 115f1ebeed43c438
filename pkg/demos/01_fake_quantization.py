"""
Fake quantization, straight-through gradients and calibration
=============================================================

A walk through the quantizer used everywhere else in the package: what a
4-bit code looks like, which gradients flow back through the rounding, and
how the three calibrators pick a clipping range on heavy-tailed data.

Run with ``python demos/01_fake_quantization.py``.
"""

# %%
# A signed symmetric 4-bit quantizer has 16 integer levels, -8..7.  With a
# scale of 0.25 every real number is snapped to a multiple of 0.25 and
# clipped to [-2.0, 1.75].
import numpy as np

from lowbit_ovd.quant import (QuantParams, QuantSpec, calibrate, fake_quant, learnable_scale_grad,
                              quant_mse, quantize)
from lowbit_ovd.tensor import DiffTensor

spec = QuantSpec(bits=4, signed=True, symmetric=True)
params = QuantParams(np.array([0.25]), np.array([0]))
x = np.array([-3.0, -0.3, 0.1, 0.125, 0.37, 1.9])
print("levels     ", spec.qmin, "..", spec.qmax)
print("x          ", x)
print("codes      ", quantize(x, params, spec))
print("fake-quant ", fake_quant(x, params, spec).data)

# %%
# Rounding has zero gradient almost everywhere, so training uses the
# straight-through estimator: the gradient passes unchanged inside the
# representable range and is cut outside it.
xt = DiffTensor(x, requires_grad=True)
fake_quant(xt, params, spec).sum().backward()
print("STE mask   ", xt.grad)

# %%
# The scale itself is learnable.  Its per-element gradient is the rounding
# residual inside the range and the clip level outside it; the quantizer
# sums these and rescales by 1/sqrt(N * qmax) so the scale's step size is
# comparable to the weights'.
print("d fq / d s ", learnable_scale_grad(x, 0.25, spec))

# %%
# Calibration chooses the scale before training.  On Student-t data the
# min-max range is stretched by a few outliers; the 99.99th percentile and
# the MSE search clip them and spend the 16 levels where the mass is.
rng = np.random.default_rng(0)
sample = rng.standard_t(df=3, size=20000)
for method in ("minmax", "percentile", "mse"):
    p = calibrate(sample, spec, method)
    print(f"{method:>10}: scale {p.scale[0]:.4f}  reconstruction MSE {quant_mse(sample, p, spec):.5f}")
