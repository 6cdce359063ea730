"""Remote electrode observations and the Tikhonov (ECGI) inverse.

Builds the 64-electrode lead field, observes a few episodes, and scans the
regularisation weight against reconstruction Dice.

Run: python demos/02_observations_and_ecgi.py
"""
import numpy as np

from causal_ssm.evaluation import select_ecgi_lambda
from causal_ssm.fhn import generate_dataset
from causal_ssm.forward import RegularizerSpec, build_forward_operator, ecgi_reconstruct, observe
from causal_ssm.native import mean_frame_dice

op = build_forward_operator(32, (8, 8), height_mm=20.0)
print("lead field", op.H.shape, "rows sum to", np.round(op.H.sum(1)[:3], 6))

ds = generate_dataset("intervention", 6, seed=11)
x = ds.binarized()
Y = observe(op, x)
print("observations", Y.shape, f"range [{Y.min():.3f}, {Y.max():.3f}]")

lam, scores = select_ecgi_lambda(Y[:3], x[:3], op, [1e-6, 1e-5, 1e-4, 1e-3, 1e-2])
for k in sorted(scores):
    print(f"  lambda {k:8.0e}  Dice {scores[k]:.3f}{'  <- chosen' if k == lam else ''}")

reg = RegularizerSpec.first_order(32, lam)
held_out = np.stack([ecgi_reconstruct(y, op, reg) for y in Y[3:]])
print(f"held-out Dice at lambda {lam:g}: {mean_frame_dice(held_out, x[3:]):.3f}")

noisy = observe(op, x[3:], noise_std=0.01, rng=np.random.default_rng(0))
rec = np.stack([ecgi_reconstruct(y, op, reg) for y in noisy])
print(f"same lambda with 0.01 electrode noise: Dice {mean_frame_dice(rec, x[3:]):.3f}")
