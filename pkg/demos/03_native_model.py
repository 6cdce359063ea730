"""Stage 1 in miniature: a latent ODE model of intervention-free propagation.

A 16x16 grid keeps this to about a minute on one CPU core. The model sees
only the first k observation frames; everything after is a rollout.

Run: python demos/03_native_model.py
"""
import numpy as np
import torch

from causal_ssm.fhn import EpisodeSampler, FhnParams, generate_dataset
from causal_ssm.forward import build_forward_operator, observe
from causal_ssm.native import NativeModel, TrainConfig, mean_frame_dice, reconstruct, train_native

torch.set_num_threads(1)
N, T = 16, 30
params, sampler = FhnParams.for_grid(N), EpisodeSampler.for_grid(N, frames=T)
op = build_forward_operator(N, (8, 8))


def split(count, seed):
    x = generate_dataset("native", count, params, seed=seed, sampler=sampler).binarized().astype(np.float32)
    return x, observe(op, x).astype(np.float32)


(xt, Yt), (xv, Yv) = split(64, 1), split(12, 2)
model = NativeModel(grid_size=N, layout=(8, 8), k=5, d_z=12, hidden=64)
res = train_native(model, xt, Yt, xv, Yv, TrainConfig(epochs=30, lr=1e-3),
                   log=lambda s: print(" ", s) if "epoch" in s and int(s.split()[1]) % 10 == 0 else None)
pred = reconstruct(model, Yv) >= 0.5
print(f"best val loss {res.best_val:.4f}, validation Dice {mean_frame_dice(pred, xv):.3f}")

# the rollout never looks at observations past frame k
corrupt = Yv.copy()
corrupt[:, model.k:] = 0
print("ignores Y after frame k:", np.array_equal(reconstruct(model, Yv), reconstruct(model, corrupt)))
