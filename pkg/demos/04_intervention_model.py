"""Stage 2 in miniature: an intervention state a that explains what the native model cannot.

The native model from a short stage-1 run is frozen. Before any stage-2
training the coupled model reproduces it exactly; afterwards |a| tends to
rise once the foci wave appears.

Run: python demos/04_intervention_model.py
"""
import numpy as np
import torch

from causal_ssm.evaluation import latent_norm_curves, latent_onset_fraction
from causal_ssm.fhn import EpisodeSampler, FhnParams, generate_dataset
from causal_ssm.forward import build_forward_operator, observe
from causal_ssm.intervention import InterventionModel, run_filter, train_intervention
from causal_ssm.native import NativeModel, TrainConfig, mean_frame_dice, reconstruct, train_native

torch.set_num_threads(1)
N, T = 16, 30
params, sampler = FhnParams.for_grid(N), EpisodeSampler.for_grid(N, frames=T)
op = build_forward_operator(N, (8, 8))


def split(kind, count, seed):
    ds = generate_dataset(kind, count, params, seed=seed, sampler=sampler)
    x = ds.binarized().astype(np.float32)
    return x, observe(op, x).astype(np.float32), ds.metas


xn, Yn, _ = split("native", 72, 1)
native = NativeModel(grid_size=N, layout=(8, 8), k=5, d_z=12, hidden=64)
train_native(native, xn[:64], Yn[:64], xn[64:], Yn[64:], TrainConfig(epochs=30, lr=1e-3))

xi, Yi, metas = split("intervention", 40, 2)
model = InterventionModel(native, op)
same = np.array_equal(run_filter(model, Yi)["xhat"], reconstruct(native, Yi, batch=32))
print("zero coupling reproduces the native rollout:", same)

before = model.frozen_hash()
train_intervention(model, xi[:32], Yi[:32], xi[32:], Yi[32:], TrainConfig(epochs=10, lr=3e-3))
print("frozen native weights untouched:", model.frozen_hash() == before)

out = run_filter(model, Yi[32:])
print(f"Dice native {mean_frame_dice(reconstruct(native, Yi[32:]) >= 0.5, xi[32:]):.3f}, "
      f"with intervention state {mean_frame_dice(out['xhat'] >= 0.5, xi[32:]):.3f}")
onsets = [m.foci_stim.onset_frame for m in metas[32:]]
_, a_curve = latent_norm_curves(out["z"], out["a"])
print("normalised |a| for episode 0:", np.round(a_curve[0], 2), "onset", onsets[0])
print(f"|a| higher after onset than before in {latent_onset_fraction(out['a'], onsets):.0%} of episodes")
