"""Simulate native and foci episodes on the 32x32 excitable medium and look at them.

Run: python demos/01_excitable_media.py
"""
from causal_ssm.fhn import FhnParams, GridState, fhn_step, generate_dataset


def ascii_frame(frame):
    return "\n".join("".join("#" if v else "." for v in row) for row in frame)


params = FhnParams.for_grid(32)
print(f"grid 32x32, dx = {params.dx:.3f} mm, D = {params.D}, dt = {params.dt}, "
      f"{params.save_every} solver steps per saved frame")

native = generate_dataset("native", 4, params, seed=1)
foci = generate_dataset("intervention", 4, params, seed=2)

for name, ds in (("native", native), ("intervention", foci)):
    xb = ds.binarized()
    area = xb.mean(axis=(2, 3))
    print(f"\n{name}: {len(ds)} episodes, frames {xb.shape[1]}")
    for e, m in enumerate(ds.metas):
        peak = int(area[e].argmax())
        extra = f", foci at {m.foci_stim.center} onset frame {m.foci_stim.onset_frame}" if m.foci_stim else ""
        print(f"  episode {e}: stimulus {m.initial_stim.center}, active area peaks at frame {peak} "
              f"({area[e, peak]:.0%}){extra}")

# one foci episode around its onset: the new wave appears away from the main front
xb = foci.binarized()[0]
t_f = foci.metas[0].foci_stim.onset_frame
for f in (t_f - 1, t_f + 2):
    print(f"\nframe {f}\n{ascii_frame(xb[f])}")

# without a stimulus nothing happens: the resting state is an exact equilibrium
st = GridState.rest(32)
for i in range(200):
    st = fhn_step(st, params, 0.0, step=i)
print("\nresting medium after 200 steps is exactly zero:", not st.v.any() and not st.w.any())
