"""Look inside a trained model: translations, edits past the last domain, and center geometry.

Run: python3 demos/04_trained_model.py [run_dir] [out_dir]

run_dir defaults to runs/acceptance/seed0, produced by the acceptance tests or by
`latentstyle train --seed 0 --out runs/acceptance/seed0`.
"""

import sys
from pathlib import Path

import numpy as np

from latentstyle import autograd as ag
from latentstyle.data import UnmeasurableError, oracle_attribute, render
from latentstyle.evaluation import beyond_limit, center_geometry, cycle_residuals, domain_conformity, write_grid
from latentstyle.networks import edit_code
from latentstyle.training import checkpoint_load

run = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/acceptance/seed0")
out = Path(sys.argv[2] if len(sys.argv) > 2 else "demo_out") / "trained"
out.mkdir(parents=True, exist_ok=True)
state = checkpoint_load(run / "checkpoint")
model, data = state.bundle, state.config.dataset
N = data.num_domains
print(f"loaded {run} at iteration {state.iteration}")


def read(img):
    try:
        return f"{oracle_attribute(img, data, clamp=False):+.3f}"
    except UnmeasurableError:
        return "  n/a "


rng = np.random.default_rng(7)
sources = [render(data, a, int(s)) for a, s in zip((0.1, 0.5, 0.9), rng.integers(2**31, 2**32, 3))]
with ag.no_grad():
    centers = model.centers().data

    # label-based translation: one row per source, one column per target domain
    noise = rng.standard_normal((1, model.config.noise_dim))
    rows = []
    for x in sources:
        styles = model.diversify(centers, np.repeat(noise, N, axis=0)).data
        rows.append(model.generate(np.repeat(x[None], N, axis=0), styles).data)
    write_grid(out / "translate.ppm", np.array(rows))
    print("\noracle reading per target domain (rows: sources at a = 0.1, 0.5, 0.9)")
    for r in rows:
        print("  " + "  ".join(read(img) for img in r))

    # editing past the oldest domain: O applied k times to c_N
    print("\nolder edits from the last domain, k = 0..5")
    for x in sources:
        traj = [edit_code(model, centers[N - 1:N], "older", k) for k in range(6)]
        imgs = [model.generate(x[None], model.diversify(c, noise)).data[0] for c in traj]
        print("  " + "  ".join(read(img) for img in imgs))
    print("younger edits from the first domain, k = 0..5")
    for x in sources:
        traj = [edit_code(model, centers[0:1], "younger", k) for k in range(6)]
        imgs = [model.generate(x[None], model.diversify(c, noise)).data[0] for c in traj]
        print("  " + "  ".join(read(img) for img in imgs))

geo = center_geometry(model)
print(f"\ncenters on their principal axis: {np.round(geo.projection, 3).tolist()}  (spearman {geo.statistic:.2f})")
print(f"cycle residual (normalized): {cycle_residuals(model)['normalized']:.4f}")
conf = domain_conformity(model, data, samples_per_domain=30)
print(f"conformity per domain: {np.round(conf.rates, 2).tolist()}")
for direction in ("older", "younger"):
    try:
        print(f"{direction} trajectory (mean of 64): {np.round(beyond_limit(model, data, 3, direction), 3).tolist()}")
    except UnmeasurableError as err:
        print(f"{direction} trajectory: unmeasurable ({err})")
print(f"\nimages under {out}/")
