"""A few minutes of training on a shrunken problem, driven through the CLI.

Run: python3 demos/03_short_training.py [out_dir]

16x16 disks, narrow networks, 400 iterations. Far too short to meet the
acceptance targets, but enough to watch the losses move and to exercise
train -> translate -> edit -> eval -> embed end to end.
"""

import csv
import json
import sys
from pathlib import Path

from latentstyle import cli
from latentstyle.data import DatasetConfig, render, write_ppm

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out") / "short"
out.mkdir(parents=True, exist_ok=True)

config = {
    "train.iterations": 400, "train.log_interval": 50, "train.checkpoint_interval": 200,
    "model.image_size": 16, "model.hidden_dim": 32, "model.editor_hidden": 32,
    "model.g_channels": [8, 16, 16], "model.d_channels": [8, 16, 16, 16],
    "data.image_size": 16, "data.r_min": 2.0, "data.r_max": 6.0, "data.jitter": 1.0,
}
cfg_path = out / "config.json"
cfg_path.write_text(json.dumps(config, indent=1))

run = out / "run"
assert cli.main(["train", "--config", str(cfg_path), "--out", str(run)]) == 0
with open(run / "metrics.csv") as f:
    rows = list(csv.DictReader(f))
print("iteration   d_loss   g_adv    cdc      tam      ccc")
for r in rows:
    print(f"{r['iteration']:>9}  " + "  ".join(f"{float(r[k]):7.3f}" for k in ("d_loss", "g_adv", "cdc", "tam", "ccc")))

data = DatasetConfig(image_size=16, r_min=2.0, r_max=6.0, jitter=1.0)
src = out / "source.ppm"
write_ppm(src, render(data, 0.4, 12345))

cli.main(["translate", "--checkpoint", str(run), "--source", str(src), "--reference", str(src),
          "--out", str(out / "translate")])
cli.main(["edit", "--checkpoint", str(run), "--source", str(src), "--direction", "older", "--steps", "5",
          "--domain", "6", "--out", str(out / "edit")])
cli.main(["eval", "--checkpoint", str(run), "--out", str(out / "eval"), "--eval.samples_per_domain", "20"])
cli.main(["embed", "--checkpoint", str(run), "--out", str(out / "embed"), "--noises-per-domain", "200"])

print("\neval.csv (first rows):")
print("\n".join((out / "eval" / "eval.csv").read_text().splitlines()[:12]))
print(f"\nimages and CSVs under {out}/")
