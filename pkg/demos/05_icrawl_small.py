"""A complete (small) self-training run through the command line interface.

Everything the real benchmark does happens here too: synthetic data, round-0
pretraining, K rounds of MC-dropout pseudo labeling with refinement and
weighting, per-round metrics and plots. Only the sizes are cut down so it
finishes in a few minutes. At this size the Dice values show only that the
plumbing works; 06_benchmark.py is the run whose numbers mean something.
"""
import json
import sys
import tempfile
from pathlib import Path

import yaml

from crawlseg.cli import run_cli

work = Path(sys.argv[1] if len(sys.argv) > 1 else tempfile.mkdtemp())
cfg = {
    "dataset": str(work / "data" / "dataset.json"),
    "network": {"base_channels": 4},
    "synth": {"shape": [16, 48, 48], "lesion_radius_mm": [1.5, 3.0]},
    "train": {"patch": [16, 48, 48], "pretrain_iterations": 60, "round_iterations": 30,
              "eval_every": 20, "mc_samples": 4},
    "crf": {"w1": 5.0, "w2": 0.0, "sigma_beta": 5.0},
}
work.mkdir(parents=True, exist_ok=True)
(work / "small.yaml").write_text(yaml.safe_dump(cfg))
conf = str(work / "small.yaml")

assert run_cli(["synth", "--config", conf, "--out", str(work / "data"),
                "--n-labeled", "4", "--n-unlabeled", "8", "--n-valid", "2", "--n-test", "4"]) == 0
assert run_cli(["icrawl", "--config", conf, "--out", str(work / "run")]) == 0

report = json.loads((work / "run" / "report.json").read_text())
for r in report["rounds"]:
    pl = r.get("pseudo_label", {})
    print(f"round {r['round']}: test dice {r['test']['dice']:.3f}"
          + (f", pseudo labels {pl['provisional_dice']:.3f} -> {pl['refined_dice']:.3f}"
             f" (mean weight {pl['mean_weight']:.2f})" if pl else ""))
print("plots:", sorted(p.name for p in (work / "run").glob("*.png")))
