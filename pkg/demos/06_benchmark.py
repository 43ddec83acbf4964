"""Synthetic self-training benchmark: round-0 baseline vs. IT only vs. IT + CAR + IW.

For every seed a fresh dataset is drawn (8 labeled, 32 unlabeled, 8 validation,
10 test volumes of 32x96x96) and two arms are trained:

    icrawl    MC-dropout inference, confidence-aware refinement, image weights
    it_only   deterministic inference, argmax pseudo labels, unit weights

Both arms share round 0. Pretraining depends only on the labeled images, the
network and the seed, so the it_only arm starts from a copy of the icrawl
round-0 directory instead of repeating it.

The run resumes from whatever is already on disk, so it can be interrupted and
restarted. On one CPU core a seed takes roughly an hour and a half.

    python3 demos/06_benchmark.py --out runs/benchmark --seeds 0 1 2
"""
import argparse
import json
import shutil
import time
from pathlib import Path

import numpy as np
import torch

from crawlseg.cli import bundled_config
from crawlseg.config import load_config
from crawlseg.icrawl import read_curves, run_icrawl
from crawlseg.synth import SynthSpec, generate_dataset

ARMS = {
    "icrawl": {},
    "it_only": {"refine": "none", "weighting": False, "uncertainty": False},
}


def log_to(path):
    t0 = time.time()

    def log(msg):
        line = f"[{time.time() - t0:8.0f}s] {msg}"
        print(line, flush=True)
        with open(path, "a") as fh:
            fh.write(line + "\n")
    return log


def test_dice(run_dir):
    rows = read_curves(run_dir / "metrics.csv")
    return {r["round"]: r["dice"] for r in rows if r["split"] == "test"}


def run_seed(seed, base_cfg, out):
    root = out / f"seed{seed}"
    data = root / "data"
    if not (data / "dataset.json").exists():
        generate_dataset(SynthSpec(seed=seed), 8, 32, 10, data, n_valid=8)
    results = {}
    for arm, train in ARMS.items():
        cfg = base_cfg.replace(seed=seed, train=train)
        run_dir = root / arm
        if arm != "icrawl" and not (run_dir / "round_0" / "state.json").exists():
            shutil.copytree(root / "icrawl" / "round_0", run_dir / "round_0", dirs_exist_ok=True)
        run_icrawl(data / "dataset.json", cfg, run_dir, log=log_to(root / f"{arm}.log"))
        results[arm] = test_dice(run_dir)
    return results


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="runs/benchmark")
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--config", default=str(bundled_config("desk")))
    args = ap.parse_args()
    torch.set_num_threads(1)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    cfg = load_config(args.config)
    per_seed = {}
    for seed in args.seeds:
        per_seed[seed] = run_seed(seed, cfg, out)
        print(f"seed {seed}: " + json.dumps(per_seed[seed]), flush=True)

    K = cfg.train.rounds
    mean = lambda arm, k: float(np.mean([per_seed[s][arm][k] for s in args.seeds]))
    summary = {
        "seeds": args.seeds,
        "rounds": K,
        "test_dice": {str(s): {arm: {str(k): v for k, v in d.items()} for arm, d in r.items()}
                      for s, r in per_seed.items()},
        "mean_test_dice": {
            "round_0": mean("icrawl", 0),
            "it_only": mean("it_only", K),
            "icrawl": mean("icrawl", K),
        },
    }
    (out / "summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True))
    m = summary["mean_test_dice"]
    print(f"round 0 {100 * m['round_0']:.2f} | IT only {100 * m['it_only']:.2f} | "
          f"IT + CAR + IW {100 * m['icrawl']:.2f}")


if __name__ == "__main__":
    main()
