"""From MC-dropout variance to per-image training weights.

A small network is trained for a few hundred iterations on four labeled
volumes, then run with dropout on eight unlabeled ones. Images whose
prediction is shaky relative to the predicted lesion volume get down-weighted.
"""
import time
from pathlib import Path
import tempfile

import numpy as np
import torch

from crawlseg.config import ExperimentConfig
from crawlseg.icrawl import Trainer, load_cases
from crawlseg.metrics import dice
from crawlseg.pfnet import NetworkConfig, build_network
from crawlseg.synth import SynthSpec, generate_dataset
from crawlseg.uncertainty import binarize, mc_dropout_predict
from crawlseg.weighting import image_weights

torch.set_num_threads(1)
tmp = Path(tempfile.mkdtemp())
index = generate_dataset(SynthSpec(shape=(16, 64, 64)), 4, 8, 0, tmp, n_valid=2)

cfg = ExperimentConfig.from_dict({
    "network": {"base_channels": 8},
    "train": {"patch": [16, 64, 64], "eval_every": 50, "patience": 100},
})
net = build_network(cfg.network, seed=0)
labeled, valid = load_cases(index.labeled, cfg), load_cases(index.valid, cfg)
t = time.perf_counter()
Trainer(net, labeled, valid, cfg, seed=0, max_iterations=200).run(log=print)
print(f"trained in {time.perf_counter() - t:.0f}s")

unl = load_cases([(p, index.withheld[p]) for p in index.unlabeled], cfg)
variances, labels = [], []
for i, c in enumerate(unl):
    p, v = mc_dropout_predict(net, c.image, R=10, seed=i, patch=(16, 64, 64))
    variances.append(v)
    labels.append(binarize(p))
raw, norm, w = image_weights(variances, labels)
print("image  pseudo dice  sum(var)/|fg|   v'     weight")
for c, lab, r, n, wi in sorted(zip(unl, labels, raw, norm, w), key=lambda x: x[4]):
    print(f"{c.name:<14} {dice(lab, c.label):6.3f}   {r:10.4f}   {n:6.3f}  {wi:6.3f}")
print("correlation(weight, pseudo dice) = %.2f"
      % np.corrcoef(w, [dice(l, c.label) for l, c in zip(labels, unl)])[0, 1])
