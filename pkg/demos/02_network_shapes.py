"""PF-Net at a glance: scale shapes, channel widths and one forward pass.

The first two scales pool only in-plane, which is what equalizes the physical
receptive field of anisotropic CT (0.3 mm in-plane, 1.2 mm between slices).
"""
import time

import torch

from crawlseg.pfnet import (NetworkConfig, build_network, compute_scale_shapes,
                            count_parameters, decoder_in_channels, predict_logits, scale_spacings)

torch.set_num_threads(1)
cfg = NetworkConfig()
patch = (48, 192, 192)

print("scale  kind  shape            spacing (mm)          enc ch  dec in ch")
shapes = compute_scale_shapes(patch, cfg.scales, cfg.num_2d)
spacings = scale_spacings((1.2, 0.3, 0.3), cfg.scales, cfg.num_2d)
for s in range(1, cfg.scales + 1):
    dec = decoder_in_channels(cfg, s) if s < cfg.scales else "-"
    sp = "(" + ", ".join(f"{x:.1f}" for x in spacings[s - 1]) + ")"
    print(f"{s:>5}  {'2D' if cfg.is_2d(s) else '3D':>4}  {str(shapes[s - 1]):<16} {sp:<20}  "
          f"{cfg.channels(s):>6}  {dec:>9}")

for dense in (True, False):
    net = build_network(NetworkConfig(dense_attention=dense), seed=0)
    print(f"dense attention={dense}: {count_parameters(net):,} parameters")

net = build_network(cfg, seed=0)
t = time.perf_counter()
logits = predict_logits(net, torch.randn(1, 1, *patch))
print(f"forward pass {time.perf_counter() - t:.1f}s")
for s, lg in enumerate(logits, 1):
    print(f"  attention map {s}: {tuple(lg.shape)}")
