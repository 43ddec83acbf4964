"""Draw a few synthetic volumes and look at what the network will be up against.

Lesions are warped unions of ellipsoids; the thin tubes share the lesion
intensity distribution but are never labeled, so intensity alone cannot
separate them. Slices are 4x thicker than the in-plane spacing.
"""
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
from scipy import ndimage

from crawlseg.synth import SynthSpec, generate_case

spec = SynthSpec()
print("shape", spec.shape, "spacing (mm)", spec.spacing)

fig, axes = plt.subplots(2, 4, figsize=(12, 6))
for i in range(4):
    vol, lab = generate_case(spec, i)
    m = lab.data.astype(bool)
    _, n = ndimage.label(m)
    contrast = vol.data[m].mean() - vol.data[~m].mean()
    print(f"case {i}: {n} lesion(s), {m.sum()} voxels "
          f"({m.sum() * np.prod(spec.spacing):.0f} mm^3), contrast {contrast:.0f} HU")

    z = int(np.argmax(m.sum(axis=(1, 2))))  # slice with most lesion
    axes[0, i].imshow(vol.data[z], cmap="gray", vmin=-1000, vmax=0)
    axes[0, i].set_title(f"case {i}, slice {z}")
    axes[1, i].imshow(vol.data[z], cmap="gray", vmin=-1000, vmax=0)
    axes[1, i].contour(m[z], levels=[0.5], colors="r", linewidths=0.8)
for a in axes.ravel():
    a.axis("off")
out = sys.argv[1] if len(sys.argv) > 1 else "synthetic_cases.png"
fig.tight_layout()
fig.savefig(out, dpi=80)
print("wrote", out)
