# Closed-form Lambert-W approximations g0..g3 and how far they are from S.

import tempfile
from pathlib import Path

import numpy as np

from invnorm import approx, gauss

# %% a few values
for x in (0.001, 0.025, 0.3, 0.5, 0.975):
    vals = "  ".join(f"{k}={approx.approx_eval(k, x):+.5f}" for k in approx.KINDS)
    print(f"x={x:<6} S={gauss.probit_reference(x).value:+.5f}  {vals}")

# %% the uniform error scan
scan = approx.error_scan(9999, 0.001, 0.999)
for k in approx.KINDS:
    print(f"{k}: max |g - S| = {scan.max_error[k]:.5f} at x = {scan.argmax[k]:.4f}, "
          f"max |N(g) - x| = {scan.max_forward[k]:.5f}")

# %% the tails
tail = approx.tail_scan()
print("tail grid, max e3:", tail.max_error["g3"])

# %% relative error of g0 keeps shrinking toward x = 0
x = 10.0 ** -np.arange(2, 11)
rel = np.abs(approx.approx_eval("g0", x) / gauss.probit_reference(x).value - 1)
print(np.array2string(rel, precision=3))

# %% CSV output
with tempfile.TemporaryDirectory() as d:
    path = Path(d) / "scan.csv"
    approx.write_scan_csv(approx.error_scan(11, 0.05, 0.95).rows, path)
    print(path.read_text())
