# Three ways to evaluate the probit: the bracketed Newton reference, the
# central Taylor series, and the hybrid (series in the middle, g2 seed plus
# two or three corrected Newton steps in the tails).

import numpy as np

from invnorm import gauss, series

p = np.array([1e-300, 1e-12, 1e-4, 0.025, 0.3, 0.5, 0.6, 0.975, 1 - 1e-12])

# %% side by side
ref = gauss.probit_reference(p)
hyb = series.probit_hybrid(p)
steps = series.hybrid_newton_steps(p)
print(f"{'p':>10} {'reference':>22} {'hybrid':>22} steps")
for row in zip(p, ref.value, hyb, steps):
    print(f"{row[0]:10.3g} {row[1]:22.16g} {row[2]:22.16g} {row[3]:5d}")

# %% the series alone, and how many terms it used
for x in (0.55, 0.6, 0.7, 0.79):
    v = series.s_series(x)
    print(f"S({x}) = {v.value!r}  ({v.terms_used} terms, last {v.last_term:.1e})")

# %% round trip in probability space
grid = np.linspace(0, 1, 100001)[1:-1]
err = np.abs(gauss.normal_cdf(series.probit_hybrid(grid)) - grid)
print("max |N(S(p)) - p| / max(p, 1-p):", (err / np.maximum(grid, 1 - grid)).max())
