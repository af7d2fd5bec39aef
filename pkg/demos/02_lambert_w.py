# Lambert W on the principal branch: Halley iteration, series and derivative.

import math

import numpy as np

from invnorm.lambertw import lambert_w0, lambert_w0_derivative, lambert_w0_log, lambert_w0_series

# %% the omega constant, W(1)
r = lambert_w0(1.0)
print(f"W(1) = {r.value!r} after {r.iterations} Halley steps, residual {r.residual:.1e}")

# %% a log grid, including huge arguments
x = np.logspace(-3, 12, 6)
for xi, wi in zip(x, lambert_w0(x).value):
    print(f"W({xi:9.3g}) = {wi:.15f}")
print("W(exp(5000)) =", lambert_w0_log(5000.0))

# %% series near zero converges for |x| < 1/e
for terms in (5, 10, 20, 40):
    print(f"{terms:2d} terms: {lambert_w0_series(0.2, terms):.16f}")
print(f"  Halley: {lambert_w0(0.2).value:.16f}")

# %% derivative W / (x (1 + W))
print("W'(e) =", lambert_w0_derivative(math.e), " 1/(2e) =", 1 / (2 * math.e))
