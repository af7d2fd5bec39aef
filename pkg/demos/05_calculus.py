# Integrals of the probit, moments, and the generating function of P_n.

import numpy as np

from invnorm import calculus

# %% repeated integrals from 0
for x in (0.1, 0.5, 0.9):
    print(f"x={x}:  int S = {calculus.s_antiderivative(1, x):+.12f}   "
          f"int int S = {calculus.s_antiderivative(2, x):+.12f}")

# %% moments int_0^1 S^n: Gaussian moments, next to the printed product
for n in range(0, 9):
    m = calculus.moment(n, intervals=200_000)
    print(f"n={n}: (n-1)!! = {m.closed_form:g}, Simpson = {m.quadrature:.12f}, product = {m.paper_formula:g}")

# %% identities
grid = np.linspace(0.05, 0.95, 5)
print("S(-2 sqrt(pi) S^(-2)) - sqrt(2) S:", [f"{calculus.corollary_identity_check(x):.1e}" for x in grid])
for n in (0, -1, -2):
    print(f"negative-index relation n={n}:", max(calculus.negative_derivative_relation_check(n, x) for x in grid))

# %% partial sums of sum P_k(x) t^k / k!
for k in (5, 10, 15, 20, 25):
    partial, ref = calculus.generating_function_check(1.0, 0.2, k)
    print(f"k_max={k:2d}: |partial - closed form| = {abs(partial - ref):.2e}")
