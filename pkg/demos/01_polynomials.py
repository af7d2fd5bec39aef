# The polynomials P_n and the integers C_n behind every derivative of the probit.
#
# S^(n)(p) = P_{n-1}(S) * S'(p)^n, and at p = 1/2 this collapses to
# (2 pi)^(n/2) * C_n with C_n = P_{n-1}(0).

from invnorm import nested, polys

# %% the recurrence P_n = P'_{n-1} + n x P_{n-1}
for n, p in enumerate(polys.poly_sequence(6)):
    print(f"P_{n}(x) = {p}")

# %% three more ways to get the same coefficients
n = 7
print("recurrence   ", list(polys.poly_sequence(n)[n].coeffs))
print("matrices     ", polys.coeffs_via_matrices(n))
print("triple sum   ", list(polys.poly_next_triple_sum(polys.poly_sequence(n - 1)).coeffs))
print("nested deriv ", list(nested.pn_via_nested(n).coeffs))

# %% C_n from P_{n-1}(0), and independently from the derivative recurrence
a = polys.series_coeff_c(41)
b = polys.c_via_derivative_recurrence(41)
for k, c in a.odd_items():
    print(f"C_{k:<2d} = {c}")
print("routes agree:", a == b)
