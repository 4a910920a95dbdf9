"""
How close to the upper bound?
=============================

The construction meets the partial spread bound whenever k exceeds the number
of lines in GF(q)^r.  Elsewhere the bound comes from a square-root formula and
the gap can be positive.
"""

from flagforge.analysis import cdc_upper_bound, gaussian_binomial_1, odfc_size_formula

print(f"{'q':>2} {'n':>3} {'k':>2} {'r':>2} {'size':>8} {'bound':>8}  exact")
for q in (2, 3):
    for k in (2, 3, 4):
        for n in range(2 * k, 2 * k + k + 1):
            r = n % k
            size = odfc_size_formula(n, k, q)
            b = cdc_upper_bound(n, k, q)
            flag = "yes" if b.exact else f"no (k <= {gaussian_binomial_1(r, q)})"
            print(f"{q:>2} {n:>3} {k:>2} {r:>2} {size:>8} {b.bound:>8}  {flag}")
