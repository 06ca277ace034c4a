"""Lowest K-types and the first few levels of the spectrum in the quaternionic cases."""
# %%
from fractions import Fraction

from bdslie import exceptional_cases, ktype_spectrum, sufficient_k_min

for c in exceptional_cases():
    if not c.levi.is_quaternionic:
        continue
    g = c.grading
    zero = (0,) * g.datum.rank
    k = sufficient_k_min(g, zero)
    t = ktype_spectrum(c, zero, k, m_max=2)
    low = t.rows_at(0)[0]
    scale = sum(Fraction(a) * x for a, x in zip(g.nu_star, g.datum.coroot(g.mu)))
    print(f"{c.id:10s} k={k:3d}  lowest K1-type dim {low.dim} (= {k}*{scale} - 1)  "
          f"levels m<=2: {[len(t.rows_at(m)) for m in range(3)]} K-types")
