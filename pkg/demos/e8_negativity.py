"""Negativity thresholds for E8,D8, symbolically and on a few weights."""
# %%
from bdslie import bound_forms, get_case, negativity, rho_parts, sufficient_k_min

g = get_case("E8,D8").grading
r = rho_parts(g)
print("rho_g in psi coordinates:", r.psi(g, "rho_g"))
print("rho_k in psi coordinates:", r.psi(g, "rho_k"))

# %% the affine bounds in the labels n_j of gamma0
for name, form in bound_forms(g).items():
    print(f"{name:20s} {form}")

# %% evaluate on gamma = gamma0 - k nu* around the threshold
gamma0 = (0, 1, 0, 0, 0, 0, 1, 0)
k0 = sufficient_k_min(g, gamma0)
for k in (k0 - 1, k0, k0 + 1):
    gamma = tuple(-k if j == g.i else x for j, x in enumerate(gamma0))
    rep = negativity(g, gamma)
    print(k, "sufficient" if rep.sufficient else "not sufficient",
          "| scan agrees" if rep.agrees else "| SCAN DISAGREES")
