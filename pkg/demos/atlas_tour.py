"""Walk through the case atlas: gradings, Levi factors and the modules u1, u2."""
# %%
from bdslie import enumerate_cases, exceptional_cases, get_case

# %% the ten exceptional cases
for c in exceptional_cases():
    print(f"{c.id:12s} nu={c.nu}  L={'+'.join(map(str, c.l_type)):8s} "
          f"dim u1={c.dim_u1:3d} dim u2={c.dim_u2:3d}  s={c.s}")

# %% one case up close
c = get_case("E8,D8")
g = c.grading
print("mu (max root, simple-root coords):", g.mu)
print("tau1 highest weight on L:", c.tau1_hw, " dim", c.deg_tau1)
print("K1 =", [str(t) for t in c.k1_type], " K2 =", [str(t) for t in c.k2_type])

# %% classical families grow quickly with rank
by_rank = {}
for c in enumerate_cases(9):
    if not c.is_exceptional:
        by_rank.setdefault(c.rank, []).append(c.id)
for r, ids in sorted(by_rank.items()):
    print(r, len(ids), ids[:4], "..." if len(ids) > 4 else "")
