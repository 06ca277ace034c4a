"""Relative invariants of (L, u1): plethysm scan against the classical closed forms."""
# %%
from bdslie import classical_cases, exceptional_cases, relative_invariant_report
from bdslie.invariants import classical_invariant_degree, first_invariant_degree

for c in exceptional_cases():
    rep = relative_invariant_report(c, 8, check_closed_form=False)
    print(f"{c.id:12s} deg tau1={rep.deg_tau1:3d} self-dual={rep.self_dual!s:5s} "
          f"form={rep.bilinear:13s} invariant: {rep.verdict}")

# %% classical: where the scan and the closed form part ways
for c in classical_cases(7):
    closed = classical_invariant_degree(c)
    found = first_invariant_degree(c, max(8, closed or 0))
    if found != closed:
        print(f"{c.id}: closed form {closed}, scan {found}")
