"""Write src/bdslie/data/golden.tsv from hand-transcribed values.

The classical rows come from the family closed forms as printed in the
source (including any that look wrong; the corpus records what is claimed,
the code is what gets tested).  Run from the repository root:

    python3 tools/make_golden.py [max_rank]
"""
import sys
from pathlib import Path

COLUMNS = ["case_id", "g_type", "nu", "k1_type", "k2_type", "l_type", "dim_u1", "dim_u2",
           "s", "deg_tau1", "self_dual", "bilinear", "inv_degree", "source"]

# exceptional rows: (id, g, nu, k1, k2, l, u1, u2, deg, self_dual, bilinear, inv)
EXCEPTIONAL = [
    ("G2,A1A1", "G2", 2, "A1", "A1", "A1", 4, 1, 4, "yes", "antisymmetric", "4"),
    ("F4,A1C3", "F4", 1, "A1", "C3", "C3", 14, 1, 14, "yes", "antisymmetric", "4"),
    ("F4,B4", "F4", 4, "B4", "-", "B3", 8, 7, 8, "yes", "symmetric", "2"),
    ("E6,A1A5,1", "E6", 3, "A5", "A1", "A1A4", 20, 5, 20, "no", "none", "none"),
    ("E6,A1A5,2", "E6", 2, "A1", "A5", "A5", 20, 1, 20, "yes", "antisymmetric", "4"),
    ("E7,A1D6,1", "E7", 1, "A1", "D6", "D6", 32, 1, 32, "yes", "antisymmetric", "4"),
    ("E7,A1D6,2", "E7", 6, "D6", "A1", "A1D5", 16, 10, 16, "no", "none", "none"),
    ("E7,A7", "E7", 2, "A7", "-", "A6", 35, 7, 35, "no", "none", "7"),
    ("E8,D8", "E8", 1, "D8", "-", "D7", 64, 14, 64, "no", "none", "8"),
    ("E8,A1E7", "E8", 8, "A1", "E7", "E7", 56, 1, 56, "yes", "antisymmetric", "4"),
]


def so(n):
    """Simple factors of so(n) as type strings (n >= 3)."""
    if n == 3:
        return ["A1"]
    if n == 4:
        return ["A1", "A1"]
    if n == 5:
        return ["B2"]
    if n == 6:
        return ["A3"]
    return [f"B{(n - 1) // 2}"] if n % 2 else [f"D{n // 2}"]


def sp(n):
    if n == 1:
        return ["A1"]
    if n == 2:
        return ["B2"]
    return [f"C{n}"]


def su(n):
    return [f"A{n - 1}"] if n >= 2 else []


def fmt(types):
    types = sorted(types, key=lambda t: (t[0], int(t[1:])))
    return "".join(types) or "-"


def classical_rows(max_rank):
    rows = []
    for ell in range(2, max_rank + 1):
        # type B
        for p in range(2, ell + 1):
            name = f"Spin({2 * p},{2 * ell - 2 * p + 1})"
            r = 2 * ell - 2 * p + 1
            if ell == 2:
                k1, k2, l, u2, u1, src = sp(1), sp(1), sp(1), 1, 2, "Spin(4,1) entry"
            elif p == 2:
                k1, k2, l = sp(1), sp(1) + so(2 * ell - 3), sp(1) + so(2 * ell - 3)
                u2, u1, src = 1, (2 * ell - 3) * (2 * ell - 4), "Spin(4,2l-3) family closed form"
            elif p < ell:
                k1, k2, l = so(2 * p), so(r), su(p) + so(r)
                u2, u1, src = p * (p - 1) // 2, p * r, "Spin(2p,2l-2p+1) family closed form"
            else:
                k1, k2, l = so(2 * ell), [], su(ell)
                u2, u1, src = ell * (ell - 1) // 2, ell, "Spin(2l,1) family closed form"
            inv = str(2 * p) if p <= r else "none"
            rows.append((name, f"B{ell}", p, fmt(k1), fmt(k2), fmt(l), u1, u2, u2, u1, "*", "*", inv, src))
    for ell in range(3, max_rank + 1):
        for p in range(1, ell):
            q = ell - p
            name = f"Sp({p},{q})"
            if p == 1:
                k1, k2, l, u2, u1, src = sp(1), sp(q), sp(q), 1, 2 * ell, "Sp(1,l-1) family closed form"
            else:
                k1, k2, l = sp(p), sp(q), su(p) + sp(q)
                u2, u1, src = (p - 1) * (p + 2) // 2, 2 * p * q, "Sp(p,l-p) family closed form"
            inv = str(p) if p % 2 == 0 and p <= 2 * q else "none"
            rows.append((name, f"C{ell}", p, fmt(k1), fmt(k2), fmt(l), u1, u2, u2, u1, "*", "*", inv, src))
    for ell in range(4, max_rank + 1):
        for p in range(2, ell - 1):
            r = 2 * ell - 2 * p
            if ell == 4:
                name = "SO(4,4)"
                k1, k2, l, u2, u1, src = sp(1), sp(1) * 3, sp(1) * 3, 1, 8, "SO(4,4) entry"
            elif p == 2:
                name = f"Spin(4,{r})"
                k1, k2, l = sp(1), sp(1) + so(r), sp(1) + so(r)
                u2, u1, src = 1, 4 * (ell - 2), "Spin(4,2l-4) family closed form"
            else:
                name = f"Spin({2 * p},{r})"
                k1, k2, l = so(2 * p), so(r), su(p) + so(r)
                u2, u1 = p * (p - 1) // 2, 2 * p * (ell - p)
                src = ("Spin(2p,2l-2p) family closed form" if p < ell - 2 else
                       "Spin(2p,2l-2p) family closed form applied at p = l-2 (not listed in the source)")
            inv = str(2 * p) if p <= r else "none"
            rows.append((name, f"D{ell}", p, fmt(k1), fmt(k2), fmt(l), u1, u2, u2, u1, "*", "*", inv, src))
    return rows


def main(max_rank=12):
    out = Path(__file__).resolve().parent.parent / "src" / "bdslie" / "data" / "golden.tsv"
    lines = ["\t".join(COLUMNS)]
    for row in EXCEPTIONAL:
        cid, g, nu, k1, k2, l, u1, u2, deg, sd, bil, inv = row
        lines.append("\t".join(map(str, (cid, g, nu, k1, k2, l, u1, u2, u2, deg, sd, bil, inv,
                                         "exceptional case notes and invariant table"))))
    for row in classical_rows(max_rank):
        lines.append("\t".join(map(str, row)))
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines) - 1} rows to {out}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 12)
