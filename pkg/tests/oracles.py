"""Brute-force reference implementations, independent of the package.

Nothing here imports bdslie.  Cartan matrices are typed in by hand,
roots come from closing the simple roots under reflections, weight
multiplicities from Kostant's formula, and decompositions from explicit
weight multisets peeled from the top.  Slow, but obviously correct.
"""
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

# Kac convention C[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering
CARTAN = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "B3": ((2, -1, 0), (-1, 2, -1), (0, -2, 2)),
    "C3": ((2, -1, 0), (-1, 2, -2), (0, -1, 2)),
    "G2": ((2, -3), (-1, 2)),
    "F4": ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -2, 2, -1), (0, 0, -1, 2)),
}

RANK_LE_3 = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def labels_of_root(C, r):
    """Dynkin labels of a root given in simple-root coordinates."""
    n = len(C)
    return tuple(sum(C[i][j] * r[j] for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def roots(C):
    """All roots by reflection closure, in simple-root coordinates."""
    n = len(C)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    todo = list(simple)
    while todo:
        a = todo.pop()
        lab = labels_of_root(C, a)
        for i in range(n):
            b = tuple(x - (lab[i] if j == i else 0) for j, x in enumerate(a))
            if b not in seen:
                seen.add(b)
                todo.append(b)
    return frozenset(seen)


def positive_roots(C):
    return sorted(r for r in roots(C) if min(r) >= 0)


def _solve(C, lab):
    """Simple-root coordinates (Fractions) of a weight given by labels: C x = lab."""
    n = len(C)
    M = [[Fraction(C[i][j]) for j in range(n)] + [Fraction(lab[i])] for i in range(n)]
    for c in range(n):
        p = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return tuple(M[i][n] for i in range(n))


@lru_cache(maxsize=None)
def weyl_group(C):
    """Weyl group elements as matrices acting on label vectors."""
    n = len(C)
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    def refl(i):
        # s_i(w) = w - w_i alpha_i, alpha_i has labels C[.][i]
        return tuple(tuple(int(r == c) - (C[r][i] if c == i else 0) for c in range(n)) for r in range(n))

    gens = [refl(i) for i in range(n)]

    def mul(A, B):
        return tuple(tuple(sum(A[r][k] * B[k][c] for k in range(n)) for c in range(n)) for r in range(n))

    seen = {ident}
    todo = [ident]
    while todo:
        g = todo.pop()
        for s in gens:
            h = mul(s, g)
            if h not in seen:
                seen.add(h)
                todo.append(h)
    return tuple(seen)


def _det(M):
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        d *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return int(d)


def _apply(g, w):
    return tuple(sum(g[r][c] * w[c] for c in range(len(w))) for r in range(len(w)))


@lru_cache(maxsize=None)
def _kostant_p(pos, beta):
    """Number of ways to write beta as an N-combination of ``pos`` (simple-root coords)."""
    if not pos:
        return int(not any(beta))
    if min(beta) < 0:
        return 0
    a, rest = pos[0], pos[1:]
    total = 0
    b = beta
    while min(b) >= 0:
        total += _kostant_p(rest, b)
        b = _sub(b, a)
    return total


def kostant_multiplicity(C, hw, mu):
    """Multiplicity of weight ``mu`` in V(hw) (labels), by Kostant's formula."""
    n = len(C)
    pos = tuple(positive_roots(C))
    rho = (1,) * n
    target = _add(mu, rho)
    total = 0
    for g in weyl_group(C):
        v = _sub(_apply(g, _add(hw, rho)), target)
        x = _solve(C, v)
        if any(t.denominator != 1 or t < 0 for t in x):
            continue
        total += _det(g) * _kostant_p(pos, tuple(int(t) for t in x))
    return total


def is_dominant(w):
    return min(w) >= 0


def weyl_dimension(C, hw):
    n = len(C)
    # <lambda+rho, alpha^vee> over <rho, alpha^vee>; alpha^vee via labels of coroot = symmetrized
    num = den = Fraction(1)
    Ct = tuple(zip(*C))  # transpose = Cartan matrix of the dual system
    for a in positive_roots(Ct):  # coroots, in simple-coroot coords
        num *= sum((hw[i] + 1) * a[i] for i in range(n))
        den *= sum(a[i] for i in range(n))
    q = num / den
    assert q.denominator == 1
    return int(q)


def orbit(C, w):
    return {_apply(g, w) for g in weyl_group(C)}


def dominant_weights_below(C, hw):
    """Dominant weights mu <= hw (hw - mu in the positive root cone)."""
    pos = positive_roots(C)
    out = {tuple(hw)}
    todo = [tuple(hw)]
    while todo:
        w = todo.pop()
        for a in pos:
            v = _sub(w, labels_of_root(C, a))
            if is_dominant(v) and v not in out:
                out.add(v)
                todo.append(v)
    return out


def character(C, hw) -> Counter:
    """Full weight multiset of V(hw)."""
    return Counter(_character(C, tuple(hw)))


@lru_cache(maxsize=4096)
def _character(C, hw):
    out = Counter()
    for mu in dominant_weights_below(C, hw):
        m = kostant_multiplicity(C, hw, mu)
        if m:
            for w in orbit(C, mu):
                out[w] = m
    return dict(out)


def _height_key(C, w):
    return sum(_solve(C, w))


def peel(C, weights: Counter) -> dict:
    """Decompose a W-invariant weight multiset into irreducibles."""
    rest = Counter({w: m for w, m in weights.items() if m})
    out = {}
    while rest:
        top = max((w for w in rest if is_dominant(w)), key=lambda w: _height_key(C, w))
        m = rest[top]
        assert m > 0, "weight multiset is not a character"
        out[top] = m
        for w, k in character(C, top).items():
            rest[w] -= m * k
            if rest[w] == 0:
                del rest[w]
    return out


def tensor_oracle(C, a, b) -> dict:
    ca, cb = character(C, a), character(C, b)
    acc = Counter()
    for w, m in ca.items():
        for v, k in cb.items():
            acc[_add(w, v)] += m * k
    return peel(C, acc)


def _weight_list(C, hw):
    return [w for w, m in sorted(character(C, hw).items()) for _ in range(m)]


def sym_oracle(C, hw, m) -> dict:
    ws = _weight_list(C, hw)
    acc = Counter()
    for combo in combinations_with_replacement(range(len(ws)), m):
        s = (0,) * len(C)
        for i in combo:
            s = _add(s, ws[i])
        acc[s] += 1
    return peel(C, acc)


def alt_oracle(C, hw, m) -> dict:
    ws = _weight_list(C, hw)
    acc = Counter()
    for combo in combinations(range(len(ws)), m):
        s = (0,) * len(C)
        for i in combo:
            s = _add(s, ws[i])
        acc[s] += 1
    return peel(C, acc) if acc else {}


def graded_root_counts(C, nu):
    """|{alpha > 0 : n_nu(alpha) = i}| for each i (nu is 0-based)."""
    out = Counter()
    for r in positive_roots(C):
        out[r[nu]] += 1
    return dict(out)


def cartan(family, n):
    """Cartan matrices for the infinite families and E, built edge by edge."""
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    edges = []
    if family in "ABC":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif family == "E":
        edges = [(0, 2), (2, 3), (1, 3)] + [(i, i + 1) for i in range(3, n - 1)]
    for i, j in edges:
        C[i][j] = C[j][i] = -1
    if family == "B":
        C[n - 1][n - 2] = -2  # alpha_n short
    if family == "C":
        C[n - 2][n - 1] = -2  # alpha_n long
    if family in "FG":
        return CARTAN[f"{family}{n}"]
    return tuple(tuple(r) for r in C)
