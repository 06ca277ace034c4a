"""Exact root data and Weyl-group actions for the simple types A-G.

Conventions
-----------
* Simple roots are numbered in Bourbaki order.
* ``cartan[i][j] = <psi_j, psi_i^vee>`` (Kac convention), so the Dynkin labels
  of the simple root ``psi_j`` are the *column* ``j`` of the Cartan matrix and
  the fundamental weights are the rows of ``(C^T)^{-1}`` in root coordinates.
* The symmetrizer ``d_i = |psi_i|^2 / 2`` is normalized so that long roots in
  every component have squared length 2.
* Roots are integer tuples in the simple-root basis ("psi-coordinates").
  Weights are tuples of Dynkin labels (ints, or Fractions for rational weights).

Everything here is exact: integers and :class:`fractions.Fraction` only.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import NamedTuple, Sequence

Root = tuple[int, ...]
Weight = tuple  # Dynkin labels, int or Fraction entries


class InvalidType(ValueError):
    pass


class NotASimpleSystem(ValueError):
    pass


class NotFiniteType(ValueError):
    pass


_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_DIMENSION = {
    "A": lambda n: n * (n + 2),
    "B": lambda n: n * (2 * n + 1),
    "C": lambda n: n * (2 * n + 1),
    "D": lambda n: n * (2 * n - 1),
    "E": lambda n: {6: 78, 7: 133, 8: 248}[n],
    "F": lambda n: 52,
    "G": lambda n: 14,
}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        if f not in "ABCDEFG" or len(f) != 1:
            raise InvalidType(f"unknown family {f!r}")
        ok = {
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }.get(f, n >= _MIN_RANK.get(f, 1))
        if not ok:
            raise InvalidType(f"invalid rank {n} for family {f}")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        text = text.strip().upper()
        try:
            return cls(text[0], int(text[1:]))
        except (IndexError, ValueError) as exc:
            raise InvalidType(f"cannot parse simple type {text!r}") from exc

    @property
    def dimension(self) -> int:
        return _DIMENSION[self.family](self.rank)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def format_types(types: Sequence[SimpleType]) -> str:
    """Concatenated type string such as ``A1A5``; ``-`` for the empty list."""
    return "".join(str(t) for t in types) or "-"


# ---------------------------------------------------------------------------
# Cartan matrices in Bourbaki order


def cartan_matrix(t: SimpleType) -> tuple[tuple[int, ...], ...]:
    f, n = t.family, t.rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, a=-1, b=-1):
        # a = <psi_j, psi_i^vee>, b = <psi_i, psi_j^vee>
        C[i][j], C[j][i] = a, b

    if f in "ABC" or (f == "D" and n >= 2):
        chain = n if f != "D" else n - 1
        for i in range(chain - 1):
            bond(i, i + 1)
    if f == "B":
        # psi_n short: <psi_{n-1}, psi_n^vee> = -2
        C[n - 1][n - 2] = -2
    elif f == "C":
        C[n - 2][n - 1] = -2
        C[n - 1][n - 2] = -1
    elif f == "D":
        bond(n - 3, n - 1)
    elif f == "E":
        C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j in [(0, 2), (2, 3), (1, 3)] + [(k, k + 1) for k in range(3, n - 1)]:
            bond(i, j)
    elif f == "F":
        C = [[2 if i == j else 0 for j in range(4)] for i in range(4)]
        bond(0, 1)
        bond(2, 3)
        # psi_1, psi_2 long; psi_3, psi_4 short
        C[1][2], C[2][1] = -1, -2
    elif f == "G":
        # psi_1 short, psi_2 long
        C = [[2, -3], [-1, 2]]
    return tuple(tuple(r) for r in C)


# ---------------------------------------------------------------------------
# small exact linear algebra


def _inverse(M: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


def _norm(x):
    """Fraction -> int when integral (keeps dictionary keys canonical)."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _components(cartan) -> list[list[int]]:
    n = len(cartan)
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and cartan[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def symmetrizer(cartan) -> tuple[Fraction, ...]:
    """Diagonal ``d`` with ``d_i C_ij = d_j C_ji``; long roots get ``d = 1``."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for comp in _components(cartan):
        d[comp[0]] = Fraction(1)
        stack = [comp[0]]
        while stack:
            i = stack.pop()
            for j in comp:
                if cartan[i][j] != 0 and j != i and d[j] is None:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    stack.append(j)
        top = max(d[i] for i in comp)
        for i in comp:
            d[i] = d[i] / top
    for i in range(n):
        for j in range(n):
            if d[i] * cartan[i][j] != d[j] * cartan[j][i]:
                raise NotFiniteType("Cartan matrix is not symmetrizable")
    return tuple(d)


def _positive_roots(cartan) -> list[Root]:
    """Closure by simple-root strings, ordered by height then lexicographically."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(n):
                pair = sum(beta[j] * cartan[i][j] for j in range(n))
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        q += 1
                    else:
                        break
                if q - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        nxt -= roots
        roots |= nxt
        layer = list(nxt)
        if len(roots) > 10_000:
            raise NotFiniteType("root closure does not terminate")
    return sorted(roots, key=lambda r: (sum(r), tuple(-x for x in r)))


# ---------------------------------------------------------------------------


class Conjugate(NamedTuple):
    dominant: Weight
    length: int
    singular: bool


@dataclass(frozen=True, eq=False)
class RootDatum:
    """Root datum of a semisimple algebra, built from its Cartan matrix.

    Components may appear in any order and the simple roots need not be
    Bourbaki-ordered (sub-data produced by :func:`sub_root_datum` keep the
    order in which their simple roots were supplied).
    """

    cartan: tuple[tuple[int, ...], ...]
    types: tuple[SimpleType, ...] = field(default=())

    def __post_init__(self):
        if not self.types:
            object.__setattr__(self, "types", tuple(classify_dynkin(self.cartan)))

    # identity is the Cartan matrix
    def __eq__(self, other):
        return isinstance(other, RootDatum) and self.cartan == other.cartan

    def __hash__(self):
        return hash(self.cartan)

    def __repr__(self):
        return f"RootDatum({format_types(self.types)}, rank={self.rank})"

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def fingerprint(self) -> str:
        return ";".join(",".join(map(str, r)) for r in self.cartan)

    @cached_property
    def symmetrizer(self) -> tuple[Fraction, ...]:
        return symmetrizer(self.cartan)

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(_positive_roots(self.cartan))

    @cached_property
    def root_index(self) -> dict[Root, int]:
        return {r: i for i, r in enumerate(self.positive_roots)}

    @cached_property
    def fundamental_weights(self) -> tuple[tuple[Fraction, ...], ...]:
        """Row ``i`` = psi-coordinates of the fundamental weight xi_i."""
        C = self.cartan
        CT = [[C[j][i] for j in range(self.rank)] for i in range(self.rank)]
        return tuple(tuple(_norm(x) for x in row) for row in _inverse(CT))

    @cached_property
    def simple_root_labels(self) -> tuple[tuple[int, ...], ...]:
        """Dynkin labels of each simple root (columns of the Cartan matrix)."""
        n = self.rank
        return tuple(tuple(self.cartan[j][i] for j in range(n)) for i in range(n))

    @property
    def dimension(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    def is_simple(self) -> bool:
        return len(self.types) == 1

    # ---- conversions -----------------------------------------------------

    def root_norm2(self, r: Root) -> Fraction:
        C, d = self.cartan, self.symmetrizer
        return sum((r[i] * r[j] * d[i] * C[i][j] for i in range(self.rank)
                    for j in range(self.rank) if r[i] and r[j]), Fraction(0))

    def coroot(self, r: Root) -> tuple[int, ...]:
        """Coordinates of ``r^vee`` in the basis of simple coroots."""
        dr = self.root_norm2(r) / 2
        return tuple(_norm(r[i] * self.symmetrizer[i] / dr) for i in range(self.rank))

    @cached_property
    def positive_coroots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.coroot(r) for r in self.positive_roots)

    def root_to_weight(self, r: Sequence) -> Weight:
        n = self.rank
        return tuple(_norm(sum((r[i] * self.cartan[j][i] for i in range(n)), 0))
                     for j in range(n))

    def weight_to_roots(self, w: Sequence) -> tuple:
        F = self.fundamental_weights
        n = self.rank
        return tuple(_norm(sum((Fraction(w[i]) * F[i][j] for i in range(n)), Fraction(0)))
                     for j in range(n))

    def inner(self, a: Sequence, b: Sequence) -> Fraction:
        """``<a, b>`` for weights in label coordinates."""
        bm = self.weight_to_roots(b)
        return sum((Fraction(a[i]) * bm[i] * self.symmetrizer[i] for i in range(self.rank)),
                   Fraction(0))

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """``gram[i][j] = <xi_i, xi_j>``."""
        F, d = self.fundamental_weights, self.symmetrizer
        return tuple(tuple(Fraction(F[j][i]) * d[i] for j in range(self.rank))
                     for i in range(self.rank))

    # ---- Weyl group --------------------------------------------------------

    def reflect(self, w: Sequence, i: int) -> Weight:
        c = w[i]
        if c == 0:
            return tuple(w)
        col = self.simple_root_labels[i]
        if all(type(x) is int for x in w):
            return tuple(x - c * a for x, a in zip(w, col))
        return tuple(_norm(x - c * a) for x, a in zip(w, col))

    def is_dominant(self, w: Sequence) -> bool:
        return all(x >= 0 for x in w[: self.rank])

    @cached_property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def longest_word(self) -> tuple[int, ...]:
        """Reduced word of the longest element w0 (applied left to right)."""
        w, word = self.rho, []
        while True:
            i = next((j for j, x in enumerate(w) if x > 0), None)
            if i is None:
                return tuple(word)
            w = self.reflect(w, i)
            word.append(i)


# ---------------------------------------------------------------------------
# Operations


@lru_cache(maxsize=None)
def build_root_datum(t: SimpleType | str) -> RootDatum:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    return RootDatum(cartan_matrix(t), (t,))


def semisimple_datum(types: Sequence[SimpleType | str]) -> RootDatum:
    """Block-diagonal datum for a product of simple types."""
    blocks = [cartan_matrix(SimpleType.parse(t) if isinstance(t, str) else t) for t in types]
    n = sum(len(b) for b in blocks)
    C = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                C[off + i][off + j] = x
        off += len(b)
    return RootDatum(tuple(tuple(r) for r in C))


def highest_root(d: RootDatum) -> Root:
    if not d.is_simple():
        raise ValueError("highest root requires a simple datum")
    return d.positive_roots[-1]


def rho(d: RootDatum) -> Weight:
    return d.rho


def pairing(d: RootDatum, w: Sequence, r: Sequence, coroot: bool = True) -> Fraction | int:
    """``<w, r^vee>`` (default) or the plain inner product ``<w, r>``.

    ``w`` is a weight in label coordinates, ``r`` a root in psi-coordinates.
    """
    if len(w) < d.rank or len(r) != d.rank:
        raise ValueError("dimension mismatch")
    dd = d.symmetrizer
    plain = sum((Fraction(w[i]) * r[i] * dd[i] for i in range(d.rank)), Fraction(0))
    if coroot:
        plain = plain * 2 / d.root_norm2(tuple(r))
    return _norm(plain)


def dominant_conjugate(d: RootDatum, w: Sequence) -> Conjugate:
    """Reflect into the dominant chamber; ``singular`` flags a zero label at the end.

    For a rho-shifted input ``v = u + rho`` the flag says that ``v`` lies on a
    wall, i.e. the dot-orbit of ``u`` contains no dominant weight.
    """
    w = tuple(w)
    n = 0
    while True:
        i = next((j for j in range(d.rank) if w[j] < 0), None)
        if i is None:
            break
        w = d.reflect(w, i)
        n += 1
    return Conjugate(w, n, any(x == 0 for x in w[: d.rank]))


def apply_word(d: RootDatum, word: Sequence[int], w: Sequence) -> Weight:
    w = tuple(w)
    for i in word:
        w = d.reflect(w, i)
    return w


def longest_element_image(d: RootDatum, w: Sequence) -> Weight:
    return apply_word(d, d.longest_word, w)


def weyl_orbit(d: RootDatum, w: Sequence) -> list[Weight]:
    """The W-orbit of ``w`` (all distinct images)."""
    start = dominant_conjugate(d, w).dominant
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for i in range(d.rank):
            if x[i] > 0:
                y = d.reflect(x, i)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return sorted(seen, reverse=True)


# ---------------------------------------------------------------------------
# sub-systems


@dataclass(frozen=True, eq=False)
class Embedding:
    """A sub-root-system given by simple roots of an ambient datum.

    Ambient weights stay in ambient label coordinates; the sub-Weyl group acts
    on them through reflections in the supplied simple roots.
    """

    ambient: RootDatum
    simple_roots: tuple[Root, ...]
    sub: RootDatum

    @cached_property
    def simple_coroots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.ambient.coroot(_abs_root(r))
                     if sum(r) > 0 else tuple(-x for x in self.ambient.coroot(_abs_root(r)))
                     for r in self.simple_roots)

    @cached_property
    def simple_root_labels(self) -> tuple[Weight, ...]:
        return tuple(self.ambient.root_to_weight(r) for r in self.simple_roots)

    def root(self, sub_coords: Sequence[int]) -> Root:
        """Ambient psi-coordinates of a sub-root given in sub-simple coordinates."""
        n = self.ambient.rank
        return tuple(sum(c * r[i] for c, r in zip(sub_coords, self.simple_roots))
                     for i in range(n))

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(self.root(r) for r in self.sub.positive_roots)

    @cached_property
    def positive_coroots(self) -> tuple[tuple, ...]:
        """Ambient coroot coordinates of the positive sub-roots."""
        out = []
        for r in self.positive_roots:
            c = self.ambient.coroot(_abs_root(r))
            out.append(c if sum(r) > 0 else tuple(-x for x in c))
        return tuple(out)

    def restrict(self, w: Sequence) -> Weight:
        """Sub-Dynkin labels ``<w, beta_j^vee>`` of an ambient weight."""
        if all(type(x) is int for x in w):
            return tuple(sum(x * c for x, c in zip(w, cv)) for cv in self._int_coroots)
        return tuple(_norm(sum(Fraction(x) * c for x, c in zip(w, cv)))
                     for cv in self.simple_coroots)

    def pair(self, w: Sequence, coroot: Sequence) -> Fraction | int:
        return _norm(sum((Fraction(x) * c for x, c in zip(w, coroot)), Fraction(0)))

    def reflect(self, w: Sequence, j: int) -> Weight:
        c = self.pair(w, self.simple_coroots[j])
        if c == 0:
            return tuple(w)
        return tuple(_norm(x - c * a) for x, a in zip(w, self.simple_root_labels[j]))

    @cached_property
    def _int_coroots(self) -> tuple:
        return tuple(tuple(int(c) for c in cv) for cv in self.simple_coroots)

    def dominant_conjugate(self, w: Sequence) -> Conjugate:
        w = tuple(w)
        n = 0
        if all(type(x) is int for x in w):
            cor, lab = self._int_coroots, self.simple_root_labels
            while True:
                labels = [sum(x * c for x, c in zip(w, cv)) for cv in cor]
                j = next((i for i, x in enumerate(labels) if x < 0), None)
                if j is None:
                    return Conjugate(w, n, 0 in labels)
                c = labels[j]
                w = tuple(x - c * a for x, a in zip(w, lab[j]))
                n += 1
        while True:
            labels = self.restrict(w)
            j = next((i for i, x in enumerate(labels) if x < 0), None)
            if j is None:
                return Conjugate(w, n, any(x == 0 for x in labels))
            w = self.reflect(w, j)
            n += 1

    def longest_element_image(self, w: Sequence) -> Weight:
        w = tuple(w)
        for j in self.sub.longest_word:
            w = self.reflect(w, j)
        return w

    @cached_property
    def rho(self) -> Weight:
        """Half the sum of the positive sub-roots, in ambient labels."""
        n = self.ambient.rank
        tot = [Fraction(0)] * n
        for r in self.positive_roots:
            for i, x in enumerate(self.ambient.root_to_weight(r)):
                tot[i] += x
        return tuple(_norm(x / 2) for x in tot)

    def weyl_dim(self, w: Sequence) -> int:
        """Weyl dimension polynomial of the sub-algebra at an ambient weight."""
        num, den = Fraction(1), Fraction(1)
        r = self.rho
        for cv in self.positive_coroots:
            a = self.pair(r, cv)
            num *= self.pair(w, cv) + a
            den *= a
        val = num / den
        assert val.denominator == 1
        return int(val)


def _abs_root(r: Sequence[int]) -> Root:
    return tuple(r) if sum(r) > 0 else tuple(-x for x in r)


def is_root(d: RootDatum, r: Sequence[int]) -> bool:
    return _abs_root(r) in d.root_index if any(r) else False


def sub_root_datum(d: RootDatum, simple_set: Sequence[Sequence[int]]) -> tuple[RootDatum, Embedding]:
    roots = [tuple(r) for r in simple_set]
    for r in roots:
        if not is_root(d, r):
            raise NotASimpleSystem(f"{r} is not a root")
    for a, b in itertools.combinations(roots, 2):
        if a == b or is_root(d, tuple(x - y for x, y in zip(a, b))):
            raise NotASimpleSystem(f"{a} - {b} is a root")
    coroots = []
    for r in roots:
        c = d.coroot(_abs_root(r))
        coroots.append(c if sum(r) > 0 else tuple(-x for x in c))
    labels = [d.root_to_weight(r) for r in roots]
    k = len(roots)
    C = tuple(tuple(_norm(sum(Fraction(labels[j][t]) * coroots[i][t] for t in range(d.rank)))
                    for j in range(k)) for i in range(k))
    for i in range(k):
        for j in range(k):
            if i != j and C[i][j] > 0:
                raise NotASimpleSystem("positive off-diagonal Cartan entry")
    sub = RootDatum(C)
    return sub, Embedding(d, tuple(roots), sub)


# ---------------------------------------------------------------------------
# Dynkin classification


class Component(NamedTuple):
    type: SimpleType
    nodes: tuple[int, ...]  # matrix indices listed in Bourbaki order


def _classify_component(cartan, nodes: list[int]) -> Component:
    n = len(nodes)
    adj = {i: [j for j in nodes if j != i and cartan[i][j] != 0] for i in nodes}
    edges = {(i, j) for i in nodes for j in adj[i] if i < j}
    if len(edges) != n - 1:
        raise NotFiniteType("Dynkin graph has a cycle")
    mult = {e: cartan[e[0]][e[1]] * cartan[e[1]][e[0]] for e in edges}
    if any(m > 3 for m in mult.values()):
        raise NotFiniteType("bond of multiplicity > 3")
    sub = [[cartan[i][j] for j in nodes] for i in nodes]
    d = dict(zip(nodes, symmetrizer(sub)))
    if n == 1:
        return Component(SimpleType("A", 1), (nodes[0],))
    ends = [i for i in nodes if len(adj[i]) == 1]
    branch = [i for i in nodes if len(adj[i]) >= 3]

    def walk(start, avoid=None):
        path, prev, cur = [start], avoid, start
        while True:
            nxt = [j for j in adj[cur] if j != prev]
            if len(nxt) != 1 or (avoid is not None and cur in branch and cur != start):
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
            if len(adj[cur]) != 2:
                break
        return path

    multi = [e for e in edges if mult[e] > 1]
    if not branch:
        path = walk(ends[0])
        if not multi:
            return Component(SimpleType("A", n), tuple(path))
        (e,) = multi
        if mult[e] == 3:
            short, long_ = (e[0], e[1]) if d[e[0]] < d[e[1]] else (e[1], e[0])
            return Component(SimpleType("G", 2), (short, long_))
        if n == 2:
            long_, short = (e[0], e[1]) if d[e[0]] > d[e[1]] else (e[1], e[0])
            return Component(SimpleType("B", 2), (long_, short))
        # orient so the double bond is at the far end if it touches an end
        a, b = e
        if a in ends or b in ends:
            end = a if a in ends else b
            other = ends[0] if ends[0] != end else ends[1]
            path = walk(other)
            fam = "B" if d[end] < d[path[-2]] else "C"
            return Component(SimpleType(fam, n), tuple(path))
        if n == 4:
            # F4: 1 - 2 => 3 - 4 with psi_1, psi_2 long
            p = walk(ends[0])
            if d[p[0]] < d[p[-1]]:
                p = p[::-1]
            return Component(SimpleType("F", 4), tuple(p))
        raise NotFiniteType("double bond in the interior of a long chain")
    if multi or len(branch) != 1 or len(adj[branch[0]]) != 3:
        raise NotFiniteType("unsupported branching")
    c = branch[0]
    arms = sorted((walk(j, avoid=c) for j in adj[c]), key=len)
    lens = tuple(len(a) for a in arms)
    if lens[0] == 1 and lens[1] == 1:
        # D_n: long arm then the center then the two short ends
        long_arm = arms[2][::-1]
        return Component(SimpleType("D", n), tuple(long_arm + [c, arms[0][0], arms[1][0]]))
    if lens[:2] == (1, 2) and lens[2] in (2, 3, 4):
        # E_n: 1 - 3 - 4 - 5 - ..., 2 attached to 4
        a1, a2, a3 = arms
        if lens[2] == 2:
            # E6: the two length-2 arms are interchangeable
            a2, a3 = arms[1], arms[2]
        order = [a2[1], a1[0], a2[0], c] + a3
        return Component(SimpleType("E", n), tuple(order))
    raise NotFiniteType(f"branch arms {lens} are not of finite type")


def dynkin_components(cartan, first: int | None = None) -> list[Component]:
    comps = [_classify_component(cartan, c) for c in _components(cartan)]
    comps.sort(key=lambda c: (c.type.family, c.type.rank, c.nodes))
    if first is not None:
        comps.sort(key=lambda c: first not in c.nodes)
    return comps


def classify_dynkin(cartan, first: int | None = None) -> list[SimpleType]:
    """Simple types of the components, ``(family, rank)``-sorted.

    With ``first`` given, the component containing that node is listed first.
    """
    return [c.type for c in dynkin_components(cartan, first)]
