"""Character arithmetic on dominant-orbit representations.

A character is stored as a finite map ``dominant weight -> multiplicity``
(irreducible constituents).  Weights are label tuples for the datum's rank,
optionally followed by *central* coordinates: extra rational coordinates that
the Weyl group fixes, which add under tensor products and scale under Adams
operations.  This is how characters of a reductive Levi factor are carried.

The heavy lifting is the Klimyk (Racah-Speiser) reduction, done in batches
with numpy.  Symmetric and exterior powers use the Newton recursions

    m S^m = sum_{r=1}^m psi^r S^{m-r},     m L^m = sum_{r=1}^m (-1)^{r-1} psi^r L^{m-r}

where the Adams operation psi^r is applied directly as "weights times r".
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm, prod
from typing import Iterable, Mapping

import numpy as np

from .lattice import RootDatum, _norm, dominant_conjugate, weyl_orbit

_INT_LIMIT = 2**62
_CHUNK = 400_000


class NegativeMultiplicity(ArithmeticError):
    """A character that must be actual came out with a negative coefficient."""


class NotDominant(ValueError):
    pass


@dataclass(frozen=True)
class OrbitCharacter:
    datum: RootDatum
    items: tuple  # sorted ((weight, multiplicity), ...), no zero multiplicities

    @classmethod
    def from_map(cls, datum: RootDatum, entries: Mapping | Iterable) -> "OrbitCharacter":
        if isinstance(entries, Mapping):
            entries = entries.items()
        acc: dict = defaultdict(int)
        for w, m in entries:
            acc[tuple(_norm(Fraction(x)) if isinstance(x, Fraction) else int(x) for x in w)] += int(m)
        return cls(datum, tuple(sorted(((w, m) for w, m in acc.items() if m), key=_sort_key)))

    @classmethod
    def irreducible(cls, datum: RootDatum, hw, mult: int = 1) -> "OrbitCharacter":
        _check_dominant(datum, hw)
        return cls.from_map(datum, [(tuple(hw), mult)])

    @property
    def entries(self) -> dict:
        return dict(self.items)

    @property
    def ncentral(self) -> int:
        return len(self.items[0][0]) - self.datum.rank if self.items else 0

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, w):
        return self.entries.get(tuple(w), 0)

    def __add__(self, other):
        _same(self, other)
        return OrbitCharacter.from_map(self.datum, list(self.items) + list(other.items))

    def __sub__(self, other):
        _same(self, other)
        return OrbitCharacter.from_map(self.datum, list(self.items) + [(w, -m) for w, m in other.items])

    def scale(self, k: int) -> "OrbitCharacter":
        return OrbitCharacter.from_map(self.datum, [(w, k * m) for w, m in self.items])

    def is_actual(self) -> bool:
        return all(m > 0 for _, m in self.items)

    def dimension(self) -> int:
        return sum(m * weyl_dim(self.datum, w) for w, m in self.items)

    def __repr__(self):
        body = " + ".join(f"{m}*{list(w)}" for w, m in self.items[:6])
        more = " + ..." if len(self.items) > 6 else ""
        return f"OrbitCharacter({self.datum!r}: {body or '0'}{more})"


def _sort_key(item):
    w, _ = item
    return tuple(-Fraction(x) for x in w)


def _same(a: OrbitCharacter, b: OrbitCharacter):
    if a.datum != b.datum:
        raise ValueError("characters live over different root data")


def _check_dominant(d: RootDatum, hw):
    labels = hw[: d.rank]
    if len(labels) != d.rank:
        raise NotDominant(f"weight {hw} too short for rank {d.rank}")
    for x in labels:
        if Fraction(x).denominator != 1:
            raise NotDominant(f"non-integral label in {hw}")
        if x < 0:
            raise NotDominant(f"{hw} is not dominant")


def ensure_actual(c: OrbitCharacter) -> OrbitCharacter:
    bad = [(w, m) for w, m in c.items if m < 0]
    if bad:
        raise NegativeMultiplicity(f"negative multiplicities survive: {bad[:3]}")
    return c


# ---------------------------------------------------------------------------
# dimensions and weight systems


@lru_cache(maxsize=None)
def _dim_data(d: RootDatum):
    cor = d.positive_coroots
    rho_pairs = [sum(c) for c in cor]  # <rho, alpha^vee>
    return cor, prod(rho_pairs)


def weyl_dim(d: RootDatum, hw) -> int:
    """Weyl dimension formula; central coordinates are ignored."""
    _check_dominant(d, hw)
    hw = [int(x) for x in hw[: d.rank]]
    cor, den = _dim_data(d)
    num = 1
    for c in cor:
        num *= sum(h * x for h, x in zip(hw, c)) + sum(c)
    q, r = divmod(num, den)
    assert r == 0
    return q


@lru_cache(maxsize=None)
def _scaled_gram(d: RootDatum):
    G = d.gram
    L = lcm(*(x.denominator for row in G for x in row)) if d.rank else 1
    return tuple(tuple(int(x * L) for x in row) for row in G)


def _ip(G, a, b) -> int:
    return sum(a[i] * sum(G[i][j] * b[j] for j in range(len(b)) if b[j]) for i in range(len(a)) if a[i])


@lru_cache(maxsize=None)
def _root_labels(d: RootDatum):
    return tuple(d.root_to_weight(r) for r in d.positive_roots)


def dominant_weights(d: RootDatum, hw) -> list[tuple]:
    """Dominant weights of the irreducible module with highest weight ``hw``."""
    hw = tuple(int(x) for x in hw)
    roots = _root_labels(d)
    seen = {hw}
    stack = [hw]
    while stack:
        mu = stack.pop()
        for a in roots:
            nu = tuple(x - y for x, y in zip(mu, a))
            if min(nu) >= 0 and nu not in seen:
                seen.add(nu)
                stack.append(nu)
    return sorted(seen, reverse=True)


@lru_cache(maxsize=None)
def _freudenthal_dominant(d: RootDatum, hw: tuple) -> dict:
    G = _scaled_gram(d)
    roots = _root_labels(d)
    rho = d.rho
    lr = tuple(a + b for a, b in zip(hw, rho))
    top = _ip(G, lr, lr)
    dom = dominant_weights(d, hw)
    # process by depth below hw
    F, _ = _scaled_fundamental(d)
    depth = {w: sum((h - y) * sum(row) for h, y, row in zip(hw, w, F)) for w in dom}
    dom.sort(key=lambda w: depth[w])
    mult = {hw: 1}
    domset = set(dom)

    def lookup(w):
        if min(w) < 0:
            w = dominant_conjugate(d, w).dominant
        return mult.get(w, 0) if w in domset else 0

    for mu in dom[1:]:
        acc = 0
        for a in roots:
            j = 1
            while True:
                nu = tuple(x + j * y for x, y in zip(mu, a))
                m = lookup(nu)
                if m == 0 and not _below(d, nu, hw):
                    break
                if m:
                    acc += _ip(G, nu, a) * m
                j += 1
        mr = tuple(a + b for a, b in zip(mu, rho))
        den = top - _ip(G, mr, mr)
        q, r = divmod(2 * acc, den)
        assert r == 0, "Freudenthal division not exact"
        mult[mu] = q
    return {w: m for w, m in mult.items() if m}


@lru_cache(maxsize=None)
def _scaled_fundamental(d: RootDatum):
    F = d.fundamental_weights
    L = lcm(*(Fraction(x).denominator for row in F for x in row))
    return tuple(tuple(int(Fraction(x) * L) for x in row) for row in F), L


def _below(d, w, hw) -> bool:
    F, _ = _scaled_fundamental(d)
    diff = [h - x for h, x in zip(hw, w)]
    n = len(diff)
    return all(sum(diff[i] * F[i][j] for i in range(n)) >= 0 for j in range(n))


def freudenthal(d: RootDatum, hw) -> dict:
    """Full weight system ``weight -> multiplicity`` of the irreducible module.

    Trailing central coordinates of ``hw`` are copied onto every weight.
    """
    _check_dominant(d, hw)
    n = d.rank
    core, central = tuple(int(x) for x in hw[:n]), tuple(hw[n:])
    out = {}
    for mu, m in _freudenthal_dominant(d, core).items():
        for w in weyl_orbit(d, mu):
            out[w + central] = m
    return out


def dominant_multiplicities(d: RootDatum, hw) -> dict:
    _check_dominant(d, hw)
    n = d.rank
    central = tuple(hw[n:])
    return {w + central: m for w, m in _freudenthal_dominant(d, tuple(int(x) for x in hw[:n])).items()}


def weight_system(c: OrbitCharacter) -> Counter:
    """Weights (with multiplicity) of an orbit character, expanded."""
    acc: Counter = Counter()
    for hw, m in c.items:
        for w, k in freudenthal(c.datum, hw).items():
            acc[w] += m * k
    return +acc if c.is_actual() else acc


# ---------------------------------------------------------------------------
# Klimyk reduction


def _from_int_row(row, n, den):
    out = []
    for i, x in enumerate(row):
        x = int(x)
        out.append(x if i < n or den == 1 else _norm(Fraction(x, den)))
    return tuple(out)


def klimyk(d: RootDatum, constituents: Mapping, weights: Mapping, scale: int = 1) -> dict:
    """``sum_lambda a_lambda V(lambda)  (x)  (weights scaled by `scale`)``.

    ``constituents`` maps dominant weights to (possibly negative) integers,
    ``weights`` is a W-invariant weight multiset.  Returns the decomposition
    as ``dominant weight -> integer``.
    """
    if not constituents or not weights:
        return {}
    n = d.rank
    lam_keys = list(constituents)
    wt_keys = list(weights)
    ncol = len(lam_keys[0])
    if any(len(w) != ncol for w in wt_keys) or any(len(w) != ncol for w in lam_keys):
        raise ValueError("central coordinate counts differ")
    # common denominator for central columns across both inputs
    den = 1
    for w in lam_keys + wt_keys:
        for x in w[n:]:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
    L = np.array([[int(x) if i < n else int(Fraction(x) * den) for i, x in enumerate(w)]
                  for w in lam_keys], dtype=np.int64).reshape(len(lam_keys), ncol)
    M = scale * np.array([[int(x) if i < n else int(Fraction(x) * den) for i, x in enumerate(w)]
                          for w in wt_keys], dtype=np.int64).reshape(len(wt_keys), ncol)
    a = [int(constituents[k]) for k in lam_keys]
    b = [int(weights[k]) for k in wt_keys]
    big = max(map(abs, a)) * max(map(abs, b)) * len(a) * len(b) >= _INT_LIMIT
    A = np.array(a, dtype=object if big else np.int64)
    B = np.array(b, dtype=object if big else np.int64)

    refl = np.zeros((n, ncol), dtype=np.int64)
    for i, col in enumerate(d.simple_root_labels):
        refl[i, :n] = col
    rho = np.zeros(ncol, dtype=np.int64)
    rho[:n] = 1

    acc: dict = defaultdict(int)
    step = max(1, _CHUNK // max(1, len(wt_keys)))
    for start in range(0, len(lam_keys), step):
        Lc = L[start:start + step]
        Ac = A[start:start + step]
        V = (Lc[:, None, :] + M[None, :, :] + rho).reshape(-1, ncol)
        coef = (Ac[:, None] * B[None, :]).reshape(-1)
        sign = np.ones(len(V), dtype=np.int64)
        _reduce_chamber(V, sign, refl, n)
        keep = np.all(V[:, :n] > 0, axis=1)
        V, coef, sign = V[keep] - rho, coef[keep], sign[keep]
        if not len(V):
            continue
        uniq, inv = np.unique(V, axis=0, return_inverse=True)
        inv = inv.reshape(-1)
        tot = np.zeros(len(uniq), dtype=coef.dtype)
        np.add.at(tot, inv, coef * sign)
        for row, m in zip(uniq, tot):
            if m:
                acc[_from_int_row(row, n, den)] += int(m)
    return {w: m for w, m in acc.items() if m}


def _reduce_chamber(V, sign, refl, n):
    """In place: reflect every regular row into the open dominant chamber.

    Rows that hit a wall stop moving; they keep a non-positive label and are
    dropped by the caller.
    """
    active = np.arange(len(V))
    while len(active):
        sub = V[active, :n]
        move = (sub < 0).any(axis=1) & ~(sub == 0).any(axis=1)
        active, sub = active[move], sub[move]
        if not len(active):
            break
        j = np.argmax(sub < 0, axis=1)
        c = sub[np.arange(len(sub)), j]
        V[active] -= c[:, None] * refl[j]
        sign[active] *= -1


# ---------------------------------------------------------------------------
# ring operations


def tensor(d: RootDatum, a: OrbitCharacter, b: OrbitCharacter) -> OrbitCharacter:
    _same(a, b)
    if a.datum != d:
        raise ValueError("datum mismatch")
    return ensure_actual(_tensor(a, b))


def _tensor(a: OrbitCharacter, b: OrbitCharacter) -> OrbitCharacter:
    # expand the weight system of the smaller factor
    if _wsize(a) < _wsize(b):
        a, b = b, a
    return OrbitCharacter.from_map(a.datum, klimyk(a.datum, a.entries, _weights(b)))


def _wsize(c: OrbitCharacter) -> int:
    return sum(abs(m) * weyl_dim(c.datum, w) for w, m in c.items)


@lru_cache(maxsize=64)
def _weights(c: OrbitCharacter) -> Counter:
    # callers must not mutate the returned Counter
    if len(c.items) == 1 and c.items[0][1] == 1:
        return Counter(freudenthal(c.datum, c.items[0][0]))
    return weight_system(c)


def adams(d: RootDatum, c: OrbitCharacter, r: int) -> OrbitCharacter:
    """Adams operation: virtual character with every weight multiplied by ``r``."""
    if r < 1:
        raise ValueError("r must be positive")
    if r == 1:
        return c
    zero = tuple([0] * d.rank + [0] * c.ncentral)
    return OrbitCharacter.from_map(d, klimyk(d, {zero: 1}, _weights(c), scale=r))


def trivial_character(d: RootDatum, ncentral: int = 0) -> OrbitCharacter:
    return OrbitCharacter.from_map(d, [((0,) * (d.rank + ncentral), 1)])


@lru_cache(maxsize=256)
def _powers(c: OrbitCharacter, m_max: int, sign: int) -> tuple:
    d = c.datum
    wts = _weights(c)
    out = [trivial_character(d, c.ncentral).entries]
    for m in range(1, m_max + 1):
        acc: dict = defaultdict(int)
        for r in range(1, m + 1):
            s = 1 if sign > 0 or r % 2 else -1
            for w, k in klimyk(d, out[m - r], wts, scale=r).items():
                acc[w] += s * k
        res = {}
        for w, k in acc.items():
            q, rem = divmod(k, m)
            if rem:
                raise ArithmeticError("Newton recursion: division by m not exact")
            if q:
                res[w] = q
        out.append(res)
    return tuple(ensure_actual(OrbitCharacter.from_map(d, e)) for e in out)


def sym_powers(d: RootDatum, c: OrbitCharacter, m_max: int) -> tuple[OrbitCharacter, ...]:
    """``(S^0 c, ..., S^m_max c)``."""
    if c.datum != d:
        raise ValueError("datum mismatch")
    ensure_actual(c)
    return _powers(c, m_max, 1)


def sym_power(d: RootDatum, c: OrbitCharacter, m: int) -> OrbitCharacter:
    return sym_powers(d, c, m)[m]


def alt_power(d: RootDatum, c: OrbitCharacter, m: int) -> OrbitCharacter:
    if c.datum != d:
        raise ValueError("datum mismatch")
    ensure_actual(c)
    if m > c.dimension():
        return OrbitCharacter(d, ())
    return _powers(c, m, -1)[m]


def trivial_multiplicity(c: OrbitCharacter) -> int:
    n = c.datum.rank
    return sum(m for w, m in c.items if not any(w[:n]) and not any(w[n:]))


def sym_dimension(dim: int, m: int) -> int:
    return comb(dim + m - 1, m)


def alt_dimension(dim: int, m: int) -> int:
    return comb(dim, m)
