"""Borel-de Siebenthal gradings and the atlas of cases.

A simple root ``nu`` whose coefficient in the maximal root ``mu`` is 2 grades
the roots by ``n_nu``.  The degree-0 part is the Levi factor ``l`` (semisimple
part spanned by the other simple roots, plus the line through ``nu*``), and
``k = l + u_2 + u_{-2}`` is the compact subalgebra.

Levi weights are tuples ``(labels on Psi \\ {nu} in ambient order, c)`` where
``c`` is the exact rational ``nu*``-component: ``w = w' + c nu*`` with ``w'``
in the span of the roots of ``l``.  The central coordinate is invariant under
the Weyl group of ``l``.

Simple-root indices in the public API (``nu``) are 1-based, as in Bourbaki.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from .charkernel import OrbitCharacter, weyl_dim
from .lattice import (
    Component,
    Embedding,
    RootDatum,
    SimpleType,
    _norm,
    build_root_datum,
    dynkin_components,
    highest_root,
    longest_element_image,
    sub_root_datum,
)


class HermitianCaseExcluded(ValueError):
    """The chosen simple root has coefficient 1 in the maximal root."""


class NotBorelDeSiebenthal(ValueError):
    """The chosen simple root has coefficient at least 3 in the maximal root."""


class UnknownCase(KeyError):
    pass


def _unit(n, i):
    return tuple(int(j == i) for j in range(n))


@dataclass(frozen=True, eq=False)
class Grading:
    datum: RootDatum
    nu: int  # 1-based

    def __post_init__(self):
        if not 1 <= self.nu <= self.datum.rank:
            raise ValueError(f"nu={self.nu} out of range")
        c = highest_root(self.datum)[self.i]
        if c == 1:
            raise HermitianCaseExcluded(f"coefficient of psi_{self.nu} in mu is 1 (hermitian case)")
        if c != 2:
            raise NotBorelDeSiebenthal(f"coefficient of psi_{self.nu} in mu is {c}")

    @property
    def i(self) -> int:
        return self.nu - 1

    @property
    def mu(self) -> tuple[int, ...]:
        return highest_root(self.datum)

    @property
    def nu_star(self) -> tuple[int, ...]:
        return _unit(self.datum.rank, self.i)

    @property
    def nu_root(self) -> tuple[int, ...]:
        return _unit(self.datum.rank, self.i)

    @cached_property
    def delta(self) -> dict[int, tuple]:
        out = {i: [] for i in (-2, -1, 0, 1, 2)}
        for r in self.datum.positive_roots:
            out[r[self.i]].append(r)
            out[-r[self.i]].append(tuple(-x for x in r))
        return {i: tuple(v) for i, v in out.items()}

    @property
    def positive_l_roots(self) -> tuple:
        return tuple(r for r in self.datum.positive_roots if r[self.i] == 0)

    @property
    def s(self) -> int:
        return len(self.delta[2])

    def n_nu(self, root) -> int:
        return root[self.i]

    @cached_property
    def levi(self) -> "LeviStructure":
        return LeviStructure(self)


def grade(d: RootDatum, nu: int) -> Grading:
    return _grade(d, nu)


@lru_cache(maxsize=None)
def _grade(d, nu):
    return Grading(d, nu)


class LeviStructure:
    """Levi factor, compact subalgebra and coordinate changes for a grading."""

    def __init__(self, g: Grading):
        self.grading = g
        d = g.datum
        n, v = d.rank, g.i
        self.l_nodes = tuple(j for j in range(n) if j != v)
        self.l_datum, self.l_embedding = sub_root_datum(d, [_unit(n, j) for j in self.l_nodes])
        self.l_components = dynkin_components(self.l_datum.cartan)
        F = d.fundamental_weights
        self._Fnn = Fraction(F[v][v])
        self._Fcol = tuple(Fraction(F[j][v]) for j in range(n))
        # fixed positive system of k: Delta_0^+ u Delta_2, simple roots Psi\{nu} u {beta0}
        self.beta0 = min(g.delta[2], key=sum)
        k_simple = [(_unit(n, j) if j != v else self.beta0) for j in range(n)]
        self.k_datum, self.k_embedding = sub_root_datum(d, k_simple)
        self.k_components = dynkin_components(self.k_datum.cartan, first=v)
        # Psi_k = Psi\{nu} u {-mu}
        psik = [(_unit(n, j) if j != v else tuple(-x for x in g.mu)) for j in range(n)]
        self.psik_datum, self.psik_embedding = sub_root_datum(d, psik)
        self.psik_components = dynkin_components(self.psik_datum.cartan, first=v)

    # ---- types ---------------------------------------------------------

    @property
    def l_types(self) -> list[SimpleType]:
        return sorted(c.type for c in self.l_components)

    @property
    def k1_component(self) -> Component:
        return self.k_components[0]

    @property
    def k2_components(self) -> list[Component]:
        return self.k_components[1:]

    @property
    def k1_type(self) -> list[SimpleType]:
        return [self.k1_component.type]

    @property
    def k2_type(self) -> list[SimpleType]:
        return sorted(c.type for c in self.k2_components)

    @property
    def is_quaternionic(self) -> bool:
        return self.k1_component.type == SimpleType("A", 1)

    # ---- coordinates ---------------------------------------------------

    def central(self, w: Sequence) -> Fraction | int:
        """nu*-component of an ambient weight given by labels."""
        m_nu = sum((Fraction(x) * f for x, f in zip(w, self._Fcol)), Fraction(0))
        return _norm(m_nu / self._Fnn)

    def central_of_root(self, r: Sequence[int]) -> Fraction | int:
        return _norm(Fraction(r[self.grading.i]) / self._Fnn)

    def to_levi(self, w: Sequence) -> tuple:
        return tuple(_norm(Fraction(w[j])) for j in self.l_nodes) + (self.central(w),)

    def from_levi(self, lw: Sequence) -> tuple:
        *lab, c = lw
        v = self.grading.i
        x = Fraction(c) - sum((Fraction(a) * self._Fcol[j] for a, j in zip(lab, self.l_nodes)),
                              Fraction(0)) / self._Fnn
        out = list(lab)
        out.insert(v, x)
        return tuple(_norm(Fraction(y)) for y in out)

    def k_labels(self, w: Sequence) -> tuple:
        """Dynkin labels for the fixed positive system of k (ambient index order)."""
        return self.k_embedding.restrict(w)

    def split_k(self, klabels: Sequence) -> tuple[tuple, tuple]:
        """(k1 labels, k2 labels), each component listed in Bourbaki order."""
        k1 = tuple(klabels[j] for j in self.k1_component.nodes)
        k2 = tuple(klabels[j] for c in self.k2_components for j in c.nodes)
        return k1, k2

    def k_dim(self, w: Sequence) -> int:
        return self.k_embedding.weyl_dim(w)

    def l_dim(self, lw: Sequence) -> int:
        return weyl_dim(self.l_datum, lw)

    def w0_l(self, w: Sequence) -> tuple:
        """Longest element of W_l acting on an ambient weight."""
        return self.l_embedding.longest_element_image(w)


def levi(g: Grading) -> LeviStructure:
    return g.levi


def tau_weight(g: Grading, i: int) -> tuple:
    """Highest weight (Levi coordinates) of the Levi action on u_i."""
    lv, d = g.levi, g.datum
    if i == 2:
        r = g.mu
    elif i == 1:
        r = max(g.delta[1], key=sum)
        check = lv.w0_l(d.root_to_weight(g.nu_root))
        if check != d.root_to_weight(r):
            raise AssertionError("max of Delta_1 differs from w0_l(nu)")
    elif i == -1:
        r = tuple(-x for x in g.nu_root)
    elif i == -2:
        r = tuple(-x for x in lv.beta0)
    else:
        raise ValueError("i must be one of +-1, +-2")
    return lv.to_levi(d.root_to_weight(r))


def u_character(g: Grading, i: int) -> OrbitCharacter:
    return OrbitCharacter.irreducible(g.levi.l_datum, tau_weight(g, i))


def u_weights(g: Grading, i: int) -> list[tuple]:
    """Levi weights of the roots in Delta_i (one per root)."""
    lv, d = g.levi, g.datum
    return [lv.to_levi(d.root_to_weight(r)) for r in g.delta[i]]


def dual_hw(lv: LeviStructure, hw: Sequence) -> tuple:
    """Highest weight of the dual module: ``-w0(hw)``, center negated."""
    *lab, c = hw
    low = longest_element_image(lv.l_datum, tuple(lab))
    return tuple(-x for x in low) + (_norm(-Fraction(c)),)


def decompose_gamma(g: Grading, gamma: Sequence) -> tuple[tuple, Fraction | int]:
    """``gamma = gamma0 + t nu*`` with ``<gamma0, nu^vee> = 0``."""
    t = gamma[g.i]
    g0 = tuple(0 if j == g.i else x for j, x in enumerate(gamma))
    return g0, t


# ---------------------------------------------------------------------------
# diagram automorphisms and admissible nu


def diagram_automorphisms(d: RootDatum) -> list[tuple[int, ...]]:
    C, n = d.cartan, d.rank
    out = []

    def extend(perm):
        k = len(perm)
        if k == n:
            out.append(tuple(perm))
            return
        for t in range(n):
            if t in perm or C[t][t] != C[k][k]:
                continue
            if all(C[perm[a]][t] == C[a][k] and C[t][perm[a]] == C[k][a] for a in range(k)):
                extend(perm + [t])

    extend([])
    return out


def admissible_nus(d: RootDatum) -> list[int]:
    mu = highest_root(d)
    cand = [i for i in range(d.rank) if mu[i] == 2]
    autos = diagram_automorphisms(d)
    reps = sorted({min(a[i] for a in autos) for i in cand})
    return [i + 1 for i in reps]


# ---------------------------------------------------------------------------
# case atlas

EXCEPTIONAL_IDS = {
    ("G", 2, 2): "G2,A1A1",
    ("F", 4, 1): "F4,A1C3",
    ("F", 4, 4): "F4,B4",
    ("E", 6, 3): "E6,A1A5,1",
    ("E", 6, 2): "E6,A1A5,2",
    ("E", 7, 1): "E7,A1D6,1",
    ("E", 7, 6): "E7,A1D6,2",
    ("E", 7, 2): "E7,A7",
    ("E", 8, 1): "E8,D8",
    ("E", 8, 8): "E8,A1E7",
}
EXCEPTIONAL_ORDER = list(EXCEPTIONAL_IDS.values())


def classical_id(family: str, ell: int, p: int) -> str:
    if family == "B":
        return f"Spin({2 * p},{2 * ell - 2 * p + 1})"
    if family == "C":
        return f"Sp({p},{ell - p})"
    if family == "D":
        return "SO(4,4)" if ell == 4 else f"Spin({2 * p},{2 * ell - 2 * p})"
    raise ValueError(family)


@dataclass(frozen=True)
class BdsCase:
    id: str
    g: SimpleType
    nu: int
    p: int | None
    k1_type: tuple
    k2_type: tuple
    l_type: tuple
    dim_u1: int
    dim_u2: int
    tau1_hw: tuple
    tau2_hw: tuple
    deg_tau1: int
    s: int
    grading: Grading = field(repr=False, compare=False, hash=False)

    @property
    def is_exceptional(self) -> bool:
        return self.g.family in "EFG"

    @property
    def family(self) -> str:
        return self.g.family

    @property
    def rank(self) -> int:
        return self.g.rank

    @property
    def levi(self) -> LeviStructure:
        return self.grading.levi


def make_case(t: SimpleType | str, nu: int, case_id: str | None = None) -> BdsCase:
    return _make_case(SimpleType.parse(t) if isinstance(t, str) else t, nu, case_id)


@lru_cache(maxsize=None)
def _make_case(t: SimpleType, nu: int, case_id):
    g = grade(build_root_datum(t), nu)
    lv = g.levi
    tau1, tau2 = tau_weight(g, 1), tau_weight(g, 2)
    if case_id is None:
        case_id = EXCEPTIONAL_IDS.get((t.family, t.rank, nu))
        if case_id is None:
            case_id = classical_id(t.family, t.rank, nu) if t.family in "BCD" else f"{t}:{nu}"
    return BdsCase(
        id=case_id,
        g=t,
        nu=nu,
        p=nu if t.family in "BCD" else None,
        k1_type=tuple(lv.k1_type),
        k2_type=tuple(lv.k2_type),
        l_type=tuple(lv.l_types),
        dim_u1=len(g.delta[1]),
        dim_u2=len(g.delta[2]),
        tau1_hw=tau1,
        tau2_hw=tau2,
        deg_tau1=weyl_dim(lv.l_datum, tau1),
        s=g.s,
        grading=g,
    )


def exceptional_cases() -> list[BdsCase]:
    by_id = {v: k for k, v in EXCEPTIONAL_IDS.items()}
    return [make_case(SimpleType(f, r), nu) for f, r, nu in (by_id[c] for c in EXCEPTIONAL_ORDER)]


def classical_cases(max_rank: int) -> list[BdsCase]:
    out = []
    for fam, lo in (("B", 2), ("C", 3), ("D", 4)):
        for ell in range(lo, max_rank + 1):
            d = build_root_datum(SimpleType(fam, ell))
            for nu in admissible_nus(d):
                out.append(make_case(SimpleType(fam, ell), nu))
    return out


def enumerate_cases(max_classical_rank: int = 9) -> list[BdsCase]:
    if max_classical_rank < 4:
        raise ValueError("max_classical_rank must be at least 4")
    return exceptional_cases() + classical_cases(max_classical_rank)


_ALIASES = {c.replace(",", "_"): c for c in EXCEPTIONAL_ORDER}


def get_case(case_id: str) -> BdsCase:
    """Look up a case by id.

    Accepts the exceptional ids (``E8,D8`` or ``E8_D8``), classical names
    (``Spin(4,5)``, ``SO(4,5)``, ``Sp(2,3)``, ``SO(4,4)``) and the generic
    form ``D9:3`` (type and 1-based ``nu``).
    """
    raw = case_id.strip()
    key = _ALIASES.get(raw, raw)
    for (f, r, nu), name in EXCEPTIONAL_IDS.items():
        if name == key:
            return make_case(SimpleType(f, r), nu)
    m = re.fullmatch(r"([A-G]\d+):(\d+)", key, re.I)
    try:
        if m:
            t = SimpleType.parse(m.group(1))
            return make_case(t, int(m.group(2)))
        m = re.fullmatch(r"(Spin|SO)\((\d+),(\d+)\)", key, re.I)
        if m:
            a, b = int(m.group(2)), int(m.group(3))
            if a % 2:
                raise UnknownCase(case_id)
            p = a // 2
            if b % 2:
                ell = (a + b - 1) // 2
                return make_case(SimpleType("B", ell), p)
            ell = (a + b) // 2
            if ell == 4 and p == 2:
                return make_case(SimpleType("D", 4), 2)
            if not 2 <= p <= ell - 2:
                raise UnknownCase(case_id)
            return make_case(SimpleType("D", ell), p)
        m = re.fullmatch(r"Sp\((\d+),(\d+)\)", key, re.I)
        if m:
            p, q = int(m.group(1)), int(m.group(2))
            if p + q == 2:
                return make_case(SimpleType("B", 2), 2, "Spin(4,1)")
            return make_case(SimpleType("C", p + q), p)
    except (ValueError, HermitianCaseExcluded, NotBorelDeSiebenthal) as exc:
        raise UnknownCase(f"{case_id}: {exc}") from exc
    raise UnknownCase(case_id)
