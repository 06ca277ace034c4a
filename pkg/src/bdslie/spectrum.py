"""Negativity thresholds, Bott-Borel-Weil on Y = K/(Q cap K), and K-type spectra.

Conventions:

* ``rho_k`` is half the sum of the fixed positive compact system
  ``Delta_0^+ u Delta_2``; all reported K-types are dominant for it.
* ``rho_psik`` is half the sum of the positive system with simple roots
  ``(Psi \\ {nu}) u {-mu}``, i.e. ``Delta_0^+ u Delta_{-2}``.
* Every inequality is evaluated through coroot pairings in exact arithmetic.
"""
from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Sequence

from .bdscore import BdsCase, Grading, decompose_gamma, u_character
from .charkernel import OrbitCharacter, sym_powers, tensor, weyl_dim
from .lattice import _norm, build_root_datum


class InsufficientNegativity(ValueError):
    def __init__(self, report: "NegativityReport"):
        self.report = report
        super().__init__(
            f"t = {report.t} is not below both bounds "
            f"(t_bound_mu = {report.t_bound_mu}, t_bound_nu = {report.t_bound_nu})")


class VanishingViolation(AssertionError):
    pass


class LowestKTypeMismatch(AssertionError):
    pass


class NonIntegralWeight(ValueError):
    pass


def _grading(x) -> Grading:
    return x.grading if isinstance(x, BdsCase) else x


def _pair(w: Sequence, coroot: Sequence) -> Fraction:
    return sum((Fraction(a) * c for a, c in zip(w, coroot)), Fraction(0))


def _add(a, b):
    return tuple(_norm(Fraction(x) + y) for x, y in zip(a, b))


def _sub(a, b):
    return tuple(_norm(Fraction(x) - y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# rho


@dataclass(frozen=True)
class RhoParts:
    rho_g: tuple
    rho_k: tuple
    rho_l: tuple
    rho_psik: tuple

    def psi(self, g: Grading, which: str) -> tuple:
        """A rho in simple-root coordinates."""
        return g.datum.weight_to_roots(getattr(self, which))


def rho_parts(g) -> RhoParts:
    g = _grading(g)
    lv = g.levi
    return RhoParts(g.datum.rho, lv.k_embedding.rho, lv.l_embedding.rho, lv.psik_embedding.rho)


# ---------------------------------------------------------------------------
# negativity


@dataclass(frozen=True)
class NegativityReport:
    gamma: tuple
    gamma0: tuple
    t: Fraction | int
    t_bound_mu: Fraction | int
    t_bound_nu: Fraction | int
    k_bound_mu: Fraction | int  # from rho of the Psi_k system
    k_bound_mu_compact: Fraction | int  # from rho_k of Delta_0^+ u Delta_2
    sufficient: bool
    scan_sufficient: bool
    k_negative: bool  # <gamma + rho_k, mu^vee> < 0

    @property
    def agrees(self) -> bool:
        return self.sufficient == self.scan_sufficient


def _beta_nu(g: Grading) -> tuple:
    """w0_l(nu) as a root (the maximal root of Delta_1)."""
    return max(g.delta[1], key=sum)


@lru_cache(maxsize=None)
def _complementary_coroots(g: Grading) -> tuple:
    d = g.datum
    return tuple(d.positive_coroots[d.root_index[a]] for a in g.delta[1] + g.delta[2])


@lru_cache(maxsize=None)
def _bound_coroots(g: Grading) -> tuple:
    return g.datum.coroot(g.mu), g.datum.coroot(_beta_nu(g))


def negativity(g, gamma: Sequence) -> NegativityReport:
    """Two-threshold sufficiency test, cross-checked by scanning Delta_1 u Delta_2.

    ``gamma`` must be l-dominant (non-negative labels off nu); the two
    thresholds only decide sufficiency for such weights.
    """
    g = _grading(g)
    d, lv = g.datum, g.levi
    gamma = tuple(gamma)
    if len(gamma) != d.rank:
        raise ValueError(f"expected {d.rank} labels, got {len(gamma)}")
    if any(x < 0 for j, x in enumerate(gamma) if j != g.i):
        raise ValueError(f"{gamma} is not l-dominant")
    g0, t = decompose_gamma(g, gamma)
    rho = d.rho
    nstar = g.nu_star
    mu_c, beta_c = _bound_coroots(g)
    base = _add(g0, rho)
    t_mu = -_pair(base, mu_c) / _pair(nstar, mu_c)
    t_nu = -_pair(base, beta_c) / _pair(nstar, beta_c)
    rk, rpk = lv.k_embedding.rho, lv.psik_embedding.rho
    k_mu = -_pair(_add(g0, rpk), mu_c) / _pair(nstar, mu_c)
    k_mu_c = -_pair(_add(g0, rk), mu_c) / _pair(nstar, mu_c)
    shifted = _add(gamma, rho)
    scan = all(_pair(shifted, c) < 0 for c in _complementary_coroots(g))
    return NegativityReport(
        gamma=gamma,
        gamma0=g0,
        t=t,
        t_bound_mu=_norm(t_mu),
        t_bound_nu=_norm(t_nu),
        k_bound_mu=_norm(k_mu),
        k_bound_mu_compact=_norm(k_mu_c),
        sufficient=t < t_mu and t < t_nu,
        scan_sufficient=scan,
        k_negative=_pair(_add(gamma, rk), mu_c) < 0,
    )


@dataclass(frozen=True)
class BoundForm:
    """``coefficients . (labels of gamma0 off nu) + constant``."""

    coefficients: tuple
    constant: Fraction | int
    nodes: tuple  # 1-based indices of the coefficients

    def __str__(self):
        terms = " + ".join(f"({c})*n{j}" for c, j in zip(self.coefficients, self.nodes) if c)
        return f"{terms} + ({self.constant})" if terms else str(self.constant)


def bound_forms(g) -> dict[str, BoundForm]:
    """The thresholds as affine functions of the labels of gamma0."""
    g = _grading(g)
    d, lv = g.datum, g.levi
    n = d.rank
    nodes = [j for j in range(n) if j != g.i]
    out = {}
    mu_c = d.coroot(g.mu)
    beta_c = d.coroot(_beta_nu(g))
    for name, shift, cor in (("t_bound_mu", d.rho, mu_c),
                             ("t_bound_nu", d.rho, beta_c),
                             ("k_bound_mu", lv.psik_embedding.rho, mu_c),
                             ("k_bound_mu_compact", lv.k_embedding.rho, mu_c)):
        den = _pair(g.nu_star, cor)
        coeffs = tuple(_norm(-Fraction(cor[j]) / den) for j in nodes)
        out[name] = BoundForm(coeffs, _norm(-_pair(shift, cor) / den), tuple(j + 1 for j in nodes))
    return out


def gamma_k(g, gamma0: Sequence, k: int) -> tuple:
    g = _grading(g)
    return tuple(-k if j == g.i else x for j, x in enumerate(gamma0))


@dataclass(frozen=True)
class HCParameter:
    labels: tuple
    nonsingular: bool


def hc_parameter(g, gamma0: Sequence, k: int) -> HCParameter:
    g = _grading(g)
    if gamma0[g.i] != 0:
        raise ValueError("gamma0 must have zero nu-label")
    lam = _add(gamma_k(g, gamma0, k), g.datum.rho)
    ok = all(_pair(lam, c) != 0 for c in g.datum.positive_coroots)
    return HCParameter(lam, ok)


def sufficient_k_min(g, gamma0: Sequence) -> int:
    """Smallest integer k >= 0 with gamma0 - k nu* sufficiently negative."""
    g = _grading(g)
    rep = negativity(g, gamma_k(g, gamma0, 0))
    bound = min(rep.t_bound_mu, rep.t_bound_nu)
    # t = -k < bound  <=>  k > -bound
    k = int(Fraction(-bound).__floor__()) + 1
    return max(k, 0)


# ---------------------------------------------------------------------------
# Bott-Borel-Weil on Y


@dataclass(frozen=True)
class BBWResult:
    degree: int
    hw: tuple  # ambient labels, dominant for Delta^+(k)


def bbw_on_Y(g, phi: Sequence) -> BBWResult | None:
    """BBW for the bundle induced from the l-module with highest weight ``phi``.

    ``phi`` is given in Levi coordinates.  Returns ``None`` when
    ``phi + rho_k`` is singular for k.
    """
    g = _grading(g)
    lv = g.levi
    amb = lv.from_levi(phi)
    if any(Fraction(x).denominator != 1 for x in amb):
        raise NonIntegralWeight(f"{phi} is not integral")
    return _bbw_ambient(g, amb)


def _bbw_ambient(g: Grading, amb) -> BBWResult | None:
    lv = g.levi
    rk = lv.k_embedding.rho
    v = _add(amb, rk)
    conj = lv.k_embedding.dominant_conjugate(v)
    if conj.singular:
        return None
    return BBWResult(conj.length, _sub(conj.dominant, rk))


# ---------------------------------------------------------------------------
# K-type spectrum


@dataclass(frozen=True)
class KType:
    m: int
    hw_k1: tuple
    hw_k2: tuple
    multiplicity: int
    cohomology_degree: int
    dim: int
    central: Fraction | int  # nu*-component of the Levi constituents at level m
    hw: tuple = field(default=(), compare=False)  # ambient labels

    @property
    def key(self):
        return (self.m, self.hw_k1, self.hw_k2)


@dataclass
class SpectrumTable:
    case_id: str
    gamma0: tuple
    k: int
    m_max: int
    s: int
    rows: list
    lowest: KType | None
    forced: bool = False
    warnings: list = field(default_factory=list)
    degree_counts: dict = field(default_factory=dict)  # m -> {degree or None: count}
    levi_constituents: dict = field(default_factory=dict)  # m -> number of l-constituents
    max_levi_multiplicity: dict = field(default_factory=dict)

    def rows_at(self, m: int) -> list:
        return [r for r in self.rows if r.m == m]


def _k_component_data(lv):
    comps = [lv.k1_component] + list(lv.k2_components)
    return [(build_root_datum(c.type), len(c.nodes)) for c in comps]


def _ktype_dims(lv, k1, k2) -> tuple[int, int]:
    data = _k_component_data(lv)
    labels = list(k1) + list(k2)
    dims, pos = [], 0
    for datum, n in data:
        dims.append(weyl_dim(datum, tuple(labels[pos:pos + n])))
        pos += n
    return dims[0], prod(dims[1:])


def _case_id(x) -> str:
    return x.id if isinstance(x, BdsCase) else f"{x.datum.types[0]}:{x.nu}"


def ktype_spectrum(case, gamma0: Sequence, k: int, m_max: int = 6, force: bool = False) -> SpectrumTable:
    g = _grading(case)
    lv = g.levi
    gamma0 = tuple(gamma0)
    if gamma0[g.i] != 0:
        raise ValueError("gamma0 must have zero nu-label")
    if any(x < 0 for j, x in enumerate(gamma0) if j != g.i):
        raise ValueError("gamma0 must be l-dominant")
    gk = gamma_k(g, gamma0, k)
    rep = negativity(g, gk)
    warnings = []
    if not rep.sufficient:
        if not force:
            raise InsufficientNegativity(rep)
        warnings.append(
            f"FORCED: k={k} is not sufficiently positive "
            f"(t_bound_mu={rep.t_bound_mu}, t_bound_nu={rep.t_bound_nu}); "
            "cohomology outside degree s is reported as is")
    ld = lv.l_datum
    E = OrbitCharacter.irreducible(ld, lv.to_levi(gk))
    Vstar = u_character(g, -1)
    powers = sym_powers(ld, Vstar, m_max)
    rows = []
    counts, nconst, maxmult = {}, {}, {}
    for m in range(m_max + 1):
        C = tensor(ld, E, powers[m])
        acc = defaultdict(int)
        info = {}
        cnt = defaultdict(int)
        nconst[m] = len(C)
        maxmult[m] = max((mult for _, mult in C.items), default=0)
        for lw, mult in C.items:
            res = bbw_on_Y(g, lw)
            cnt[None if res is None else res.degree] += 1
            if res is None:
                continue
            if res.degree != g.s and not force:
                raise VanishingViolation(
                    f"{_case_id(case)}: m={m}, constituent {lw} lands in degree {res.degree} != s={g.s}")
            kl = lv.k_labels(res.hw)
            k1, k2 = lv.split_k(kl)
            key = (k1, k2, res.degree)
            acc[key] += mult
            info[key] = (res.hw, lw[-1])
        counts[m] = dict(cnt)
        for (k1, k2, deg), mult in sorted(acc.items()):
            hw, central = info[(k1, k2, deg)]
            d1, d2 = _ktype_dims(lv, k1, k2)
            rows.append(KType(m, k1, k2, mult, deg, d1 * d2, central, hw))
    lowest = None
    if rep.sufficient:
        lowest = lowest_ktype(g, gamma0, k)
        m0 = [r for r in rows if r.m == 0]
        if len(m0) != 1 or m0[0].multiplicity != 1 or m0[0].key != lowest.key:
            raise LowestKTypeMismatch(f"m=0 rows {m0} do not match the lowest K-type {lowest}")
    return SpectrumTable(_case_id(case), gamma0, k, m_max, g.s, rows, lowest, force and not rep.sufficient,
                         warnings, counts, nconst, maxmult)


def standard_order_lambda(g, gamma0: Sequence, k: int) -> tuple:
    """``Lambda = lambda + rho'_g - 2 rho'_k`` for the order defined by ``lambda``."""
    g = _grading(g)
    d = g.datum
    lam = hc_parameter(g, gamma0, k).labels
    rg, rk = [Fraction(0)] * d.rank, [Fraction(0)] * d.rank
    for r, c in zip(d.positive_roots, d.positive_coroots):
        sgn = 1 if _pair(lam, c) > 0 else -1
        lab = d.root_to_weight(r)
        for j in range(d.rank):
            rg[j] += Fraction(sgn * lab[j], 2)
            if r[g.i] % 2 == 0:
                rk[j] += Fraction(sgn * lab[j], 2)
    return tuple(_norm(a + b - 2 * c) for a, b, c in zip(lam, rg, rk))


def lowest_ktype(g, gamma0: Sequence, k: int) -> KType:
    """The m = 0 K-type, checked against the standard-order Lambda formula."""
    g = _grading(g)
    lv = g.levi
    gk = gamma_k(g, gamma0, k)
    rep = negativity(g, gk)
    if not rep.sufficient:
        raise InsufficientNegativity(rep)
    res = _bbw_ambient(g, gk)
    if res is None or res.degree != g.s:
        raise VanishingViolation(f"lowest K-type not in degree s: {res}")
    Lam = standard_order_lambda(g, gamma0, k)
    conj = lv.k_embedding.dominant_conjugate(Lam)
    if conj.dominant != res.hw:
        raise LowestKTypeMismatch(f"BBW gives {res.hw}, Lambda formula gives {conj.dominant}")
    k1, k2 = lv.split_k(lv.k_labels(res.hw))
    d1, d2 = _ktype_dims(lv, k1, k2)
    return KType(0, k1, k2, 1, res.degree, d1 * d2, lv.central(gk), res.hw)


# ---------------------------------------------------------------------------
# admissibility


@dataclass
class AdmissibilityReport:
    central_by_m: dict
    slope: Fraction | int
    monotone: bool
    disjoint: bool
    overlaps: list
    k1_totals: dict  # k1 labels -> total multiplicity (counted with k2 dimension)

    @property
    def ok(self) -> bool:
        return self.monotone and self.disjoint


def admissibility_check(table: SpectrumTable) -> AdmissibilityReport:
    by_m = defaultdict(set)
    central = {}
    for r in table.rows:
        by_m[r.m].add(r.hw_k1)
        central.setdefault(r.m, set()).add(r.central)
    cent = {m: next(iter(v)) for m, v in central.items() if len(v) == 1}
    ms = sorted(central)
    single = all(len(central[m]) == 1 for m in ms)
    slope = cent[ms[1]] - cent[ms[0]] if len(ms) > 1 and single else 0
    monotone = single and all(cent[b] - cent[a] == slope * (b - a) for a, b in zip(ms, ms[1:])) \
        and (len(ms) < 2 or slope != 0)
    overlaps = []
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            common = by_m[a] & by_m[b]
            if common:
                overlaps.append((a, b, sorted(common)))
    totals = defaultdict(int)
    for r in table.rows:
        d1 = _k1_dim_from_row(table, r)
        totals[r.hw_k1] += r.multiplicity * (r.dim // d1)
    return AdmissibilityReport(cent, _norm(Fraction(slope)), monotone, not overlaps, overlaps, dict(totals))


def _k1_dim_from_row(table, r: KType) -> int:
    from .bdscore import get_case
    lv = get_case(table.case_id).levi
    return _ktype_dims(lv, r.hw_k1, r.hw_k2)[0]


# ---------------------------------------------------------------------------
# sampling helpers


def sample_gamma0(g, rng: random.Random, max_label: int = 2) -> tuple:
    g = _grading(g)
    return tuple(0 if j == g.i else rng.randint(0, max_label) for j in range(g.datum.rank))


def sample_sufficient(g, rng: random.Random, count: int, max_label: int = 1, extra: int = 3) -> list:
    """``count`` pairs (gamma0, k) with k sufficiently positive."""
    g = _grading(g)
    out = []
    for _ in range(count):
        g0 = sample_gamma0(g, rng, max_label)
        k = sufficient_k_min(g, g0) + rng.randint(0, extra)
        out.append((g0, k))
    return out
