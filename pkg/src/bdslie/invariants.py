"""Self-duality, bilinear forms and relative invariants of (L, u_1).

Everything is decided on the semisimple part L' acting on u_1.  The center of
L acts on u_1 by a single scalar (every root of Delta_1 has n_nu = 1), so an
L'-invariant polynomial is automatically an L-semi-invariant.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .bdscore import BdsCase
from .charkernel import OrbitCharacter, alt_power, sym_powers, trivial_multiplicity
from .lattice import RootDatum, longest_element_image

DEFAULT_SEARCH_BOUND = 8
CENTER_NOTE = "center acts on u1 by one scalar, so L'-invariants are L-semi-invariants"


class InvariantMismatch(AssertionError):
    """Plethysm scan and closed form disagree."""


class InconsistentBilinear(AssertionError):
    pass


@dataclass(frozen=True)
class InvariantReport:
    case_id: str
    deg_tau1: int
    self_dual: bool
    bilinear: str  # none | symmetric | antisymmetric
    invariant_degree: int | None
    search_bound: int
    invariant_multiplicity: int = 0
    closed_form_degree: int | None = None
    notes: tuple = field(default=(CENTER_NOTE,))

    @property
    def verdict(self) -> str:
        if self.invariant_degree is None:
            return f"none up to degree {self.search_bound}"
        return f"degree {self.invariant_degree}"


def is_self_dual(d: RootDatum, hw) -> bool:
    hw = tuple(hw[: d.rank])
    return tuple(-x for x in longest_element_image(d, hw)) == hw


def bilinear_type(d: RootDatum, hw) -> str:
    c = OrbitCharacter.irreducible(d, tuple(hw[: d.rank]))
    sym = trivial_multiplicity(sym_powers(d, c, 2)[2])
    alt = trivial_multiplicity(alt_power(d, c, 2))
    if sym and alt:
        raise InconsistentBilinear("both S^2 and L^2 contain the trivial module")
    return "symmetric" if sym else "antisymmetric" if alt else "none"


def tau1_semisimple(case: BdsCase) -> OrbitCharacter:
    """tau_1 restricted to L' (central coordinate dropped)."""
    d = case.levi.l_datum
    return OrbitCharacter.irreducible(d, tuple(case.tau1_hw[: d.rank]))


def invariant_counts(case: BdsCase, max_deg: int = DEFAULT_SEARCH_BOUND) -> list[int]:
    """Trivial multiplicity in S^r(tau_1|L') for r = 0..max_deg."""
    c = tau1_semisimple(case)
    return [trivial_multiplicity(s) for s in sym_powers(c.datum, c, max_deg)]


def first_invariant_degree(case: BdsCase, max_deg: int = DEFAULT_SEARCH_BOUND) -> int | None:
    if max_deg < 2:
        raise ValueError("max_deg must be at least 2")
    counts = invariant_counts(case, max_deg)
    return next((r for r in range(1, max_deg + 1) if counts[r]), None)


def classical_invariant_degree(case: BdsCase) -> int | None:
    """Closed forms: SO(2p,r) gives 2p when p <= r; Sp(p,q) gives p when p is even and p <= 2q."""
    f, ell, p = case.family, case.rank, case.nu
    if f == "B":
        r = 2 * ell - 2 * p + 1
        return 2 * p if p <= r else None
    if f == "D":
        r = 2 * ell - 2 * p
        return 2 * p if p <= r else None
    if f == "C":
        q = ell - p
        return p if p % 2 == 0 and p <= 2 * q else None
    raise ValueError(f"{case.id} is not a classical case")


def relative_invariant_report(case: BdsCase, max_deg: int = DEFAULT_SEARCH_BOUND,
                              check_closed_form: bool = True) -> InvariantReport:
    d = case.levi.l_datum
    hw = tuple(case.tau1_hw[: d.rank])
    counts = invariant_counts(case, max_deg)
    deg = next((r for r in range(1, max_deg + 1) if counts[r]), None)
    closed = None
    if case.family in "BCD":
        closed = classical_invariant_degree(case)
        if check_closed_form:
            expected = closed if closed is not None and closed <= max_deg else None
            if expected != deg:
                raise InvariantMismatch(
                    f"{case.id}: plethysm finds {deg}, closed form gives {closed} (bound {max_deg})")
    sd = is_self_dual(d, hw)
    bil = bilinear_type(d, hw)
    if bil != "none" and not sd:
        raise InconsistentBilinear(f"{case.id}: bilinear form on a non-self-dual module")
    return InvariantReport(
        case_id=case.id,
        deg_tau1=case.deg_tau1,
        self_dual=sd,
        bilinear=bil,
        invariant_degree=deg,
        search_bound=max_deg,
        invariant_multiplicity=counts[deg] if deg else 0,
        closed_form_degree=closed,
    )
