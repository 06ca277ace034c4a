"""Exact root-system and character computations for Borel-de Siebenthal real forms."""
from .lattice import (Embedding, RootDatum, SimpleType, build_root_datum, classify_dynkin, dominant_conjugate,
                      highest_root, semisimple_datum, weyl_orbit)
from .charkernel import (OrbitCharacter, alt_power, freudenthal, sym_power, sym_powers, tensor,
                         trivial_multiplicity, weyl_dim)
from .bdscore import BdsCase, classical_cases, enumerate_cases, exceptional_cases, get_case, grade, make_case
from .invariants import InvariantReport, relative_invariant_report
from .spectrum import (bound_forms, ktype_spectrum, lowest_ktype, negativity, rho_parts,
                       sufficient_k_min)

__version__ = "0.1.0"
