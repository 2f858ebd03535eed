"""Exact arithmetic engine for Weil classes on abelian covers of curves.

The package builds, from a finite abelian group G and a base genus g' >= 2,
the exact dimension ledgers attached to an unramified G-cover C -> C':
the splitting of Q[G] into cyclotomic fields, the Prym variety and its
isotypic pieces, the Weil space and its Hodge types, the Betti numbers of
Sym^h(C') and of the cover W, and a Galois-descended rational basis of the
fibre-class lattice.
"""

from .cyclo import CycloNum, EtaleAlg, cyclotomic_polynomial, euler_phi
from .groups import AbGroup, GChar, RatIrrep, characters, galois_orbits, normalize_group, split_group_algebra
from .hodge import FreeModClaim, GHodge, dim_weil, is_hodge_space, wedge_top_over_algebra
from .cover import CoverDatum, group_lattice_check, prym_ledger, schoen_primitive, total_genus
from .symprod import PoincarePoly, cohomology_of_W, leray_sym, macdonald_middle, poincare_sym
from .cycles import CycleLattice, CycleVec, assemble_u, chi_pushforward, rational_orbit_basis

__all__ = [
    "AbGroup", "CoverDatum", "CycleLattice", "CycleVec", "CycloNum", "EtaleAlg", "FreeModClaim",
    "GChar", "GHodge", "PoincarePoly", "RatIrrep", "assemble_u", "characters", "chi_pushforward",
    "cohomology_of_W", "cyclotomic_polynomial", "dim_weil", "euler_phi", "galois_orbits",
    "group_lattice_check", "is_hodge_space", "leray_sym", "macdonald_middle", "normalize_group",
    "poincare_sym", "prym_ledger", "rational_orbit_basis", "schoen_primitive", "split_group_algebra",
    "total_genus", "wedge_top_over_algebra",
]
