"""The lattice spanned by the fibre classes Q_t, t in G, on W.

The Q_t are disjoint with nonzero self-intersection, so the intersection
form on their span is c * Identity for an unknown nonzero rational c.
Everything exported here is checked not to depend on c.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .cyclo import CycloNum, euler_phi, units_mod
from .groups import AbGroup, AlgebraSplit, GChar, GElem, RatIrrep


@dataclass(frozen=True)
class CycleVec:
    """sum_t coeffs[t] Q_t, coefficients ordered like ``group.elements``."""

    group: AbGroup
    coeffs: tuple[CycloNum, ...]

    def __post_init__(self):
        m = self.group.exponent
        if len(self.coeffs) != self.group.order:
            raise ValueError("one coefficient per group element is required")
        out = []
        for c in self.coeffs:
            if not isinstance(c, CycloNum):
                c = CycloNum.rational(c, m)
            elif c.conductor != m:
                c = c.minimal().lift(m)
            out.append(c)
        object.__setattr__(self, "coeffs", tuple(out))

    @classmethod
    def basis(cls, G: AbGroup, t: GElem) -> "CycleVec":
        return cls(G, tuple(int(s == t) for s in G.elements))

    @classmethod
    def from_rational(cls, G: AbGroup, coeffs: Sequence[Fraction | int]) -> "CycleVec":
        return cls(G, tuple(CycloNum.rational(c, G.exponent) for c in coeffs))

    def coeff(self, t: GElem) -> CycloNum:
        return self.coeffs[self.group.index[t]]

    def __add__(self, other: "CycleVec") -> "CycleVec":
        return CycleVec(self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycleVec") -> "CycleVec":
        return CycleVec(self.group, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "CycleVec":
        return CycleVec(self.group, tuple(c * a for a in self.coeffs))

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def rational_coeffs(self) -> tuple[Fraction, ...]:
        return tuple(c.to_rational() for c in self.coeffs)

    def galois_fixed(self) -> bool:
        """Every coefficient is fixed by every Galois index of Q(zeta_m)."""
        m = self.group.exponent
        return all(c.galois(k) == c for c in self.coeffs for k in units_mod(m))


@dataclass(frozen=True)
class CycleLattice:
    group: AbGroup
    gram_scale: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "gram_scale", Fraction(self.gram_scale))
        if self.gram_scale == 0:
            raise ValueError("the Q_t have nonzero self-intersection; gram_scale must be nonzero")

    def pairing(self, u: CycleVec, v: CycleVec) -> CycloNum:
        s = CycloNum.rational(0, self.group.exponent)
        for a, b in zip(u.coeffs, v.coeffs):
            s = s + a * b
        return s * self.gram_scale


def g_act(s: GElem, v: CycleVec) -> CycleVec:
    """Push forward along s: Q_t -> Q_{s+t}."""
    G = v.group
    out = [None] * G.order
    for t, c in zip(G.elements, v.coeffs):
        out[G.index[G.add(s, t)]] = c
    return CycleVec(G, tuple(out))


def diagonal_class(L: CycleLattice) -> CycleVec:
    """sum_t Q_t, the pullback of the fibre over the canonical point."""
    return CycleVec.from_rational(L.group, [1] * L.group.order)


def u_subspace(L: CycleLattice) -> list[CycleVec]:
    """Rational basis of the orthogonal complement of the diagonal class."""
    G = L.group
    diag = diagonal_class(L)
    row = [L.pairing(diag, CycleVec.basis(G, t)).to_rational() for t in G.elements]
    return [CycleVec.from_rational(G, v) for v in linalg.nullspace([row], G.order)]


def chi_pushforward(chi: GChar, L: CycleLattice) -> CycleVec:
    """sum_t chi(-t) Q_t, which spans the chi-isotypic line."""
    G = L.group
    return CycleVec(G, tuple(chi(G.neg(t)) for t in G.elements))


def rational_orbit_basis(O: RatIrrep, L: CycleLattice) -> list[CycleVec]:
    """Galois descent of the chi-eigenvector to phi(f) rational vectors.

    For alpha running over the power basis 1, z, ..., z^{phi(f)-1} of
    Q(zeta_f), emit the vector whose Q_t coefficient is
    Tr_{Q(zeta_f)/Q}(alpha * chi(-t)), chi the orbit representative.
    """
    if O.is_trivial():
        raise ValueError("the trivial orbit spans the diagonal class, not U")
    G = L.group
    chi = O.representative
    f = O.field_conductor
    out = []
    for j in range(euler_phi(f)):
        alpha = CycloNum.zeta(f, j)
        coeffs = [(alpha * chi.value_in_own_field(G.neg(t))).trace() for t in G.elements]
        out.append(CycleVec.from_rational(G, coeffs))
    return out


@dataclass(frozen=True)
class UDecomposition:
    lattice: CycleLattice
    blocks: tuple[tuple[RatIrrep, tuple[CycleVec, ...]], ...]

    def basis(self) -> list[CycleVec]:
        return [v for _, vs in self.blocks for v in vs]


def assemble_u(L: CycleLattice, split: AlgebraSplit) -> UDecomposition:
    """Concatenate the descended bases of all nontrivial orbits."""
    blocks = tuple((O, tuple(rational_orbit_basis(O, L))) for O in split.nontrivial_factors)
    return UDecomposition(L, blocks)


def rational_matrix(vectors: Sequence[CycleVec]) -> list[list[Fraction]]:
    return [list(v.rational_coeffs()) for v in vectors]


def cyclo_matrix(vectors: Sequence[CycleVec]) -> list[list[CycloNum]]:
    return [list(v.coeffs) for v in vectors]


def check_u_decomposition(U: UDecomposition) -> list[str]:
    """Problems with U as a Q-basis of the augmentation-zero space; empty when fine."""
    L = U.lattice
    G = L.group
    problems = []
    basis = U.basis()
    if not all(v.is_rational() for v in basis):
        problems.append("some descended vector is not rational")
        return problems
    target = rational_matrix(u_subspace(L))
    mat = rational_matrix(basis)
    if len(basis) != G.order - 1 or not linalg.same_span(mat, target):
        problems.append(f"descended vectors do not form a basis of U (got {len(basis)})")
    for i, (O, vs) in enumerate(U.blocks):
        for P, ws in U.blocks[i + 1:]:
            if any(not L.pairing(v, w).is_zero() for v in vs for w in ws):
                problems.append(f"blocks {O} and {P} are not orthogonal")
    return problems
