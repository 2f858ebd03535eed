"""Finite abelian groups, their characters, and the splitting of Q[G].

A group is given by invariant factors ``d_1 | d_2 | ... | d_r``; elements
and characters are coordinate tuples. A character with coordinates
``(a_1, ..., a_r)`` sends ``x`` to ``zeta_m ** sum(a_i x_i m / d_i)``
where ``m = d_r`` is the exponent, so every character value lives in one
common field Q(zeta_m).

Galois orbits of characters (``a -> k a`` for k a unit mod m) are the
irreducible rational representations; each contributes one field factor
Q(zeta_f) of Q[G], f being the common order of the characters in the orbit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, prod
from typing import Iterator, Sequence

from .cyclo import CycloNum, EtaleAlg, euler_phi, lcm, units_mod

GElem = tuple  # coordinates (x_1, ..., x_r), x_i mod d_i


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _invariant_factors_from_prime_powers(powers: dict[int, list[int]]) -> tuple[int, ...]:
    # powers[p] = list of exponents of the cyclic p-parts
    length = max((len(v) for v in powers.values()), default=0)
    cols = []
    for p, exps in powers.items():
        exps = sorted(exps, reverse=True) + [0] * (length - len(exps))
        cols.append([p ** e for e in exps])
    factors = [prod(row) for row in zip(*cols)] if cols else []
    return tuple(sorted(f for f in factors if f > 1))


@dataclass(frozen=True)
class AbGroup:
    """A finite abelian group in invariant-factor form.

    The trivial group has no invariant factors.
    """

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        inv = tuple(self.invariant_factors)
        object.__setattr__(self, "invariant_factors", inv)
        for d in inv:
            if d < 2:
                raise ValueError(f"invariant factors must be >= 2, got {inv}")
        for a, b in zip(inv, inv[1:]):
            if b % a:
                raise ValueError(f"{inv} is not a divisibility chain; use normalize_group")

    @classmethod
    def trivial(cls) -> "AbGroup":
        return cls(())

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @cached_property
    def elements(self) -> tuple[GElem, ...]:
        return tuple(itertools.product(*(range(d) for d in self.invariant_factors)))

    @cached_property
    def index(self) -> dict[GElem, int]:
        return {x: i for i, x in enumerate(self.elements)}

    def zero(self) -> GElem:
        return (0,) * self.rank

    def add(self, x: GElem, y: GElem) -> GElem:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.invariant_factors))

    def neg(self, x: GElem) -> GElem:
        return tuple(-a % d for a, d in zip(x, self.invariant_factors))

    def scale(self, k: int, x: GElem) -> GElem:
        return tuple(k * a % d for a, d in zip(x, self.invariant_factors))

    def generators(self) -> list[GElem]:
        return [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]

    def element_order(self, x: GElem) -> int:
        out = 1
        for a, d in zip(x, self.invariant_factors):
            out = lcm(out, d // gcd(a, d))
        return out

    def is_cyclic(self) -> bool:
        return self.rank <= 1

    def __str__(self):
        if not self.invariant_factors:
            return "1"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


def normalize_group(factors: Sequence[int]) -> AbGroup:
    """Invariant-factor form of the direct product of Z/f for f in ``factors``.

    >>> normalize_group([2, 3]).invariant_factors
    (6,)
    >>> normalize_group([4, 2, 2]).invariant_factors
    (2, 2, 4)
    """
    powers: dict[int, list[int]] = {}
    for f in factors:
        if int(f) != f or f < 2:
            raise ValueError(f"group factors must be integers >= 2, got {f!r}")
        for p, e in factorize(int(f)).items():
            powers.setdefault(p, []).append(e)
    return AbGroup(_invariant_factors_from_prime_powers(powers))


def _partitions(n: int, largest: int | None = None) -> Iterator[list[int]]:
    if largest is None:
        largest = n
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def abelian_groups_of_order(n: int) -> list[AbGroup]:
    """All abelian groups of order n up to isomorphism, in a fixed order."""
    per_prime = [
        [(p, part) for part in _partitions(e)] for p, e in sorted(factorize(n).items())
    ]
    out = []
    for choice in itertools.product(*per_prime):
        out.append(AbGroup(_invariant_factors_from_prime_powers(dict(choice))))
    return sorted(out, key=lambda G: (len(G.invariant_factors), G.invariant_factors))


def abelian_groups_up_to(max_order: int) -> list[AbGroup]:
    return [G for n in range(1, max_order + 1) for G in abelian_groups_of_order(n)]


@dataclass(frozen=True)
class GChar:
    """A character of ``group``, stored at the conductor ``group.exponent``."""

    group: AbGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(a % d for a, d in zip(self.coords, self.group.invariant_factors))
        if len(coords) != self.group.rank:
            raise ValueError(f"character of {self.group} needs {self.group.rank} coordinates")
        object.__setattr__(self, "coords", coords)

    def exponent_at(self, x: GElem) -> int:
        """e with chi(x) = zeta_m ** e, m the group exponent."""
        m = self.group.exponent
        return sum(a * xi * (m // d) for a, xi, d in zip(self.coords, x, self.group.invariant_factors)) % m

    def __call__(self, x: GElem) -> CycloNum:
        return CycloNum.zeta(self.group.exponent, self.exponent_at(x))

    def value_in_own_field(self, x: GElem) -> CycloNum:
        """chi(x) as an element of Q(zeta_f), f = order of chi."""
        f = self.order
        return CycloNum.zeta(f, self.exponent_at(x) * f // self.group.exponent)

    @property
    def order(self) -> int:
        return self.group.element_order(self.coords)

    def is_trivial(self) -> bool:
        return not any(self.coords)

    def conj(self) -> "GChar":
        return GChar(self.group, tuple(-a for a in self.coords))

    def power(self, k: int) -> "GChar":
        return GChar(self.group, tuple(k * a for a in self.coords))

    def __str__(self):
        return "chi(" + ",".join(map(str, self.coords)) + ")"


def characters(G: AbGroup) -> list[GChar]:
    """All |G| characters in lexicographic coordinate order (trivial first)."""
    return [GChar(G, c) for c in G.elements]


@dataclass(frozen=True)
class RatIrrep:
    """One Galois orbit of characters, i.e. one irreducible rational representation.

    ``idempotent`` lists the rational coefficients of the central idempotent
    against ``group.elements``.
    """

    group: AbGroup
    orbit: tuple[GChar, ...]
    field_conductor: int
    idempotent: tuple[Fraction, ...] = field(repr=False)

    @property
    def representative(self) -> GChar:
        return self.orbit[0]

    @property
    def degree(self) -> int:
        return euler_phi(self.field_conductor)

    def is_trivial(self) -> bool:
        return self.representative.is_trivial()

    def character_for_index(self, k: int) -> GChar:
        """The orbit member rep ** k, k a unit mod the field conductor."""
        return self.representative.power(k)

    def __str__(self):
        f = self.field_conductor
        fld = "Q" if euler_phi(f) == 1 else f"Q(zeta_{f})"
        return f"[{self.representative}] ({fld})"


def _orbit_key(orbit: Sequence[GChar]):
    return (orbit[0].order, orbit[0].coords)


def rational_idempotent(orbit: Sequence[GChar], G: AbGroup) -> tuple[Fraction, ...]:
    """e_O(g) = (1/|G|) sum_{chi in O} chi(-g), checked to be rational."""
    m = G.exponent
    out = []
    for g in G.elements:
        s = CycloNum.rational(0, m)
        for chi in orbit:
            s = s + chi(G.neg(g))
        if not s.is_rational():
            raise ArithmeticError(f"orbit sum at {g} is not rational: {s}")
        out.append(s.to_rational() / G.order)
    return tuple(out)


def galois_orbits(G: AbGroup) -> list[RatIrrep]:
    """Partition the characters into Galois orbits.

    Each orbit is listed with its lexicographically smallest character first;
    orbits are sorted by (character order, representative coordinates).
    """
    m = G.exponent
    seen: set[tuple[int, ...]] = set()
    orbits = []
    for chi in characters(G):
        if chi.coords in seen:
            continue
        members = sorted({chi.power(k).coords for k in units_mod(m)})
        seen.update(members)
        orbits.append(tuple(GChar(G, c) for c in members))
    orbits.sort(key=_orbit_key)
    return [
        RatIrrep(G, orb, orb[0].order, rational_idempotent(orb, G)) for orb in orbits
    ]


# -- the group algebra Q[G] -------------------------------------------------

def ga_mul(G: AbGroup, a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Convolution product in Q[G], coefficients indexed by ``G.elements``."""
    out = [Fraction(0)] * G.order
    els, idx = G.elements, G.index
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[idx[G.add(els[i], els[j])]] += x * y
    return tuple(out)


def ga_one(G: AbGroup) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(i == 0)) for i in range(G.order))


@dataclass(frozen=True)
class AlgebraSplit:
    """Q[G] = Q x Q[G]_nt as a product of cyclotomic fields."""

    group: AbGroup
    trivial_factor: RatIrrep
    nontrivial_factors: tuple[RatIrrep, ...]

    @property
    def factors(self) -> tuple[RatIrrep, ...]:
        return (self.trivial_factor,) + self.nontrivial_factors

    @property
    def nontrivial_dimension(self) -> int:
        return sum(O.degree for O in self.nontrivial_factors)

    def etale_algebra(self) -> EtaleAlg:
        return EtaleAlg(O.field_conductor for O in self.factors)

    def fourier(self, a: Sequence[Fraction]) -> tuple[CycloNum, ...]:
        """The ring isomorphism Q[G] -> prod Q(zeta_f): a -> (rep_O(a))_O."""
        G = self.group
        out = []
        for O in self.factors:
            chi = O.representative
            f = O.field_conductor
            s = CycloNum.rational(0, f)
            for g, c in zip(G.elements, a):
                if c:
                    s = s + c * chi.value_in_own_field(g)
            out.append(s)
        return tuple(out)


def split_group_algebra(G: AbGroup) -> AlgebraSplit:
    """Split Q[G] and verify the idempotents are complete and orthogonal."""
    orbits = galois_orbits(G)
    if sum(O.degree for O in orbits) != G.order:
        raise ArithmeticError("field degrees do not add up to |G|")
    total = [Fraction(0)] * G.order
    for i, O in enumerate(orbits):
        total = [a + b for a, b in zip(total, O.idempotent)]
        if ga_mul(G, O.idempotent, O.idempotent) != O.idempotent:
            raise ArithmeticError(f"idempotent of {O} is not idempotent")
        for P in orbits[i + 1:]:
            if any(ga_mul(G, O.idempotent, P.idempotent)):
                raise ArithmeticError(f"idempotents of {O} and {P} are not orthogonal")
    if tuple(total) != ga_one(G):
        raise ArithmeticError("idempotents do not sum to 1")
    return AlgebraSplit(G, orbits[0], tuple(orbits[1:]))


@lru_cache(maxsize=64)
def cached_split(G: AbGroup) -> AlgebraSplit:
    return split_group_algebra(G)
