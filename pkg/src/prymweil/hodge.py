"""G-graded pure Hodge structures as multiplicity tables.

A :class:`GHodge` records, for every character chi and Hodge type (p, q),
how often chi occurs in H^{p,q}. There are no lattices or periods: every
question asked here is about dimensions, types and the group action.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .cyclo import units_mod
from .groups import AbGroup, AlgebraSplit, GChar, RatIrrep, cached_split

HodgeType = tuple[int, int]


@dataclass(frozen=True)
class GHodge:
    group: AbGroup
    weight: int
    mult: Mapping[tuple[GChar, HodgeType], int] = field(hash=False)

    def __post_init__(self):
        clean = {}
        for (chi, (p, q)), n in self.mult.items():
            if chi.group != self.group:
                raise ValueError(f"{chi} is not a character of {self.group}")
            if p + q != self.weight:
                raise ValueError(f"type ({p},{q}) has the wrong weight for {self.weight}")
            if n < 0:
                raise ValueError(f"negative multiplicity {n} at {chi}, ({p},{q})")
            if n:
                clean[(chi, (p, q))] = n
        for (chi, (p, q)), n in clean.items():
            if clean.get((chi.conj(), (q, p)), 0) != n:
                raise ValueError(
                    f"conjugation symmetry fails: mult({chi},({p},{q})) = {n} but "
                    f"mult({chi.conj()},({q},{p})) = {clean.get((chi.conj(), (q, p)), 0)}"
                )
        object.__setattr__(self, "mult", clean)

    def multiplicity(self, chi: GChar, p: int, q: int) -> int:
        return self.mult.get((chi, (p, q)), 0)

    def char_total(self, chi: GChar) -> int:
        return sum(n for (c, _), n in self.mult.items() if c == chi)

    def total_dim(self) -> int:
        return sum(self.mult.values())

    def types(self) -> list[HodgeType]:
        return sorted({t for (_, t) in self.mult})

    def restrict(self, chars: Iterable[GChar]) -> "GHodge":
        keep = set(chars)
        return GHodge(self.group, self.weight, {k: n for k, n in self.mult.items() if k[0] in keep})

    def nontrivial_part(self) -> "GHodge":
        return GHodge(
            self.group, self.weight, {k: n for k, n in self.mult.items() if not k[0].is_trivial()}
        )

    def direct_sum(self, other: "GHodge") -> "GHodge":
        if other.group != self.group or other.weight != self.weight:
            raise ValueError("direct sum needs the same group and weight")
        out = dict(self.mult)
        for k, n in other.mult.items():
            out[k] = out.get(k, 0) + n
        return GHodge(self.group, self.weight, out)


def tate_twist(H: GHodge, k: int) -> GHodge:
    """H(-k): weight + 2k, each (p, q) moved to (p + k, q + k)."""
    return GHodge(
        H.group, H.weight + 2 * k, {(chi, (p + k, q + k)): n for (chi, (p, q)), n in H.mult.items()}
    )


class NotFreeError(ValueError):
    """The nontrivial part is not free over Q[G]_nt."""


@dataclass(frozen=True)
class FreeModClaim:
    """A weight-1 structure whose nontrivial part is free of ``rank`` over Q[G]_nt."""

    base: GHodge
    rank: int

    def __post_init__(self):
        if self.base.weight != 1:
            raise ValueError(f"free-module claim needs weight 1, got {self.base.weight}")
        if self.rank < 1:
            raise ValueError(f"rank {self.rank} is degenerate; the base genus must be >= 2")
        if any(chi.is_trivial() for chi, _ in self.base.mult):
            raise ValueError("base must be restricted to nontrivial characters")
        G = self.base.group
        bad = [
            (str(chi), self.base.char_total(chi))
            for chi in _nontrivial_chars(G)
            if self.base.char_total(chi) != self.rank
        ]
        if bad:
            raise NotFreeError(f"multiplicities differ from rank {self.rank}: {bad}")

    @classmethod
    def from_h1(cls, H: GHodge, rank: int | None = None) -> "FreeModClaim":
        """Claim for the nontrivial part of ``H``; the rank defaults to the common multiplicity."""
        nt = H.nontrivial_part()
        if rank is None:
            totals = {nt.char_total(chi) for chi in _nontrivial_chars(H.group)}
            if len(totals) > 1:
                raise NotFreeError(f"unequal multiplicities {sorted(totals)}")
            rank = totals.pop() if totals else 0
        return cls(nt, rank)


def _nontrivial_chars(G: AbGroup) -> list[GChar]:
    return [GChar(G, c) for c in G.elements if any(c)]


@dataclass(frozen=True)
class WeilPiece:
    """Rank one over F = Q(zeta_f) in the top wedge; type per Galois index."""

    orbit: RatIrrep
    types: tuple[tuple[int, HodgeType], ...]

    @property
    def dimension(self) -> int:
        return self.orbit.degree


@dataclass(frozen=True)
class WeilSpace:
    group: AbGroup
    rank: int
    pieces: tuple[WeilPiece, ...]

    @property
    def dimension(self) -> int:
        return sum(p.dimension for p in self.pieces)


def wedge_top_over_algebra(M: FreeModClaim, split: AlgebraSplit | None = None) -> WeilSpace:
    """Top exterior power of M over Q[G]_nt, one rank-one piece per field factor.

    At the Galois index k of the factor with representative chi, the piece
    has type (n, h - n) with n the (1,0)-multiplicity of chi**k.
    """
    G = M.base.group
    split = split or cached_split(G)
    h = M.rank
    pieces = []
    for O in split.nontrivial_factors:
        types = []
        for k in units_mod(O.field_conductor):
            chi = O.character_for_index(k)
            n10 = M.base.multiplicity(chi, 1, 0)
            n01 = M.base.multiplicity(chi, 0, 1)
            assert n10 + n01 == h
            types.append((k, (n10, n01)))
        pieces.append(WeilPiece(O, tuple(types)))
    return WeilSpace(G, h, tuple(pieces))


@dataclass(frozen=True)
class HodgeVerdict:
    ok: bool
    failures: tuple[tuple[str, int, HodgeType], ...] = ()

    def __bool__(self):
        return self.ok


def is_hodge_space(W: WeilSpace) -> HodgeVerdict:
    """Every piece must have type (h/2, h/2) at every Galois index.

    That is the condition n_sigma = n_conj(sigma); failures name the orbit
    representative, the Galois index and the offending type.
    """
    failures = []
    for piece in W.pieces:
        for k, (p, q) in piece.types:
            if p != q:
                failures.append((str(piece.orbit.representative), k, (p, q)))
    return HodgeVerdict(not failures, tuple(failures))


def dim_weil(W: WeilSpace) -> int:
    return W.dimension


def unbalance(H: GHodge, chi: GChar, units: int = 1) -> GHodge:
    """Move ``units`` of (1,0)-multiplicity from chi to its conjugate.

    The result stays conjugation-symmetric; it is meant for mutation tests.
    Real characters (chi = conj chi) cannot be unbalanced this way.
    """
    if H.weight != 1:
        raise ValueError("unbalance works on weight-1 structures")
    cb = chi.conj()
    if cb == chi:
        raise ValueError(f"{chi} is real; conjugation symmetry forbids unbalancing it")
    m = dict(H.mult)

    def bump(c, t, d):
        m[(c, t)] = m.get((c, t), 0) + d

    bump(chi, (1, 0), -units)
    bump(chi, (0, 1), units)
    bump(cb, (1, 0), units)
    bump(cb, (0, 1), -units)
    return GHodge(H.group, H.weight, m)
