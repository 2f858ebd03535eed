"""Unramified abelian covers C -> C' with deck group G: the dimension ledger.

Everything is driven by the cover datum (G, g'), g' >= 2. The per-character
Hodge multiplicities of H^1(C) use the balanced model: the trivial
character carries (g', g') and every nontrivial character (g'-1, g'-1).
That model is an input assumption and every report says so.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclo import euler_phi
from .groups import AbGroup, AlgebraSplit, GChar, RatIrrep, cached_split, characters
from .hodge import FreeModClaim, GHodge, WeilSpace, wedge_top_over_algebra

BALANCED_MODEL_NOTE = (
    "H^1 multiplicities use the balanced model: (g'-1, g'-1) for every nontrivial "
    "character, (g', g') for the trivial one"
)


@dataclass(frozen=True)
class CoverDatum:
    group: AbGroup
    base_genus: int

    def __post_init__(self):
        if self.base_genus < 2:
            raise ValueError(
                f"base genus must satisfy g(C') >= 2, got {self.base_genus} "
                "(genus 0 has no nontrivial unramified covers; genus 1 gives a trivial Prym)"
            )

    @property
    def h(self) -> int:
        return 2 * self.base_genus - 2


def total_genus(D: CoverDatum) -> int:
    """g(C) = |G| (g' - 1) + 1, from chi_top(C) = |G| chi_top(C')."""
    return D.group.order * (D.base_genus - 1) + 1


def h1_cover(D: CoverDatum) -> GHodge:
    G, g = D.group, D.base_genus
    mult = {}
    for chi in characters(G):
        n = g if chi.is_trivial() else g - 1
        mult[(chi, (1, 0))] = n
        mult[(chi, (0, 1))] = n
    return GHodge(G, 1, mult)


@dataclass(frozen=True)
class PrymLedger:
    datum: CoverDatum
    total_genus: int
    prym_dim: int
    per_irrep_dims: tuple[tuple[RatIrrep, int], ...]
    weil: WeilSpace

    def nontrivial_sum(self) -> int:
        return sum(d for O, d in self.per_irrep_dims if not O.is_trivial())


def prym_ledger(D: CoverDatum, h1: GHodge | None = None, split: AlgebraSplit | None = None) -> PrymLedger:
    """Dimensions of the Prym variety and of its isotypic pieces A_V.

    The piece for an orbit with field Q(zeta_f) has dimension phi(f)(g'-1);
    the trivial orbit accounts for J(C') itself.
    """
    G, g = D.group, D.base_genus
    split = split or cached_split(G)
    h1 = h1 if h1 is not None else h1_cover(D)
    dims = []
    for O in split.factors:
        per_char = {h1.multiplicity(chi, 1, 0) for chi in O.orbit}
        if len(per_char) != 1:
            raise ArithmeticError(f"orbit {O} has unequal (1,0)-multiplicities {per_char}")
        dims.append((O, O.degree * per_char.pop()))
    gC = total_genus(D)
    prym = gC - g
    nt = sum(d for O, d in dims if not O.is_trivial())
    if dims[0][1] != g or g + nt != gC:
        raise ArithmeticError(f"isogeny ledger fails: {g} + {nt} != {gC}")
    weil = wedge_top_over_algebra(FreeModClaim.from_h1(h1, rank=D.h), split)
    return PrymLedger(D, gC, prym, tuple(dims), weil)


@dataclass(frozen=True)
class SchoenPrimitive:
    b_prim_dim: int
    u_prim_dim: int
    tangent_multiplicities: tuple[tuple[int, int], ...]  # (k, mult) for eigenvalue exp(2 pi i k/m)
    orbit: RatIrrep


def schoen_primitive(D: CoverDatum) -> SchoenPrimitive:
    """The primitive piece of a cyclic cover Z/m: characters of order exactly m."""
    G = D.group
    if not G.is_cyclic() or G.order < 2:
        raise ValueError(f"primitive specialization needs a nontrivial cyclic group, got {G}")
    m = G.order
    O = next(O for O in cached_split(G).nontrivial_factors if O.field_conductor == m)
    h1 = h1_cover(D)
    tangent = tuple(sorted((chi.coords[0], h1.multiplicity(chi, 1, 0)) for chi in O.orbit))
    return SchoenPrimitive(
        b_prim_dim=euler_phi(m) * (D.base_genus - 1),
        u_prim_dim=euler_phi(m),
        tangent_multiplicities=tangent,
        orbit=O,
    )


class EnumerationLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class LatticeCheck:
    order_N: int
    index: int
    n_is_subgroup: bool
    index_ok: bool
    g0_isomorphic: bool
    witness: str

    @property
    def ok(self) -> bool:
        return self.n_is_subgroup and self.index_ok and self.g0_isomorphic

    def __bool__(self):
        return self.ok


def _g0_vector(G: AbGroup, x, h: int, embedding: str):
    zero = G.zero()
    if embedding == "antidiagonal":
        return (x, G.neg(x)) + (zero,) * (h - 2)
    if embedding == "coordinate":
        return (x,) + (zero,) * (h - 1)
    raise ValueError(f"unknown G_0 embedding {embedding!r}")


def group_lattice_check(
    D: CoverDatum, cap: int = 10**6, embedding: str = "antidiagonal", h: int | None = None
) -> LatticeCheck:
    """Enumerate G^h and check N = {sum t_k = 0} and the map G_0 -> G^h / N.

    ``embedding`` picks G_0 inside G^h: ``"antidiagonal"`` is
    {(g, -g, 0, ..., 0)}, ``"coordinate"`` is {(g, 0, ..., 0)}.
    """
    G = D.group
    h = D.h if h is None else h
    size = G.order ** h
    if size > cap:
        raise EnumerationLimitError(f"|G|^h = {size} exceeds the cap {cap}")
    d = np.array(G.invariant_factors, dtype=np.int64)
    r = G.rank
    # all of G^h as an (size, h, r) coordinate array, mixed-radix order
    radices = np.tile(d, h)
    n_coords = h * r
    if n_coords:
        grids = np.indices(tuple(radices), dtype=np.int64).reshape(n_coords, -1).T
    else:
        grids = np.zeros((1, 0), dtype=np.int64)
    weights = np.ones(n_coords, dtype=np.int64)
    for i in range(n_coords - 2, -1, -1):
        weights[i] = weights[i + 1] * radices[i + 1]

    def encode(coords):
        return (coords % radices) @ weights if n_coords else np.zeros(len(coords), dtype=np.int64)

    def vec(tup):
        return np.array([c for x in tup for c in x], dtype=np.int64)

    sums = grids.reshape(size, h, r).sum(axis=1) % d if r else np.zeros((size, 0), dtype=np.int64)
    in_N = ~sums.any(axis=1)
    order_N = int(in_N.sum())

    # generators (g, 0, .., -g at slot k, ..) of the candidate subgroup
    gens = [
        _g_at(G, gen, 0, k, h) for gen in G.generators() for k in range(1, h)
    ]
    members = np.flatnonzero(in_N)
    closed = all(in_N[encode(grids[members] + vec(s))].all() for s in gens)
    # breadth-first search from 0 along the generators must reach all of N
    seen = np.zeros(size, dtype=bool)
    seen[0] = True
    frontier = np.array([0])
    while frontier.size:
        nxt = np.concatenate([encode(grids[frontier] + vec(s)) for s in gens]) if gens else np.array([], dtype=np.int64)
        nxt = np.unique(nxt)
        nxt = nxt[~seen[nxt]]
        seen[nxt] = True
        frontier = nxt
    generated = bool((seen == in_N).all())
    n_is_subgroup = bool(in_N[0]) and closed and generated

    index = size // order_N
    index_ok = size % order_N == 0 and index == G.order

    images = [int(encode(vec(_g0_vector(G, x, h, embedding))[None, :])[0]) for x in G.elements]
    in_kernel = [x for x, code in zip(G.elements, images) if in_N[code] and any(x)]
    g0_iso = index_ok and not in_kernel
    if in_kernel:
        witness = f"{len(in_kernel)} nonzero elements of G_0 ({embedding}) lie in N, e.g. {in_kernel[0]}"
    elif not index_ok:
        witness = f"index {index} != |G| = {G.order}"
    elif not n_is_subgroup:
        witness = "N is not closed under addition"
    else:
        witness = ""
    return LatticeCheck(order_N, index, n_is_subgroup, index_ok, g0_iso, witness)


def _g_at(G: AbGroup, x, i: int, j: int, h: int):
    zero = G.zero()
    out = [zero] * h
    out[i] = x
    out[j] = G.neg(x)
    return tuple(out)


def per_character_table(D: CoverDatum) -> list[tuple[GChar, int, int]]:
    H = h1_cover(D)
    return [(chi, H.multiplicity(chi, 1, 0), H.multiplicity(chi, 0, 1)) for chi in characters(D.group)]


def grid_data(D: CoverDatum) -> dict:
    """Flat numbers for tables: |G|, g', g, prym dim, dim U."""
    L = prym_ledger(D)
    return {
        "order": D.group.order,
        "invariant_factors": D.group.invariant_factors,
        "base_genus": D.base_genus,
        "total_genus": L.total_genus,
        "prym_dim": L.prym_dim,
        "dim_U": L.weil.dimension,
    }
