"""Betti-number bookkeeping for Sym^d(C'), the Abel-Jacobi fibration and W.

Two independent routes meet here. The Macdonald generating function gives
H*(Sym^d C') directly; the Leray ledger rebuilds H*(Sym^h C') and H*(W)
from the direct images of AJ_h: Sym^h C' -> J(C') and the cohomology of
rank-one local systems on the torus J(C'). The spectral sequence is taken
to degenerate at E_2, and only dimensions are tracked (the extension data
of the direct images is not modelled).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import comb
from typing import Iterable

from .cover import CoverDatum
from .cyclo import CycloNum
from .groups import AbGroup, GChar, characters
from . import linalg


class PoincarePoly(tuple):
    """Betti numbers b_0, b_1, ... as a tuple with trailing zeros removed."""

    def __new__(cls, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        if any(x < 0 for x in c):
            raise ValueError(f"Betti numbers must be nonnegative: {c}")
        return super().__new__(cls, c)

    def __add__(self, other):
        n = max(len(self), len(other))
        a = list(self) + [0] * (n - len(self))
        b = list(other) + [0] * (n - len(other))
        return PoincarePoly(x + y for x, y in zip(a, b))

    def __mul__(self, other):
        if not self or not other:
            return PoincarePoly()
        out = [0] * (len(self) + len(other) - 1)
        for i, x in enumerate(self):
            for j, y in enumerate(other):
                out[i + j] += x * y
        return PoincarePoly(out)

    def shift(self, k: int) -> "PoincarePoly":
        """Multiply by x^k."""
        return PoincarePoly([0] * k + list(self)) if self else PoincarePoly()

    def betti(self, n: int) -> int:
        return self[n] if 0 <= n < len(self) else 0

    def is_palindromic(self, top: int | None = None) -> bool:
        """b_n = b_{top - n}; ``top`` defaults to the degree."""
        top = len(self) - 1 if top is None else top
        return all(self.betti(n) == self.betti(top - n) for n in range(top + 1)) and len(self) <= top + 1

    def __repr__(self):
        return f"PoincarePoly({list(self)})"


def x_power(k: int) -> PoincarePoly:
    return PoincarePoly([0] * k + [1])


def geometric(k_max: int, step: int = 2) -> PoincarePoly:
    """1 + x^step + ... + x^(step*k_max); zero if k_max < 0."""
    out = PoincarePoly()
    for k in range(k_max + 1):
        out = out + x_power(step * k)
    return out


def poincare_jacobian(g: int) -> PoincarePoly:
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    return PoincarePoly(comb(2 * g, k) for k in range(2 * g + 1))


def poincare_sym(d: int, g: int) -> PoincarePoly:
    """Coefficient of t^d in (1 + x t)^{2g} / ((1 - t)(1 - x^2 t)).

    The series is multiplied out as a power series in t whose coefficients
    are polynomials in x, truncated above t^d.
    """
    if d < 0 or g < 0:
        raise ValueError(f"need d, g >= 0, got d={d}, g={g}")
    # series[j] is the x-polynomial coefficient of t^j
    series = [PoincarePoly([comb(2 * g, j)]).shift(j) for j in range(d + 1)]
    for factor in (PoincarePoly([1]), x_power(2)):  # 1/(1 - t), 1/(1 - x^2 t)
        acc = []
        running = PoincarePoly()
        for j in range(d + 1):
            running = running * factor + series[j]
            acc.append(running)
        series = acc
    return series[d]


@dataclass(frozen=True)
class MacdonaldSummand:
    wedge_degree: int
    twist: int
    dimension: int


@dataclass(frozen=True)
class MacdonaldMiddle:
    genus: int
    degree: int
    summands: tuple[MacdonaldSummand, ...]

    @property
    def total(self) -> int:
        return sum(s.dimension for s in self.summands)


def macdonald_middle(g: int, h: int | None = None) -> MacdonaldMiddle:
    """H^h(Sym^h C) = sum over 0 <= i <= h/2 of wedge^{h-2i} H^1(C) (-i), for C of genus g.

    ``h`` defaults to 2g - 2.
    """
    if h is None:
        if g < 2:
            raise ValueError(f"default h = 2g - 2 needs g >= 2, got {g}")
        h = 2 * g - 2
    summands = tuple(
        MacdonaldSummand(h - 2 * i, i, comb(2 * g, h - 2 * i)) for i in range(h // 2 + 1)
    )
    return MacdonaldMiddle(g, h, summands)


def proj_bundle_cohomology(d: int, g: int) -> PoincarePoly:
    """Betti numbers of a P^{d-g}-bundle over J(C'), valid for d >= 2g - 1."""
    if d < 2 * g - 1:
        raise ValueError(f"AJ_{d} is a projective bundle only for d >= 2g - 1 = {2 * g - 1}")
    return geometric(d - g) * poincare_jacobian(g)


# -- direct images of AJ_h ---------------------------------------------------

@dataclass(frozen=True)
class PushLayer:
    degree: int
    kind: str  # "free" (constant rank one) or "skyscraper" (rank one at the canonical point)
    twist: int


@dataclass(frozen=True)
class PushforwardModel:
    genus: int
    layers: tuple[PushLayer, ...]

    def layer(self, q: int) -> PushLayer | None:
        return next((L for L in self.layers if L.degree == q), None)


def aj_pushforward(g: int) -> PushforwardModel:
    """R^q(AJ_{2g-2})_* Q: constant Q(-k) for q = 2k <= 2g-4, the point sheaf at q = 2g-2."""
    if g < 2:
        raise ValueError(f"need g >= 2, got {g}")
    layers = [PushLayer(2 * k, "free", k) for k in range(g - 1)]
    layers.append(PushLayer(2 * (g - 1), "skyscraper", g - 1))
    return PushforwardModel(g, tuple(layers))


# -- rank-one local systems on the torus J(C') = (S^1)^{2g} ------------------

def torus_ls_cohomology(chi: GChar, g: int) -> PoincarePoly:
    """H*(J, L_chi): zero unless chi is trivial."""
    return poincare_jacobian(g) if chi.is_trivial() else PoincarePoly()


def monodromy_loops(G: AbGroup, g: int) -> list[tuple]:
    """Images in G of the 2g standard loops of J(C') under a surjection pi_1 -> G.

    The first loops go to the generators of G, the rest to 0.
    """
    if G.rank > 2 * g:
        raise ValueError(f"{G} needs {G.rank} generators but pi_1 of a genus-{g} torus has rank {2 * g}")
    return G.generators() + [G.zero()] * (2 * g - G.rank)


def circle_ls_cohomology(lam: CycloNum) -> PoincarePoly:
    """H^0, H^1 of S^1 with monodromy lam: kernel and cokernel of (lam - 1) on a line."""
    r = linalg.rank([[lam - 1]])
    return PoincarePoly([1 - r, 1 - r])


def torus_ls_oracle(chi: GChar, g: int) -> PoincarePoly:
    """Kunneth product of the circle complexes, one per loop."""
    out = PoincarePoly([1])
    for loop in monodromy_loops(chi.group, g):
        out = out * circle_ls_cohomology(chi(loop))
    return out


# -- Leray E_2 pages and H*(W) ----------------------------------------------

@dataclass(frozen=True)
class E2Page:
    """E_2^{p,q} = H^p(J, R^q AJ_* Q (x) L) for one coefficient system."""

    coefficient: str
    table: tuple[tuple[tuple[int, int], int], ...]

    def entries(self) -> dict[tuple[int, int], int]:
        return dict(self.table)

    def nonzero(self) -> dict[tuple[int, int], int]:
        return {k: v for k, v in self.table if v}

    def abutment(self) -> PoincarePoly:
        out = defaultdict(int)
        for (p, q), v in self.table:
            out[p + q] += v
        top = max(out, default=-1)
        return PoincarePoly(out[n] for n in range(top + 1))


def e2_for_character(chi: GChar, g: int) -> E2Page:
    """E_2 page with coefficients in L_chi.

    A free layer contributes H^p(J, L_chi) in row q; the skyscraper layer
    contributes the stalk of L_chi at the canonical point, rank one in p = 0.
    """
    table = {}
    for layer in aj_pushforward(g).layers:
        if layer.kind == "free":
            for p, b in enumerate(torus_ls_cohomology(chi, g)):
                table[(p, layer.degree)] = b
        else:
            table[(0, layer.degree)] = 1
    return E2Page(str(chi), tuple(sorted(table.items())))


def leray_e2(G: AbGroup, g: int, coefficient: str) -> E2Page:
    """E_2 page for ``"trivial"`` coefficients or for L_nt (sum over nontrivial characters)."""
    if coefficient == "trivial":
        return e2_for_character(characters(G)[0], g)
    if coefficient != "nt":
        raise ValueError(f"coefficient must be 'trivial' or 'nt', got {coefficient!r}")
    total: dict[tuple[int, int], int] = defaultdict(int)
    for chi in characters(G)[1:]:
        for k, v in e2_for_character(chi, g).table:
            total[k] += v
    return E2Page("nt", tuple(sorted(total.items())))


def leray_sym(g: int) -> PoincarePoly:
    """H*(Sym^{2g-2} C') from the fibration: (sum_{k<=g-2} x^{2k})(1+x)^{2g} + x^{2g-2}."""
    return geometric(g - 2) * poincare_jacobian(g) + x_power(2 * g - 2)


@dataclass(frozen=True)
class WCohomology:
    datum: CoverDatum
    poincare: PoincarePoly
    sym: PoincarePoly
    # degree -> ((character, dim), ...) for every nonzero isotypic piece
    isotypic: tuple[tuple[int, tuple[tuple[GChar, int], ...]], ...]

    def isotypic_in_degree(self, n: int) -> dict[GChar, int]:
        return dict(dict(self.isotypic).get(n, ()))


def cohomology_of_W(D: CoverDatum) -> WCohomology:
    """Betti numbers of W with the per-character split, from the Leray ledger."""
    G, g = D.group, D.base_genus
    per_degree: dict[int, list[tuple[GChar, int]]] = defaultdict(list)
    total = PoincarePoly()
    for chi in characters(G):
        b = e2_for_character(chi, g).abutment()
        total = total + b
        for n, v in enumerate(b):
            if v:
                per_degree[n].append((chi, v))
    iso = tuple((n, tuple(per_degree[n])) for n in sorted(per_degree))
    return WCohomology(D, total, poincare_sym(D.h, g), iso)
