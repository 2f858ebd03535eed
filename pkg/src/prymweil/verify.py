"""Property suites run over a grid of cover data (G, g').

Each property returns a :class:`PropertyResult`; nothing raises on a
failed check, so a grid run always reports every failing
(group, genus, property) triple.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import linalg
from .cover import (
    CoverDatum,
    EnumerationLimitError,
    group_lattice_check,
    h1_cover,
    prym_ledger,
    schoen_primitive,
    total_genus,
)
from .cyclo import CycloNum, cyclotomic_polynomial, divisors, euler_phi, poly_mul, units_mod
from .cycles import (
    CycleLattice,
    CycleVec,
    assemble_u,
    check_u_decomposition,
    chi_pushforward,
    cyclo_matrix,
    diagonal_class,
    g_act,
    rational_matrix,
    rational_orbit_basis,
    u_subspace,
)
from .groups import AbGroup, abelian_groups_up_to, characters, ga_mul, ga_one, split_group_algebra
from .hodge import FreeModClaim, dim_weil, is_hodge_space, unbalance, wedge_top_over_algebra
from .symprod import (
    cohomology_of_W,
    leray_e2,
    leray_sym,
    macdonald_middle,
    poincare_jacobian,
    poincare_sym,
    proj_bundle_cohomology,
    torus_ls_cohomology,
    torus_ls_oracle,
)


@dataclass(frozen=True)
class PropertyResult:
    group: str
    genus: int | None
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        where = f"G={self.group}" + (f", g'={self.genus}" if self.genus is not None else "")
        status = "PASS" if self.ok else "FAIL"
        return f"{status} [{where}] {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class GridSummary:
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def failures(self) -> list[PropertyResult]:
        return [r for r in self.results if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __len__(self):
        return len(self.results)


def _check(out: list, G, g, name: str, fn: Callable[[], object]):
    try:
        res = fn()
    except Exception as exc:  # a crashing check is a failing check
        out.append(PropertyResult(str(G), g, name, False, f"{type(exc).__name__}: {exc}"))
        return
    if isinstance(res, tuple):
        ok, detail = res
    else:
        ok, detail = bool(res), ""
    out.append(PropertyResult(str(G), g, name, bool(ok), detail))


# -- kernel-level properties (independent of G) ------------------------------

def kernel_properties(max_n: int = 64, seed: int = 0) -> list[PropertyResult]:
    out: list[PropertyResult] = []

    def phi_product():
        for n in range(1, max_n + 1):
            prod = (1,)
            for d in divisors(n):
                prod = poly_mul(prod, cyclotomic_polynomial(d))
            if prod != (-1,) + (0,) * (n - 1) + (1,):
                return False, f"n = {n}"
        return True

    rng = random.Random(seed)

    def rand_elt(n):
        return CycloNum(n, tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(euler_phi(n))))

    def ring_laws():
        for n in range(1, 25):
            for _ in range(3):
                a, b, c = rand_elt(n), rand_elt(n), rand_elt(n)
                if a * b != b * a or a * (b + c) != a * b + a * c:
                    return False, f"n = {n}"
                if not a.is_zero() and a * a.inverse() != 1:
                    return False, f"inverse, n = {n}"
        return True

    def galois_composition():
        for n in range(1, 25):
            a = rand_elt(n)
            for k in units_mod(n):
                for l in units_mod(n):
                    if a.galois(k).galois(l) != a.galois(k * l % n if n > 1 else 1):
                        return False, f"n = {n}, k = {k}, l = {l}"
                if CycloNum.rational(a.trace(), n).galois(k) != a.trace():
                    return False, f"trace, n = {n}"
        return True

    _check(out, "-", None, "cyclotomic product identity", phi_product)
    _check(out, "-", None, "cyclotomic ring laws", ring_laws)
    _check(out, "-", None, "galois composition and trace rationality", galois_composition)
    return out


# -- group-level properties --------------------------------------------------

def group_properties(G: AbGroup, eigen_rank_limit: int = 16) -> list[PropertyResult]:
    out: list[PropertyResult] = []
    chars = characters(G)
    split = split_group_algebra(G)
    n = G.order

    def distinct_chars():
        tables = {tuple(c.exponent_at(x) for x in G.elements) for c in chars}
        return len(chars) == n and len(tables) == n and chars[0].is_trivial()

    def orthogonality():
        for a in chars:
            for b in chars:
                s = CycloNum.rational(0, G.exponent)
                for x in G.elements:
                    s = s + a(x) * b(G.neg(x))
                if s * Fraction(1, n) != int(a == b):
                    return False, f"<{a}, {b}> = {s}"
        return True

    def regular_rep():
        # multiplicity of chi in Q[G] (x) C: (1/|G|) sum_g conj(chi(g)) * #fixed points of g
        for chi in chars:
            s = CycloNum.rational(0, G.exponent)
            for x in G.elements:
                fixed = sum(1 for t in G.elements if G.add(x, t) == t)
                s = s + chi(x).conj() * fixed
            if s * Fraction(1, n) != 1:
                return False, f"{chi} has multiplicity {s * Fraction(1, n)}"
        return True

    def idempotents():
        total = [Fraction(0)] * n
        for i, O in enumerate(split.factors):
            if ga_mul(G, O.idempotent, O.idempotent) != O.idempotent:
                return False, f"{O} not idempotent"
            for P in split.factors[i + 1:]:
                if any(ga_mul(G, O.idempotent, P.idempotent)):
                    return False, f"{O} * {P} != 0"
            total = [a + b for a, b in zip(total, O.idempotent)]
        return tuple(total) == ga_one(G)

    def phi_sum():
        return (
            sum(O.degree for O in split.factors) == n and split.nontrivial_dimension == n - 1,
            f"sum phi = {sum(O.degree for O in split.factors)}",
        )

    def fourier_units():
        A = split.etale_algebra()
        for i, O in enumerate(split.factors):
            unit = A.element([int(i == j) for j in range(len(split.factors))])
            if split.fourier(O.idempotent) != unit:
                return False, str(O)
        return True

    def eigen_equivariance():
        L = CycleLattice(G)
        for chi in chars:
            v = chi_pushforward(chi, L)
            for s in G.elements:
                if g_act(s, v) != v.scale(chi(s)):
                    return False, f"{chi}, s = {s}"
        return True

    def action_composition():
        rng = random.Random(len(G.elements))
        L = CycleLattice(G)
        v = _random_cycle(G, rng)
        for s in G.elements:
            for t in G.elements[:4]:
                if g_act(s, g_act(t, v)) != g_act(G.add(s, t), v):
                    return False, f"s = {s}, t = {t}"
        d = diagonal_class(L)
        return all(g_act(s, d) == d for s in G.elements)

    def c_independence():
        bases = []
        for c in (Fraction(1), Fraction(2), Fraction(7, 3)):
            L = CycleLattice(G, c)
            bases.append(
                (rational_matrix(u_subspace(L)), [rational_matrix(vs) for _, vs in assemble_u(L, split).blocks])
            )
        return all(b == bases[0] for b in bases)

    def descent():
        L = CycleLattice(G)
        for O in split.nontrivial_factors:
            vs = rational_orbit_basis(O, L)
            if not all(v.galois_fixed() for v in vs):
                return False, f"{O}: not Galois fixed"
            if linalg.rank(rational_matrix(vs)) != O.degree:
                return False, f"{O}: rank deficient"
            eig = [chi_pushforward(psi, L) for psi in O.orbit]
            if not linalg.same_span(cyclo_matrix(vs), cyclo_matrix(eig)):
                return False, f"{O}: span differs from the eigenvectors"
        return True

    def u_basis():
        problems = check_u_decomposition(assemble_u(CycleLattice(G), split))
        return not problems, "; ".join(problems)

    def completeness():
        L = CycleLattice(G)
        rows = [diagonal_class(L)] + assemble_u(L, split).basis()
        if linalg.rank(rational_matrix(rows)) != n:
            return False, "rational rank"
        if n <= eigen_rank_limit:
            eig = [chi_pushforward(chi, L) for chi in chars]
            if linalg.rank(cyclo_matrix(eig)) != n:
                return False, "eigenvector rank"
        return True

    _check(out, G, None, "characters distinct, trivial first", distinct_chars)
    _check(out, G, None, "character orthogonality", orthogonality)
    _check(out, G, None, "regular representation multiplicity one", regular_rep)
    _check(out, G, None, "idempotents rational, orthogonal, complete", idempotents)
    _check(out, G, None, "sum of field degrees", phi_sum)
    _check(out, G, None, "Fourier image of idempotents", fourier_units)
    _check(out, G, None, "eigen-equivariance of chi-pushforwards", eigen_equivariance)
    _check(out, G, None, "permutation action composes; diagonal fixed", action_composition)
    _check(out, G, None, "U independent of gram scale", c_independence)
    _check(out, G, None, "Galois descent rational and spanning", descent)
    _check(out, G, None, "assembled U basis", u_basis)
    _check(out, G, None, "diagonal + U completeness", completeness)
    return out


def _random_cycle(G: AbGroup, rng: random.Random) -> CycleVec:
    return CycleVec.from_rational(G, [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in G.elements])


# -- cell-level properties ---------------------------------------------------

def cell_properties(G: AbGroup, g: int, mutate: bool = False, lattice_cap: int = 10**6) -> list[PropertyResult]:
    out: list[PropertyResult] = []
    D = CoverDatum(G, g)
    h = D.h
    n = G.order
    H = h1_cover(D)
    if mutate:
        pair = next((c for c in characters(G) if c.conj() != c), None)
        if pair is not None:
            H = unbalance(H, pair)

    def dimension_identity():
        gC = total_genus(D)
        return 2 * gC == 2 * g + (n - 1) * h and H.total_dim() == 2 * gC, f"g = {gC}"

    def free_module():
        if n == 1:
            return H.nontrivial_part().total_dim() == 0, "trivial group; no nontrivial part"
        M = FreeModClaim.from_h1(H)
        return M.rank == h and M.base.total_dim() == (n - 1) * h, f"rank {M.rank}"

    def hodge():
        W = wedge_top_over_algebra(FreeModClaim.from_h1(H, rank=h))
        v = is_hodge_space(W)
        return v.ok, "" if v else f"failing (orbit, index, type): {list(v.failures)}"

    def weil_dim():
        W = wedge_top_over_algebra(FreeModClaim.from_h1(H, rank=h))
        return dim_weil(W) == n - 1, f"dim {dim_weil(W)}"

    def mutation_detected():
        base = h1_cover(D)
        for chi in characters(G):
            if chi.conj() == chi or chi.coords > chi.conj().coords:
                continue
            W = wedge_top_over_algebra(FreeModClaim.from_h1(unbalance(base, chi), rank=h))
            if is_hodge_space(W):
                return False, f"unbalancing {chi} went unnoticed"
        return True

    def prym():
        L = prym_ledger(D, h1=H)
        return (
            L.prym_dim == (n - 1) * (g - 1) and g + L.nontrivial_sum() == L.total_genus,
            f"prym_dim {L.prym_dim}",
        )

    def schoen():
        if not G.is_cyclic() or n < 2:
            return True, "not cyclic; skipped"
        L = prym_ledger(D)
        S = schoen_primitive(D)
        prim = dict((O.field_conductor, d) for O, d in L.per_irrep_dims)[n]
        ok = (
            prim == S.b_prim_dim
            and L.nontrivial_sum() == L.prym_dim
            and all(mu == g - 1 for _, mu in S.tangent_multiplicities)
        )
        return ok, f"B_prim {S.b_prim_dim}"

    def leray_macdonald():
        return poincare_sym(h, g) == leray_sym(g)

    def proj_bundle():
        if g > 5:
            return True, "g > 5; skipped"
        for d in range(2 * g - 1, 2 * g + 4):
            if poincare_sym(d, g) != proj_bundle_cohomology(d, g):
                return False, f"d = {d}"
        return True

    def e2_nt():
        page = leray_e2(G, g, "nt").nonzero()
        expected = {(0, 2 * (g - 1)): n - 1} if n > 1 else {}
        return page == expected, str(page)

    def w_betti_law():
        Wc = cohomology_of_W(D)
        sym = Wc.sym
        top = max(len(sym), len(Wc.poincare))
        others = all(Wc.poincare.betti(k) == sym.betti(k) for k in range(top) if k != h)
        iso = Wc.isotypic_in_degree(h)
        per_char = all(iso.get(chi, 0) == 1 for chi in characters(G)[1:])
        return (
            others and Wc.poincare.betti(h) - sym.betti(h) == n - 1 and per_char,
            f"b_h(W) = {Wc.poincare.betti(h)}",
        )

    def macdonald():
        return macdonald_middle(g).total == poincare_sym(h, g).betti(h)

    def palindromes():
        Wc = cohomology_of_W(D)
        return (
            poincare_sym(h, g).is_palindromic(2 * h)
            and Wc.poincare.is_palindromic(2 * h)
            and poincare_jacobian(g).is_palindromic(2 * g)
        )

    def torus():
        for chi in characters(G):
            if torus_ls_cohomology(chi, g) != torus_ls_oracle(chi, g):
                return False, str(chi)
        return True

    def lattice():
        try:
            res = group_lattice_check(D, cap=lattice_cap, embedding="coordinate")
        except EnumerationLimitError:
            return True, "above enumeration cap; skipped"
        return res.ok, res.witness

    _check(out, G, g, "dimension identity 2g = 2g' + (|G|-1)h", dimension_identity)
    _check(out, G, g, "free module of rank h", free_module)
    _check(out, G, g, "is_hodge_space", hodge)
    _check(out, G, g, "dim_weil = |G| - 1", weil_dim)
    _check(out, G, g, "is_hodge_space rejects every unbalancing", mutation_detected)
    _check(out, G, g, "prym ledger", prym)
    _check(out, G, g, "primitive specialization", schoen)
    _check(out, G, g, "Leray/Macdonald agreement", leray_macdonald)
    _check(out, G, g, "projective-bundle agreement", proj_bundle)
    _check(out, G, g, "E2 page for L_nt", e2_nt)
    _check(out, G, g, "H*(W) dimension law", w_betti_law)
    _check(out, G, g, "Macdonald middle total", macdonald)
    _check(out, G, g, "Poincare duality", palindromes)
    _check(out, G, g, "torus vanishing oracle", torus)
    _check(out, G, g, "N index and coordinate G_0 isomorphism", lattice)
    return out


def _group_task(args) -> list[PropertyResult]:
    factors, max_genus, mutate = args
    G = AbGroup(factors)
    out = group_properties(G)
    for g in range(2, max_genus + 1):
        out.extend(cell_properties(G, g, mutate=mutate))
    return out


def run_grid(max_order: int = 12, max_genus: int = 5, jobs: int = 1, mutate: bool = False) -> GridSummary:
    """Run every suite over all abelian groups of order <= max_order and 2 <= g' <= max_genus."""
    if max_order < 1 or max_genus < 2:
        raise ValueError("the grid needs max_order >= 1 and max_genus >= 2")
    tasks = [(G.invariant_factors, max_genus, mutate) for G in abelian_groups_up_to(max_order)]
    summary = GridSummary(kernel_properties())
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_group_task, tasks))
    else:
        chunks = [_group_task(t) for t in tasks]
    for chunk in chunks:
        summary.results.extend(chunk)
    return summary
