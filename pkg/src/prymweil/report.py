"""Full reports for a cover datum, as plain JSON-ready data.

Every rational number is written as ``str(Fraction)`` ("3", "-1/2"); no
floats are ever produced. Keys are sorted on output so two runs on the
same input give byte-identical text.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .cover import BALANCED_MODEL_NOTE, CoverDatum, h1_cover, prym_ledger, schoen_primitive, total_genus
from .cycles import CycleLattice, assemble_u, check_u_decomposition, chi_pushforward
from .cyclo import euler_phi
from .groups import AbGroup, cached_split, normalize_group
from .hodge import FreeModClaim, dim_weil, is_hodge_space, wedge_top_over_algebra
from .symprod import cohomology_of_W, macdonald_middle

ASSUMPTIONS = {
    "balanced_multiplicity_model": BALANCED_MODEL_NOTE,
    "standard_conjecture_inputs": (
        "algebraicity of the Weil classes is taken as an input hypothesis; "
        "only dimensions and Hodge types are computed"
    ),
    "leray_degeneration": "the Leray spectral sequence of AJ_h is taken to degenerate at E_2",
    "intersection_scale": "the Gram matrix of the fibre classes is c * Id with c unknown; outputs are c-independent",
}


def frac(q) -> str:
    return str(Fraction(q))


def field_name(f: int) -> str:
    return "Q" if euler_phi(f) == 1 else f"Q(zeta_{f})"


def nt_algebra_name(G: AbGroup) -> str:
    """Q[G]_nt as a product, with repeated factors collected, e.g. ``Q^3``."""
    counts: dict[int, int] = {}
    for O in cached_split(G).nontrivial_factors:
        f = 1 if euler_phi(O.field_conductor) == 1 else O.field_conductor
        counts[f] = counts.get(f, 0) + 1
    if not counts:
        return "0"
    parts = []
    for f in sorted(counts):
        name = field_name(f)
        parts.append(name if counts[f] == 1 else f"{name}^{counts[f]}")
    return " x ".join(parts)


def build_report(factors: Sequence[int], genus: int) -> dict:
    G = normalize_group(factors)
    D = CoverDatum(G, genus)
    split = cached_split(G)
    H = h1_cover(D)
    ledger = prym_ledger(D, h1=H, split=split)
    W = ledger.weil
    verdict = is_hodge_space(W)
    Wc = cohomology_of_W(D)
    L = CycleLattice(G)
    U = assemble_u(L, split)

    rep: dict = {
        "input": {"group_factors": list(factors), "base_genus": genus},
        "group": {
            "invariant_factors": list(G.invariant_factors),
            "name": str(G),
            "order": G.order,
            "exponent": G.exponent,
            "elements": [list(x) for x in G.elements],
        },
        "algebra_split": {
            "nontrivial_part": nt_algebra_name(G),
            "nontrivial_dimension": split.nontrivial_dimension,
            "factors": [
                {
                    "representative": list(O.representative.coords),
                    "field": field_name(O.field_conductor),
                    "conductor": O.field_conductor,
                    "degree": O.degree,
                    "orbit": [list(chi.coords) for chi in O.orbit],
                    "idempotent": [frac(c) for c in O.idempotent],
                }
                for O in split.factors
            ],
        },
        "genus_ledger": {
            "base_genus": genus,
            "total_genus": total_genus(D),
            "h": D.h,
            "prym_dim": ledger.prym_dim,
            "per_orbit_dims": [
                {"representative": list(O.representative.coords), "dim": d}
                for O, d in ledger.per_irrep_dims
            ],
        },
        "hodge_h1": [
            {"character": list(chi.coords), "h10": H.multiplicity(chi, 1, 0), "h01": H.multiplicity(chi, 0, 1)}
            for chi in sorted({c for c, _ in H.mult}, key=lambda c: c.coords)
        ],
        "weil": {
            "rank": W.rank,
            "dimension": dim_weil(W),
            "is_hodge": verdict.ok,
            "pieces": [
                {
                    "representative": list(p.orbit.representative.coords),
                    "dimension": p.dimension,
                    "types": [{"galois_index": k, "type": list(t)} for k, t in p.types],
                }
                for p in W.pieces
            ],
        },
        "betti": {
            "sym_h": list(Wc.sym),
            "W": list(Wc.poincare),
            "jump_in_degree_h": Wc.poincare.betti(D.h) - Wc.sym.betti(D.h),
            "macdonald_middle": [
                {"wedge_degree": s.wedge_degree, "twist": s.twist, "dim": s.dimension}
                for s in macdonald_middle(genus).summands
            ],
            "isotypic": [
                {"degree": n, "pieces": [{"character": list(chi.coords), "dim": v} for chi, v in items]}
                for n, items in Wc.isotypic
            ],
        },
        "cycles": {
            "u_basis": [
                {
                    "representative": list(O.representative.coords),
                    "vectors": [[frac(c) for c in v.rational_coeffs()] for v in vs],
                }
                for O, vs in U.blocks
            ],
            "u_dimension": len(U.basis()),
            "problems": check_u_decomposition(U),
            "eigenvectors": [
                {
                    "character": list(O.representative.coords),
                    "conductor": G.exponent,
                    "coefficients": [[frac(c) for c in x.coeffs] for x in chi_pushforward(O.representative, L).coeffs],
                }
                for O in split.nontrivial_factors
            ],
        },
        "assumptions": dict(ASSUMPTIONS),
    }
    if G.is_cyclic() and G.order > 1:
        S = schoen_primitive(D)
        rep["primitive"] = {
            "b_prim_dim": S.b_prim_dim,
            "u_prim_dim": S.u_prim_dim,
            "tangent_multiplicities": [list(t) for t in S.tangent_multiplicities],
        }
    else:
        rep["primitive"] = None
    return rep


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def to_text(report: dict) -> str:
    g = report["group"]
    led = report["genus_ledger"]
    w = report["weil"]
    b = report["betti"]
    lines = [
        f"G = {g['name']} (order {g['order']}), g' = {led['base_genus']}, h = {led['h']}",
        f"Q[G]_nt = {report['algebra_split']['nontrivial_part']}"
        f" (dim {report['algebra_split']['nontrivial_dimension']})",
        f"g(C) = {led['total_genus']}, prym_dim = {led['prym_dim']}",
        "per-orbit dims: " + ", ".join(f"{tuple(d['representative'])}: {d['dim']}" for d in led["per_orbit_dims"]),
        f"Weil space: dim {w['dimension']}, Hodge classes: {'yes' if w['is_hodge'] else 'no'}",
        "b(Sym^h) = " + ",".join(map(str, b["sym_h"])),
        "b(W)     = " + ",".join(map(str, b["W"])),
        f"jump in degree h: {b['jump_in_degree_h']}",
    ]
    if report["primitive"]:
        p = report["primitive"]
        lines.append(f"primitive piece: B_prim dim {p['b_prim_dim']}, U_prim dim {p['u_prim_dim']}")
    lines.append(f"U basis ({report['cycles']['u_dimension']} vectors):")
    for blk in report["cycles"]["u_basis"]:
        for v in blk["vectors"]:
            lines.append(f"  {tuple(blk['representative'])}: [" + ", ".join(v) + "]")
    lines.append("assumptions:")
    for k in sorted(report["assumptions"]):
        lines.append(f"  {k}: {report['assumptions'][k]}")
    return "\n".join(lines) + "\n"
