"""Exact Gaussian elimination over a field.

The routines only use ``+``, ``-``, ``*``, ``/`` and comparison with ``0``,
so they work unchanged for :class:`fractions.Fraction` entries and for
:class:`prymweil.cyclo.CycloNum` entries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence


def rref(rows: Sequence[Sequence[Any]]) -> tuple[list[list[Any]], list[int]]:
    """Reduced row echelon form and pivot columns of ``rows``.

    >>> R, piv = rref([[Fraction(2), Fraction(4)], [Fraction(1), Fraction(3)]])
    >>> piv
    [0, 1]
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Any]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel of a rational matrix.

    One basis vector per free column, with a 1 in that column (the usual
    RREF basis), so the output is canonical for a given row space.
    """
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    R, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -Fraction(row[fc])
        basis.append(v)
    return basis


def solve(A: Sequence[Sequence[Any]], b: Sequence[Any]) -> list[Any] | None:
    """Some solution ``x`` of ``A x = b``, or ``None`` if inconsistent."""
    ncols = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug)
    if ncols in pivots:
        return None
    zero = b[0] * 0
    x = [zero] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return x


def same_span(U: Sequence[Sequence[Any]], V: Sequence[Sequence[Any]]) -> bool:
    """True when the row spaces of ``U`` and ``V`` coincide."""
    ru, rv = rank(U), rank(V)
    return ru == rv == rank(list(U) + list(V))
