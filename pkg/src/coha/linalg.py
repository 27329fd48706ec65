"""Exact rank by fraction-free (Bareiss) elimination."""
from __future__ import annotations

from math import lcm
from typing import Sequence

from gmpy2 import mpq, mpz


def _integer_row(row: Sequence) -> list:
    row = [mpq(x) for x in row]
    den = 1
    for x in row:
        den = lcm(den, int(x.denominator))
    return [mpz(x * den) for x in row]


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals of a dense matrix given as a list of rows."""
    m = [_integer_row(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r, prev = 0, mpz(1)
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            a = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c, ncols):
                # Bareiss step; the division is exact
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
        prev = p
        r += 1
        if r == len(m):
            break
    return r


def poly_rank(polys) -> int:
    """Rank of the span of a list of :class:`~coha.poly.MPoly`."""
    monos = sorted({mono for p in polys for mono in p.terms})
    index = {mono: k for k, mono in enumerate(monos)}
    rows = []
    for p in polys:
        row = [0] * len(monos)
        for mono, c in p.terms.items():
            row[index[mono]] = c
        rows.append(row)
    return rank(rows)
