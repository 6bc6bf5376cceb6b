"""Exact rank over the rationals by fraction-free integer elimination."""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping, Sequence


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of a dense integer matrix by Bareiss elimination.

    Every intermediate entry is a minor of the input, so the divisions are exact.
    Pivot: first nonzero entry in row-major order of the remaining block.
    """
    m = [list(map(int, row)) for row in matrix]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            f = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g not in (0, 1):
        row = {k: v // g for k, v in row.items()}
    return row


class SparseEchelon:
    """Incrementally maintained row echelon form of sparse integer rows.

    Each stored row is primitive (content 1, positive leading entry) and keyed
    by its leading column.  New rows are reduced by integer combinations
    ``p*r - f*pivot`` followed by content removal; no fractions appear.
    """

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, int]) -> dict[int, int]:
        r = {k: int(v) for k, v in row.items() if v}
        while r:
            c = min(r)
            pivot = self.pivots.get(c)
            if pivot is None:
                return r
            p, f = pivot[c], r[c]
            g = gcd(p, f)
            p, f = p // g, f // g
            out = {k: p * v for k, v in r.items()}
            for k, v in pivot.items():
                nv = out.get(k, 0) - f * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
            r = _primitive(out) if out else out
        return r

    def add(self, row: Mapping[int, int]) -> bool:
        """Insert ``row``; True when it was independent of the rows seen so far."""
        r = self.reduce(row)
        if not r:
            return False
        r = _primitive(r)
        self.pivots[min(r)] = r
        return True


def sparse_rank(rows: Iterable[Mapping[int, int]]) -> int:
    ech = SparseEchelon()
    for row in rows:
        ech.add(row)
    return ech.rank
