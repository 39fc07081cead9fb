"""Exact sparse linear algebra over the rationals.

Rows are stored as integer dictionaries (key -> coefficient) scaled to
content 1 with a positive pivot, and the basis is kept in reduced
echelon form with pivots ordered by the natural key order.  Because the
representation is fully reduced and normalized, two equal subspaces
always produce identical row lists, so subspace equality is plain
comparison.  Elimination is fraction-free: rows are cross-multiplied
and re-normalized, so no Fraction arithmetic happens in the hot path.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def intify(vec: dict) -> dict:
    """Scale a vector with rational entries to integers (drop zeros)."""
    denom = 1
    for c in vec.values():
        f = Fraction(c)
        denom = denom * f.denominator // gcd(denom, f.denominator)
    out = {}
    for key, c in vec.items():
        f = Fraction(c)
        val = f.numerator * (denom // f.denominator)
        if val:
            out[key] = val
    return out


def _normalize(v: dict) -> None:
    g = 0
    for c in v.values():
        g = gcd(g, c)
    if v[min(v)] < 0:
        g = -g
    if g != 1:
        for key in v:
            v[key] //= g


class EchelonBasis:
    """A reduced row-echelon basis accepting vectors incrementally."""

    __slots__ = ("_rows",)

    def __init__(self):
        self._rows: list[tuple[object, dict]] = []  # (pivot, row), sorted by pivot

    @property
    def dim(self) -> int:
        return len(self._rows)

    def rows(self) -> list[dict]:
        """Canonical row list (fresh copies, pivot order)."""
        return [dict(row) for _, row in self._rows]

    def pivots(self) -> list:
        return [pivot for pivot, _ in self._rows]

    def _reduced(self, vec: dict) -> dict:
        v = {k: int(c) for k, c in vec.items() if c}
        for pivot, row in self._rows:
            c = v.get(pivot)
            if not c:
                continue
            p = row[pivot]
            out = {key: p * val for key, val in v.items()}
            for key, rv in row.items():
                nv = out.get(key, 0) - c * rv
                if nv:
                    out[key] = nv
                else:
                    out.pop(key, None)
            v = out
        return v

    def contains(self, vec: dict) -> bool:
        return not self._reduced(vec)

    def insert(self, vec: dict) -> bool:
        """Add a vector; returns True iff it enlarged the span."""
        v = self._reduced(vec)
        if not v:
            return False
        _normalize(v)
        pivot = min(v)
        p = v[pivot]
        for idx, (opiv, row) in enumerate(self._rows):
            c = row.get(pivot)
            if not c:
                continue
            new = {key: p * val for key, val in row.items()}
            for key, rv in v.items():
                nv = new.get(key, 0) - c * rv
                if nv:
                    new[key] = nv
                else:
                    new.pop(key, None)
            _normalize(new)
            self._rows[idx] = (opiv, new)
        self._rows.append((pivot, v))
        self._rows.sort(key=lambda item: item[0])
        return True

    def __eq__(self, other):
        return isinstance(other, EchelonBasis) and self._rows == other._rows

    def __repr__(self):
        return f"EchelonBasis(dim={self.dim})"


def dense_rank(rows: list[list[int]]) -> int:
    """Rank over the rationals of a dense integer matrix.

    Fraction-free elimination with per-row gcd normalization; duplicate
    rows are dropped up front since the callers generate many.
    """
    seen = set()
    mat = []
    for r in rows:
        t = tuple(r)
        if t not in seen:
            seen.add(t)
            mat.append(list(r))
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, len(mat)):
            if mat[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        pv = mat[rank][col]
        for i in range(rank + 1, len(mat)):
            ci = mat[i][col]
            if not ci:
                continue
            row = mat[i]
            g = 0
            for j in range(col, ncols):
                row[j] = pv * row[j] - ci * mat[rank][j]
                g = gcd(g, row[j])
            if g > 1:
                for j in range(col, ncols):
                    row[j] //= g
        rank += 1
        if rank == len(mat):
            break
    return rank
