"""Littlewood-Richardson coefficients by direct tableau enumeration.

``c^nu_{mu,lam}`` is the number of semistandard fillings of the skew
shape ``nu/mu`` with content ``lam`` whose reverse reading word (rows
top to bottom, each row right to left) is a lattice word.  Cells are
filled in exactly that reading order, so the row, column, content and
lattice-prefix constraints are all checked the moment a value is
placed, which prunes dead branches early.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .partitions import (
    Partition,
    check_partition,
    contains,
    enumerate_partitions,
)


@dataclass
class LRExpansion:
    """Outer-product decomposition: shape -> positive multiplicity."""

    terms: dict[Partition, int] = field(default_factory=dict)
    degree: int = 0


def count_lr_tableaux(mu: Partition, lam: Partition, nu: Partition) -> int:
    """Count lattice fillings of ``nu/mu`` with content ``lam`` (uncached).

    This is the raw enumerator behind :func:`lr_coefficient`; property
    tests call it directly so the symmetry of the coefficients is
    exercised rather than baked in by cache-key normalization.
    """
    mu, lam, nu = check_partition(mu), check_partition(lam), check_partition(nu)
    if sum(mu) + sum(lam) != sum(nu):
        return 0
    if not contains(mu, nu) or not contains(lam, nu):
        return 0
    rows = len(nu)
    mu_pad = mu + (0,) * (rows - len(mu))
    nvals = len(lam)
    counts = [0] * (nvals + 1)
    grid = [[0] * r for r in nu]
    cells = [
        (r, c) for r in range(rows) for c in range(nu[r] - 1, mu_pad[r] - 1, -1)
    ]

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        upper = grid[r][c + 1] if c + 1 < nu[r] else nvals
        above = grid[r - 1][c] if r > 0 and c >= mu_pad[r - 1] else 0
        total = 0
        for v in range(above + 1, upper + 1):
            if counts[v] < lam[v - 1] and (v == 1 or counts[v - 1] > counts[v]):
                counts[v] += 1
                grid[r][c] = v
                total += place(idx + 1)
                counts[v] -= 1
        return total

    return place(0)


@lru_cache(maxsize=None)
def _lr_cached(mu: Partition, lam: Partition, nu: Partition) -> int:
    return count_lr_tableaux(mu, lam, nu)


def lr_coefficient(mu, lam, nu) -> int:
    """The Littlewood-Richardson coefficient ``c^nu_{mu,lam}``.

    Zero whenever the degrees do not add up or one of ``mu``, ``lam`` is
    not contained in ``nu``.  Results are memoized with the arguments in
    a canonical order, since the coefficient is symmetric in
    ``(mu, lam)`` and the series layer asks for the same products
    repeatedly.
    """
    mu, lam, nu = check_partition(mu), check_partition(lam), check_partition(nu)
    if lam < mu:
        mu, lam = lam, mu
    return _lr_cached(mu, lam, nu)


def outer_product(mu, lam) -> LRExpansion:
    """Full decomposition of the outer product of ``mu`` and ``lam``.

    Terms are indexed by all shapes of size ``|mu| + |lam|`` in
    reverse-lexicographic order; zero coefficients are omitted.
    """
    mu, lam = check_partition(mu), check_partition(lam)
    degree = sum(mu) + sum(lam)
    terms: dict[Partition, int] = {}
    for nu in enumerate_partitions(degree):
        c = lr_coefficient(mu, lam, nu)
        if c:
            terms[nu] = c
    return LRExpansion(terms=terms, degree=degree)
