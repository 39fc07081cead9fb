"""Integer partitions as weakly decreasing tuples.

A partition is a plain ``tuple[int, ...]`` with positive, weakly
decreasing parts; ``()`` is the empty partition.  These helpers are the
index layer for the whole package: diagram containment, conjugation,
hook membership, hook-rectangular shapes and restricted enumeration.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

Partition = tuple[int, ...]


def check_partition(parts: Iterable[int]) -> Partition:
    """Validate an iterable of parts and return it as a partition tuple."""
    lam = tuple(int(p) for p in parts)
    for i, p in enumerate(lam):
        if p < 1:
            raise ValueError(f"parts must be positive integers, got {p}")
        if i and lam[i - 1] < p:
            raise ValueError(f"parts must be weakly decreasing, got {lam}")
    return lam


def parse_partition(text: str) -> Partition:
    """Parse ``'3,2,2,1'`` or the exponent shorthand ``'3,2^2,1'``.

    ``''`` and ``'()'`` denote the empty partition.  Surrounding
    parentheses are accepted and exponents are expanded on the spot, so
    the round trip through :func:`format_partition` is canonical.
    """
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    if not s:
        return ()
    parts: list[int] = []
    for item in s.split(","):
        item = item.strip()
        if "^" in item:
            base_s, _, exp_s = item.partition("^")
            base, exp = int(base_s), int(exp_s)
            if exp < 0:
                raise ValueError(f"negative exponent in {text!r}")
            parts.extend([base] * exp)
        else:
            parts.append(int(item))
    return check_partition(parts)


def format_partition(lam: Partition) -> str:
    """Canonical comma-separated text with exponents expanded."""
    return ",".join(str(p) for p in lam)


def display_partition(lam: Partition) -> str:
    """Parenthesized form used in human-readable output, e.g. ``(3,1)``."""
    return "(" + format_partition(lam) + ")"


def contains(mu: Partition, lam: Partition) -> bool:
    """True iff the diagram of ``mu`` fits inside the diagram of ``lam``."""
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def conjugate(lam: Partition) -> Partition:
    """Transpose the diagram: column lengths become row lengths."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def in_hook(lam: Partition, k: int, l: int) -> bool:
    """True iff row ``k+1`` of ``lam`` has length at most ``l``."""
    return (lam[k] if k < len(lam) else 0) <= l


def hook_rectangle(a1: int, a2: int, b: int) -> Partition:
    """The shape with ``a1`` rows of length ``b`` over ``b-a1`` rows of length ``a2``.

    Both the first row and the first column have length ``b`` (when the
    corresponding count is positive), and the size is
    ``(a1+a2)*b - a1*a2``.
    """
    if b < a1 or b < a2:
        raise ValueError(f"need b >= a1 and b >= a2, got a1={a1}, a2={a2}, b={b}")
    return (b,) * a1 + ((a2,) * (b - a1) if a2 else ())


def c_stat(lam: Partition) -> int:
    """Number of cells below the first row: ``|lam| - lam_1``."""
    return sum(lam) - (lam[0] if lam else 0)


def enumerate_partitions(
    n: int, hook: Optional[tuple[int, int]] = None
) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    With ``hook=(k, l)`` only shapes whose row ``k+1`` is at most ``l``
    are produced; the bound is applied during generation rather than by
    filtering, so narrow hooks stay cheap at large ``n``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if hook is None:
        yield from _descend(n, n, 0, None, 0)
    else:
        k, l = hook
        if k < 0 or l < 0:
            raise ValueError("hook parameters must be nonnegative")
        yield from _descend(n, n, 0, k, l)


def _descend(
    n: int, max_part: int, row: int, k: Optional[int], l: int
) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    cap = max_part
    if k is not None and row >= k:
        cap = min(cap, l)
    for first in range(min(cap, n), 0, -1):
        for rest in _descend(n - first, first, row + 1, k, l):
            yield (first,) + rest
