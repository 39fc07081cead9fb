"""Upward-closed sets of partitions presented by minimal generators.

A :class:`Filter` is the set of all shapes containing at least one
generator.  Generators are normalized to the antichain of
containment-minimal elements, so equal filters compare equal.  With an
``ambient=(k, l)`` the ``(k+1) x (l+1)`` rectangle is adjoined as a free
generator: every shape containing it indexes a zero block of the tensor
power, so the quotient algebra is unchanged.
"""

from __future__ import annotations

import json
from typing import Iterable, Optional

from .partitions import (
    Partition,
    check_partition,
    contains,
    enumerate_partitions,
    hook_rectangle,
)


def _minimal_antichain(gens: Iterable[Partition]) -> tuple[Partition, ...]:
    ordered = sorted(set(gens), key=lambda m: (sum(m), tuple(-p for p in m)))
    keep: list[Partition] = []
    for g in ordered:
        if not any(contains(h, g) for h in keep):
            keep.append(g)
    return tuple(keep)


class Filter:
    """An upward-closed set of partitions with optional graded ambient."""

    __slots__ = ("generators", "ambient")

    def __init__(
        self,
        generators: Iterable = (),
        ambient: Optional[tuple[int, int]] = None,
    ):
        gens = [check_partition(g) for g in generators]
        if ambient is not None:
            k, l = int(ambient[0]), int(ambient[1])
            if k < 0 or l < 0:
                raise ValueError("ambient dimensions must be nonnegative")
            ambient = (k, l)
            gens.append(((l + 1),) * (k + 1))
        object.__setattr__(self, "generators", _minimal_antichain(gens))
        object.__setattr__(self, "ambient", ambient)

    def __setattr__(self, name, value):
        raise AttributeError("Filter instances are immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Filter)
            and self.generators == other.generators
            and self.ambient == other.ambient
        )

    def __hash__(self):
        return hash((self.generators, self.ambient))

    def __repr__(self):
        return f"Filter(generators={list(self.generators)!r}, ambient={self.ambient!r})"

    def _require_ambient(self) -> tuple[int, int]:
        if self.ambient is None:
            raise ValueError("this operation requires an ambient (k, l)")
        return self.ambient

    # -- membership and set structure --------------------------------------

    def member(self, lam) -> bool:
        """True iff some generator is contained in ``lam``."""
        lam = check_partition(lam)
        return any(contains(g, lam) for g in self.generators)

    def union(self, other: "Filter") -> "Filter":
        """Filter generated by both generator sets; ambients must agree."""
        if self.ambient is not None and other.ambient is not None:
            if self.ambient != other.ambient:
                raise ValueError(
                    f"ambient mismatch: {self.ambient} vs {other.ambient}"
                )
        ambient = self.ambient if self.ambient is not None else other.ambient
        return Filter(self.generators + other.generators, ambient)

    def complement_at(self, n: int) -> list[Partition]:
        """Non-members of size ``n`` inside the ambient hook, canonical order."""
        k, l = self._require_ambient()
        return [
            lam
            for lam in enumerate_partitions(n, hook=(k, l))
            if not self.member(lam)
        ]

    # -- growth invariants ---------------------------------------------------

    def hr(self) -> int:
        """Least ``a`` such that every split ``a1 + a2 = a`` admits a
        hook-rectangle ``D(a1, a2, b)`` in the filter for some ``b``.

        A generator ``mu`` sits inside ``D(a1, a2, b)`` for large ``b``
        exactly when its rows after the first ``a1`` fit under ``a2``,
        so the search is a closed-form scan; the ambient rectangle
        guarantees ``a = k + l + 1`` always works.
        """
        k, l = self._require_ambient()
        for a in range(0, k + l + 2):
            if all(self._split_ok(a1, a - a1) for a1 in range(a + 1)):
                return a
        raise AssertionError("ambient rectangle bound violated")

    def _split_ok(self, a1: int, a2: int) -> bool:
        return any(
            (mu[a1] if a1 < len(mu) else 0) <= a2 for mu in self.generators
        )

    def exp_growth(self) -> int:
        """Integer exponential growth rate of the quotient algebra."""
        a = self.hr()
        return a - 1 if a >= 1 else 0

    # -- polynomial identity criteria -----------------------------------------

    def is_pi_classical(self) -> Optional[int]:
        """Least ``c`` with the square ``(c, c)`` a member, if any.

        Only meaningful for purely even ambients; the witness ``c``
        bounds the commutator identity degree via
        :func:`classical_identity_degree`.
        """
        k, l = self._require_ambient()
        if l != 0:
            raise ValueError("classical test requires an ambient with l == 0")
        candidates = [
            max(mu[0] if mu else 0, 1)
            for mu in self.generators
            if len(mu) <= 2
        ]
        return min(candidates, default=None)

    def is_pi_super(self) -> Optional[int]:
        """Least ``b >= 2`` with ``(b,b)``, ``(b,1^(b-1))`` and ``(2^b)`` all members."""
        self._require_ambient()
        gens = self.generators
        has_square = any(len(mu) <= 2 for mu in gens)
        has_hook = any((mu[1] if len(mu) > 1 else 0) <= 1 for mu in gens)
        has_column = any((mu[0] if mu else 0) <= 2 for mu in gens)
        if not (has_square and has_hook and has_column):
            return None
        b = 2
        while not (
            self.member(hook_rectangle(2, 0, b))
            and self.member(hook_rectangle(1, 1, b))
            and self.member(hook_rectangle(0, 2, b))
        ):
            b += 1
        return b

    def nilpotency_bound(self) -> Optional[int]:
        """Least ``N`` with the complement empty at every size ``>= N``.

        Present exactly when the filter contains a single row and a
        single column (``hr <= 1``); the rectangle bound
        ``(b1-1)(b2-1)+1`` caps the scan.
        """
        if self.hr() > 1:
            return None
        gens = self.generators
        if () in gens:
            return 0
        b1 = min(mu[0] for mu in gens if len(mu) == 1)
        b2 = min(len(mu) for mu in gens if mu[0] == 1)
        n = (b1 - 1) * (b2 - 1) + 1
        while n > 0 and not self.complement_at(n - 1):
            n -= 1
        return n

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        data: dict = {}
        if self.ambient is not None:
            data["k"], data["l"] = self.ambient
        data["generators"] = [list(g) for g in self.generators]
        return data

    @classmethod
    def from_json(cls, data: dict) -> "Filter":
        if ("k" in data) != ("l" in data):
            raise ValueError("filter file must give both k and l or neither")
        ambient = (data["k"], data["l"]) if "k" in data else None
        return cls(data.get("generators", []), ambient)

    @classmethod
    def load(cls, path) -> "Filter":
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh)
            fh.write("\n")


def minimize(gens: Iterable, ambient: Optional[tuple[int, int]] = None) -> Filter:
    """Filter generated by ``gens`` with the minimal antichain extracted."""
    return Filter(gens, ambient)


def classical_identity_degree(c: int, k: int) -> int:
    """Number of commutator factors in the guaranteed identity for a
    purely even ambient of dimension ``k`` with square witness ``c``."""
    if c < 1 or k < 1:
        raise ValueError("c and k must be positive")
    return c * (k - 1) + 1
