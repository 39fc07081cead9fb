"""Exact brute-force engine for small tensor powers of a graded space.

Conventions, fixed once and pinned by the associativity and sign tests:

* Letters ``1..k`` are even, ``k+1..k+l`` odd; a word is a tuple of
  letters, a degree-``n`` tensor is a finitely supported map from
  length-``n`` words to exact rationals.
* Permutations are one-line tuples of images, 1-based; products compose
  as ``(p * q)(i) = p(q(i))``.
* The twisted action on a word ``z`` of length ``n`` is
  ``z * sigma = f_J(sigma) * (z_{sigma(1)}, ..., z_{sigma(n)})`` where
  ``J`` collects the positions of the odd letters of ``z`` and ``f_J``
  counts the inversions of ``sigma`` lying inside ``J``.  With the
  composition above this satisfies ``(z * p) * q = z * (p * q)``.

Everything downstream is spans of such vectors inside the full
``(k+l)^n``-dimensional degree slice, held as canonical integer echelon
bases so that subspace equality is literal comparison.  Hard caps keep
the ambient dimension at ``4096`` and symmetric-group degrees at ``7``;
exceeding a cap raises :class:`CapExceeded`, never approximates.
"""

from __future__ import annotations

import random
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import chain, permutations, product
from math import factorial
from typing import Iterable, Iterator, Optional, Sequence

from .filters import Filter
from .linalg import EchelonBasis, intify
from .partitions import Partition, check_partition, enumerate_partitions

DIM_CAP = 4096
DEGREE_CAP = 7  # caps d! at 5040
KERNEL_DEGREE_CAP = 6


class CapExceeded(RuntimeError):
    """A computation would exceed the configured exact-enumeration caps."""


Perm = tuple[int, ...]
Word = tuple[int, ...]


@dataclass(frozen=True)
class SuperBasis:
    """A homogeneous basis: ``k`` even generators then ``l`` odd ones."""

    k: int
    l: int

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise ValueError("basis dimensions must be nonnegative")

    @property
    def dim(self) -> int:
        return self.k + self.l

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(range(1, self.k + self.l + 1))

    def parity(self, letter: int) -> int:
        if not 1 <= letter <= self.dim:
            raise ValueError(f"letter {letter} outside 1..{self.dim}")
        return 0 if letter <= self.k else 1

    def words(self, n: int) -> Iterator[Word]:
        return product(self.letters, repeat=n)


def _check_cap(basis: SuperBasis, n: int, cap: int) -> None:
    if basis.dim**n > cap:
        raise CapExceeded(
            f"ambient dimension {basis.dim}**{n} exceeds cap {cap}"
        )


def super_degree(word: Word, basis: SuperBasis) -> int:
    """Parity of the number of odd letters in the word."""
    return sum(1 for z in word if z > basis.k) & 1


# ---------------------------------------------------------------------------
# Permutations and the sign functions.


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def compose(p: Perm, q: Perm) -> Perm:
    """(p * q)(i) = p(q(i))."""
    return tuple(p[qi - 1] for qi in q)


def perm_sign(p: Perm) -> int:
    n = len(p)
    inv = sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])
    return -1 if inv & 1 else 1


def f_I(sigma: Perm, odd: Iterable[int]) -> int:
    """Sign picked up by crossings among the marked positions.

    ``odd`` is a set of values in ``1..d``; the result is ``(-1)`` to the
    number of pairs ``p < q`` with ``sigma(p), sigma(q)`` both marked and
    ``sigma(p) > sigma(q)``.
    """
    marked = frozenset(odd)
    seq = [s for s in sigma if s in marked]
    inv = sum(
        1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b]
    )
    return -1 if inv & 1 else 1


def star_word(word: Word, sigma: Perm, basis: SuperBasis) -> tuple[int, Word]:
    """Apply the twisted action to a single word: ``(sign, permuted word)``."""
    odd = frozenset(i + 1 for i, z in enumerate(word) if z > basis.k)
    return f_I(sigma, odd), tuple(word[s - 1] for s in sigma)


def star_action(vec: dict, sigma: Perm, basis: SuperBasis) -> dict:
    """Twisted action extended linearly to a tensor vector."""
    n = len(sigma)
    out: dict = {}
    for w, c in vec.items():
        if len(w) != n:
            raise ValueError(f"degree mismatch: word {w} vs permutation of {n}")
        sgn, w2 = star_word(w, sigma, basis)
        nv = out.get(w2, 0) + sgn * c
        if nv:
            out[w2] = nv
        else:
            out.pop(w2, None)
    return out


def star_group_algebra(vec: dict, element: dict, basis: SuperBasis) -> dict:
    """Apply a group-algebra element ``sum c_sigma sigma`` on the right."""
    out: dict = {}
    for sigma, c in element.items():
        for w2, v in star_action(vec, sigma, basis).items():
            nv = out.get(w2, 0) + c * v
            if nv:
                out[w2] = nv
            else:
                out.pop(w2, None)
    return out


# ---------------------------------------------------------------------------
# Symmetrizers in the group algebra.


def full_symmetrizer(n: int) -> dict:
    """Sum of all permutations of ``1..n``."""
    return {p: 1 for p in permutations(range(1, n + 1))}


def sign_symmetrizer(n: int) -> dict:
    """Signed sum of all permutations of ``1..n``."""
    return {p: perm_sign(p) for p in permutations(range(1, n + 1))}


def _block_permutations(blocks: Sequence[Sequence[int]], n: int) -> list[Perm]:
    """All permutations of ``1..n`` preserving each block setwise."""
    out = []
    for assignment in product(*[permutations(b) for b in blocks]):
        img = list(range(n + 1))
        for block, perm in zip(blocks, assignment):
            for src, dst in zip(block, perm):
                img[src] = dst
        out.append(tuple(img[1:]))
    return out


def tableau_symmetrizer(rows: Sequence[Sequence[int]]) -> dict:
    """Row sum times signed column sum for a bijective tableau filling."""
    entries = [e for row in rows for e in row]
    n = len(entries)
    if sorted(entries) != list(range(1, n + 1)):
        raise ValueError("tableau must be a bijective filling with 1..n")
    ncols = max((len(r) for r in rows), default=0)
    cols = [[row[j] for row in rows if len(row) > j] for j in range(ncols)]
    rplus = {p: 1 for p in _block_permutations(rows, n)}
    cminus = {p: perm_sign(p) for p in _block_permutations(cols, n)}
    out: dict = {}
    for p, cp in rplus.items():
        for q, cq in cminus.items():
            key = compose(p, q)
            nv = out.get(key, 0) + cp * cq
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
    return out


def symmetrizer(kind: str, n: Optional[int] = None, tableau=None) -> dict:
    """Dispatch on ``'full'`` / ``'sign'`` (need ``n``) or ``'tableau'``."""
    if kind == "full":
        return full_symmetrizer(n)
    if kind == "sign":
        return sign_symmetrizer(n)
    if kind == "tableau":
        return tableau_symmetrizer(tableau)
    raise ValueError(f"unknown symmetrizer kind {kind!r}")


def standard_tableau(lam: Partition) -> list[list[int]]:
    """The row-major standard filling of a shape."""
    rows, nxt = [], 1
    for p in lam:
        rows.append(list(range(nxt, nxt + p)))
        nxt += p
    return rows


# ---------------------------------------------------------------------------
# Subspaces of a degree slice.


class TensorSubspace:
    """A subspace of the degree-``n`` slice in canonical echelon form."""

    __slots__ = ("n", "ambient_dim", "_basis")

    def __init__(self, n: int, ambient_dim: int):
        self.n = n
        self.ambient_dim = ambient_dim
        self._basis = EchelonBasis()

    @property
    def dim(self) -> int:
        return self._basis.dim

    def rows(self) -> list[dict]:
        return self._basis.rows()

    def insert(self, vec: dict) -> bool:
        return self._basis.insert(intify(vec))

    def _insert_int(self, vec: dict) -> bool:
        return self._basis.insert(vec)

    def contains(self, vec: dict) -> bool:
        return self._basis.contains(intify(vec))

    def __eq__(self, other):
        return (
            isinstance(other, TensorSubspace)
            and self.n == other.n
            and self.ambient_dim == other.ambient_dim
            and self._basis == other._basis
        )

    def __repr__(self):
        return f"TensorSubspace(n={self.n}, dim={self.dim}/{self.ambient_dim})"


def _adjacent_transpositions(n: int) -> list[Perm]:
    out = []
    for i in range(1, n):
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        out.append(tuple(img))
    return out


def _apply_ga_to_word(word: Word, element: dict, basis: SuperBasis) -> dict:
    out: dict = {}
    for sigma, c in element.items():
        sgn, w2 = star_word(word, sigma, basis)
        nv = out.get(w2, 0) + sgn * c
        if nv:
            out[w2] = nv
        else:
            out.pop(w2, None)
    return out


def module_W(lam, basis: SuperBasis, n: int, cap: int = DIM_CAP) -> TensorSubspace:
    """Span of the tableau-symmetrized words, closed under the action.

    This is the isotypic block of the shape inside the degree-``n``
    slice, computed from scratch: seed with ``w * e_T`` for every word
    ``w`` and one fixed standard tableau, then saturate under the
    adjacent transpositions.  Results are cached per ``(shape, k, l)``
    and must be treated as read-only.
    """
    lam = check_partition(lam)
    if sum(lam) != n:
        raise ValueError(f"|{lam}| != n = {n}")
    _check_cap(basis, n, cap)
    return _module_W_cached(lam, basis.k, basis.l)


@lru_cache(maxsize=None)
def _module_W_cached(lam: Partition, k: int, l: int) -> TensorSubspace:
    basis = SuperBasis(k, l)
    n = sum(lam)
    e = tableau_symmetrizer(standard_tableau(lam))
    sub = TensorSubspace(n, basis.dim**n)
    pending: deque[dict] = deque()
    for w in basis.words(n):
        v = _apply_ga_to_word(w, e, basis)
        if v and sub._insert_int(v):
            pending.append(v)
    trans = _adjacent_transpositions(n)
    while pending:
        v = pending.popleft()
        for t in trans:
            moved = star_action(v, t, basis)
            if sub._insert_int(moved):
                pending.append(moved)
    return sub


def ideal_subspace(
    omega: Filter, basis: SuperBasis, n: int, cap: int = DIM_CAP
) -> TensorSubspace:
    """Degree-``n`` slice of the subspace attached to the filter members."""
    _check_cap(basis, n, cap)
    sub = TensorSubspace(n, basis.dim**n)
    for lam in enumerate_partitions(n):
        if omega.member(lam):
            for row in module_W(lam, basis, n, cap).rows():
                sub._insert_int(row)
    return sub


def check_ideal(
    omega_set: Iterable, basis: SuperBasis, n_max: int, cap: int = DIM_CAP
) -> bool:
    """Decide whether the blocks of the given shapes form a two-sided ideal.

    For each degree ``n < n_max`` and each basis vector ``v`` of the
    degree slice spanned by the listed shapes, both ``z (x) v`` and
    ``v (x) z`` must land in the degree ``n+1`` slice, for every
    generator ``z``.  The input need not be upward closed; that is the
    point of the check.
    """
    _check_cap(basis, n_max, cap)
    members = {check_partition(m) for m in omega_set}
    slices = {}
    for n in range(n_max + 1):
        sub = TensorSubspace(n, basis.dim**n)
        for lam in members:
            if sum(lam) == n:
                for row in module_W(lam, basis, n, cap).rows():
                    sub._insert_int(row)
        slices[n] = sub
    for n in range(n_max):
        target = slices[n + 1]
        for row in slices[n].rows():
            for z in basis.letters:
                left = {(z,) + w: c for w, c in row.items()}
                right = {w + (z,): c for w, c in row.items()}
                if not target.contains(left) or not target.contains(right):
                    return False
    return True


def generated_ideal(
    relations: Iterable[dict], basis: SuperBasis, n: int, cap: int = DIM_CAP
) -> TensorSubspace:
    """Degree-``n`` slice of the two-sided ideal spanned by degree-2 relations."""
    _check_cap(basis, n, cap)
    rels = []
    for rel in relations:
        rel = intify(rel)
        if any(len(w) != 2 for w in rel):
            raise ValueError("relations must be homogeneous of degree 2")
        rels.append(rel)
    sub = TensorSubspace(n, basis.dim**n)
    if n >= 2:
        for i in range(n - 1):
            lefts = list(basis.words(i))
            rights = list(basis.words(n - 2 - i))
            for rel in rels:
                for w1 in lefts:
                    for w2 in rights:
                        sub._insert_int({w1 + r + w2: c for r, c in rel.items()})
    return sub


# ---------------------------------------------------------------------------
# Multilinear polynomials and identity checks.


class MultilinearPoly:
    """``sum_sigma alpha_sigma x_{sigma(1)} ... x_{sigma(d)}`` with exact coefficients."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: dict):
        clean = {}
        for sigma, c in coeffs.items():
            if sorted(sigma) != list(range(1, degree + 1)):
                raise ValueError(f"{sigma} is not a permutation of 1..{degree}")
            if c:
                clean[tuple(sigma)] = c
        self.degree = degree
        self.coeffs = clean

    def int_coeffs(self) -> list[tuple[Perm, int]]:
        """Coefficients scaled by the common denominator (identity-equivalent)."""
        scaled = intify(self.coeffs)
        return sorted(scaled.items())

    def __repr__(self):
        return f"MultilinearPoly(degree={self.degree}, terms={len(self.coeffs)})"


# Free polynomials in noncommuting variables: word over 0-based variable
# ids -> coefficient.  Only used to build multilinear identities.


def free_var(i: int) -> dict:
    return {(i,): 1}


def free_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for w, c in b.items():
        nv = out.get(w, 0) + c
        if nv:
            out[w] = nv
        else:
            out.pop(w, None)
    return out


def free_scale(a: dict, s) -> dict:
    return {w: c * s for w, c in a.items()} if s else {}


def free_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            w = wa + wb
            nv = out.get(w, 0) + ca * cb
            if nv:
                out[w] = nv
            else:
                out.pop(w, None)
    return out


def free_commutator(a: dict, b: dict) -> dict:
    return free_add(free_mul(a, b), free_scale(free_mul(b, a), -1))


def multilinear_from_free(poly: dict, d: int) -> MultilinearPoly:
    """Read an already multilinear free polynomial in ``d`` distinct variables."""
    coeffs = {}
    for word, c in poly.items():
        if sorted(word) != list(range(d)):
            raise ValueError(f"monomial {word} is not multilinear in {d} variables")
        coeffs[tuple(x + 1 for x in word)] = c
    return MultilinearPoly(d, coeffs)


def multilinearize(poly: dict) -> MultilinearPoly:
    """Full polarization of a homogeneous free polynomial.

    Each variable of multidegree ``m`` is replaced by a block of ``m``
    fresh slots, summing over every order in which the slots can occupy
    the variable's positions.  The result vanishes on an algebra exactly
    when the original does (characteristic zero).
    """
    if not poly:
        raise ValueError("cannot multilinearize the zero polynomial")
    words = list(poly)
    ref = Counter(words[0])
    for w in words[1:]:
        if Counter(w) != ref:
            raise ValueError("polynomial is not multihomogeneous")
    variables = sorted(ref)
    offsets = {}
    start = 0
    for v in variables:
        offsets[v] = start
        start += ref[v]
    d = start
    coeffs: dict = {}
    for word, c in poly.items():
        pos_by_var = {v: [i for i, x in enumerate(word) if x == v] for v in variables}
        label_pools = [
            permutations(range(offsets[v] + 1, offsets[v] + 1 + ref[v]))
            for v in variables
        ]
        for assignment in product(*label_pools):
            labels = [0] * len(word)
            for v, labs in zip(variables, assignment):
                for p, lb in zip(pos_by_var[v], labs):
                    labels[p] = lb
            key = tuple(labels)
            nv = coeffs.get(key, 0) + c
            if nv:
                coeffs[key] = nv
            else:
                coeffs.pop(key, None)
    return MultilinearPoly(d, coeffs)


def standard_poly(d: int) -> MultilinearPoly:
    """The alternating sum over all orders of ``d`` distinct variables."""
    return MultilinearPoly(
        d, {p: perm_sign(p) for p in permutations(range(1, d + 1))}
    )


def commutator_product(j: int) -> MultilinearPoly:
    """``[x1,x2][x3,x4]...[x_{2j-1},x_{2j}]`` as a multilinear polynomial."""
    if j < 1:
        raise ValueError("need at least one commutator factor")
    poly = free_commutator(free_var(0), free_var(1))
    for i in range(1, j):
        poly = free_mul(poly, free_commutator(free_var(2 * i), free_var(2 * i + 1)))
    return multilinear_from_free(poly, 2 * j)


def popov5a() -> MultilinearPoly:
    """Multilinearization of ``[[x,y]^2, x]`` (degree 5)."""
    x, y = free_var(0), free_var(1)
    c = free_commutator(x, y)
    return multilinearize(free_commutator(free_mul(c, c), x))


def popov5b() -> MultilinearPoly:
    """``[[[x1,x2],[x3,x4]],x5]`` (already multilinear, degree 5)."""
    inner = free_commutator(
        free_commutator(free_var(0), free_var(1)),
        free_commutator(free_var(2), free_var(3)),
    )
    return multilinear_from_free(free_commutator(inner, free_var(4)), 5)


def br_cube() -> MultilinearPoly:
    """Multilinearization of ``[x,y]^3`` (degree 6)."""
    c = free_commutator(free_var(0), free_var(1))
    return multilinearize(free_mul(free_mul(c, c), c))


def s3_cubed() -> MultilinearPoly:
    """Multilinearization of the cubed degree-3 standard polynomial (degree 9)."""
    s3 = {
        tuple(p): perm_sign(tuple(x + 1 for x in p))
        for p in permutations(range(3))
    }
    return multilinearize(free_mul(free_mul(s3, s3), s3))


_NAMED_POLYS = {
    "s4": lambda: standard_poly(4),
    "popov5a": popov5a,
    "popov5": popov5a,
    "popov5b": popov5b,
    "br-cube": br_cube,
    "s3cube": s3_cubed,
}


def named_poly(name: str) -> MultilinearPoly:
    """Built-in polynomials: ``commutators:j``, ``popov5a``, ``popov5b``,
    ``br-cube``, ``s4``, ``s3cube``."""
    if name.startswith("commutators:"):
        return commutator_product(int(name.split(":", 1)[1]))
    try:
        return _NAMED_POLYS[name]()
    except KeyError:
        raise ValueError(f"unknown polynomial {name!r}") from None


def _compositions(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """Tuples of ``d`` positive integers summing to ``n``."""
    if d == 0:
        if n == 0:
            yield ()
        return
    if d == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - d + 2):
        for rest in _compositions(n - first, d - 1):
            yield (first,) + rest


def evaluate_identity(
    g: MultilinearPoly, omega: Filter, basis: SuperBasis, n: int, cap: int = DIM_CAP
) -> bool:
    """True iff ``g`` vanishes identically on the quotient in degree ``n``.

    Every substitution of words with total length ``n`` is evaluated and
    tested for membership in the filter's degree-``n`` subspace; being
    multilinear, ``g`` vanishes on the whole algebra iff it does on
    these monomial tuples.
    """
    _check_cap(basis, n, cap)
    ideal = ideal_subspace(omega, basis, n, cap)
    items = g.int_coeffs()
    words_by_len = {m: list(basis.words(m)) for m in range(1, n - g.degree + 2)}
    for comp in _compositions(n, g.degree):
        for tup in product(*[words_by_len[m] for m in comp]):
            val: dict = {}
            for sigma, c in items:
                w = tuple(chain.from_iterable(tup[s - 1] for s in sigma))
                nv = val.get(w, 0) + c
                if nv:
                    val[w] = nv
                else:
                    val.pop(w, None)
            if val and not ideal.contains(val):
                return False
    return True


def is_identity_EE(g: MultilinearPoly, cap: int = DEGREE_CAP) -> bool:
    """Decide whether ``g`` is an identity of the square of the Grassmann algebra.

    The criterion is the vanishing of
    ``sum_sigma alpha_sigma f_{I1}(sigma) f_{I2}(sigma)`` for every pair
    of subsets ``I1, I2`` of the variable positions.
    """
    d = g.degree
    if d > cap:
        raise CapExceeded(f"degree {d} exceeds cap {cap}")
    items = g.int_coeffs()
    if not items:
        return True
    subsets = [frozenset(s) for m in range(d + 1) for s in _subsets(d, m)]
    fvals = [[f_I(sigma, sub) for sigma, _ in items] for sub in subsets]
    for i1 in range(len(subsets)):
        f1 = fvals[i1]
        for i2 in range(i1, len(subsets)):
            f2 = fvals[i2]
            total = 0
            for t, (_, c) in enumerate(items):
                total += c * f1[t] * f2[t]
            if total:
                return False
    return True


def _subsets(d: int, m: int):
    from itertools import combinations

    return combinations(range(1, d + 1), m)


def is_identity_EE_sampled(
    g: MultilinearPoly, samples: int = 200, seed: int = 0
) -> bool:
    """Randomized spot check of the subset-pair criterion for large degrees.

    Returns True when no sampled pair violates the vanishing condition;
    a True verdict is evidence, not proof.
    """
    d = g.degree
    rng = random.Random(seed)
    items = g.int_coeffs()
    if not items:
        return True
    universe = list(range(1, d + 1))
    for _ in range(samples):
        i1 = frozenset(v for v in universe if rng.random() < 0.5)
        i2 = frozenset(v for v in universe if rng.random() < 0.5)
        total = 0
        for sigma, c in items:
            total += c * f_I(sigma, i1) * f_I(sigma, i2)
        if total:
            return False
    return True


def ee_identity_kernel_dim(d: int, cap: int = KERNEL_DEGREE_CAP) -> int:
    """Dimension of the space of degree-``d`` multilinear identities.

    Rank-nullity of the subset-pair constraint matrix over the
    rationals; rows are deduplicated before elimination since distinct
    subset pairs often impose the same condition.
    """
    if d > cap:
        raise CapExceeded(f"degree {d} exceeds cap {cap}")
    perms = list(permutations(range(1, d + 1)))
    subsets = [frozenset(s) for m in range(d + 1) for s in _subsets(d, m)]
    fcols = [[f_I(p, sub) for p in perms] for sub in subsets]
    rows = []
    for i1 in range(len(subsets)):
        for i2 in range(i1, len(subsets)):
            rows.append(
                [fcols[i1][t] * fcols[i2][t] for t in range(len(perms))]
            )
    from .linalg import dense_rank

    return factorial(d) - dense_rank(rows)


@lru_cache(maxsize=None)
def _word_symmetrized(word: Word, k: int, l: int, signed: bool) -> tuple:
    basis = SuperBasis(k, l)
    n = len(word)
    out: dict = {}
    for sigma in permutations(range(1, n + 1)):
        sgn, w2 = star_word(word, sigma, basis)
        if signed:
            sgn *= perm_sign(sigma)
        nv = out.get(w2, 0) + sgn
        if nv:
            out[w2] = nv
        else:
            out.pop(w2, None)
    return tuple(sorted(out.items()))


def check_annihilation(
    g: MultilinearPoly,
    monomials: Sequence[Word],
    basis: SuperBasis,
    cap: int = DEGREE_CAP,
) -> bool:
    """True iff ``g(monomials)`` is killed by both total symmetrizers.

    The substituted value is starred with the full and the signed sums
    over the whole symmetric group of the total degree; both products
    must vanish, which certifies that the value has no component in the
    single-row or single-column blocks.
    """
    words = [tuple(m) for m in monomials]
    if len(words) != g.degree:
        raise ValueError(f"need {g.degree} monomials, got {len(words)}")
    for w in words:
        if not w:
            raise ValueError("monomials must be nonempty words")
        for z in w:
            basis.parity(z)
    n = sum(len(w) for w in words)
    if n > cap:
        raise CapExceeded(f"total degree {n} exceeds cap {cap}")
    value: dict = {}
    for sigma, c in g.int_coeffs():
        w = tuple(chain.from_iterable(words[s - 1] for s in sigma))
        nv = value.get(w, 0) + c
        if nv:
            value[w] = nv
        else:
            value.pop(w, None)
    for signed in (False, True):
        acc: dict = {}
        for w, c in value.items():
            for w2, s in _word_symmetrized(w, basis.k, basis.l, signed):
                nv = acc.get(w2, 0) + c * s
                if nv:
                    acc[w2] = nv
                else:
                    acc.pop(w2, None)
        if acc:
            return False
    return True
