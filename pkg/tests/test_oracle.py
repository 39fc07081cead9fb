import random
from itertools import permutations, product

import pytest

from filteralg.dims import w_dim
from filteralg.filters import Filter
from filteralg.oracle import (
    CapExceeded,
    SuperBasis,
    check_ideal,
    commutator_product,
    compose,
    evaluate_identity,
    f_I,
    free_commutator,
    free_var,
    full_symmetrizer,
    generated_ideal,
    ideal_subspace,
    module_W,
    multilinear_from_free,
    sign_symmetrizer,
    standard_tableau,
    star_action,
    star_group_algebra,
    symmetrizer,
    tableau_symmetrizer,
)
from filteralg.partitions import c_stat, enumerate_partitions

B20 = SuperBasis(2, 0)
B11 = SuperBasis(1, 1)
B21 = SuperBasis(2, 1)


def test_f_I_examples():
    assert f_I((3, 1, 2), frozenset()) == 1
    assert f_I((2, 1), {1, 2}) == -1
    assert f_I((2, 3, 1), {1, 3}) == -1
    assert f_I((1, 2, 3), {1, 2, 3}) == 1


def test_star_action_signs():
    swap = (2, 1)
    assert star_action({(1, 2): 1}, swap, B20) == {(2, 1): 1}
    # two odd letters anticommute
    assert star_action({(2, 2): 1}, swap, B11) == {(2, 2): -1}
    assert star_action({(1, 2): 1}, swap, B11) == {(2, 1): 1}


def test_star_action_degree_mismatch():
    with pytest.raises(ValueError):
        star_action({(1, 1): 1}, (1, 2, 3), B20)


def test_star_action_associativity_random():
    rng = random.Random(42)
    for _ in range(100):
        n = rng.randint(1, 5)
        basis = SuperBasis(rng.randint(0, 2), rng.randint(0, 2))
        if basis.dim == 0:
            continue
        word = tuple(rng.choice(basis.letters) for _ in range(n))
        perms = list(permutations(range(1, n + 1)))
        tau, pi = rng.choice(perms), rng.choice(perms)
        v = {word: 1}
        lhs = star_action(star_action(v, tau, basis), pi, basis)
        rhs = star_action(v, compose(tau, pi), basis)
        assert lhs == rhs, (word, tau, pi, basis)


def test_star_action_associativity_exhaustive_n3():
    perms = list(permutations((1, 2, 3)))
    for word in product(B21.letters, repeat=3):
        for tau in perms:
            for pi in perms:
                v = {word: 1}
                lhs = star_action(star_action(v, tau, B21), pi, B21)
                rhs = star_action(v, compose(tau, pi), B21)
                assert lhs == rhs


def test_symmetrizers():
    assert full_symmetrizer(2) == {(1, 2): 1, (2, 1): 1}
    assert sign_symmetrizer(2) == {(1, 2): 1, (2, 1): -1}
    assert tableau_symmetrizer([[1, 2]]) == {(1, 2): 1, (2, 1): 1}
    assert tableau_symmetrizer([[1], [2]]) == {(1, 2): 1, (2, 1): -1}
    assert symmetrizer("full", 2) == full_symmetrizer(2)
    assert symmetrizer("sign", 2) == sign_symmetrizer(2)
    assert symmetrizer("tableau", tableau=[[1, 2], [3]]) == tableau_symmetrizer(
        [[1, 2], [3]]
    )
    with pytest.raises(ValueError):
        tableau_symmetrizer([[1, 3]])


def test_antisymmetrizer_pins_the_odd_sign():
    # an odd-odd tensor hit by 1 - (12) must produce the anticommutator
    e = tableau_symmetrizer([[1], [2]])
    assert star_group_algebra({(2, 2): 1}, e, B11) == {(2, 2): 2}
    out = star_group_algebra({(1, 2): 1}, e, SuperBasis(0, 2))
    assert out == {(1, 2): 1, (2, 1): 1}
    # and even letters get the usual alternating behaviour
    out = star_group_algebra({(1, 2): 1}, e, B20)
    assert out == {(1, 2): 1, (2, 1): -1}


def test_module_dims_examples():
    assert module_W((2,), B20, 2).dim == 3
    assert module_W((1, 1), B11, 2).dim == 2
    assert module_W((1, 1, 1), B20, 3).dim == 0
    assert module_W((), SuperBasis(1, 0), 0).dim == 1


def test_module_requires_matching_degree():
    with pytest.raises(ValueError):
        module_W((2, 1), B20, 2)


def test_cap_enforced():
    with pytest.raises(CapExceeded):
        module_W((1,) * 13, B20, 13)


def test_decomposition_against_formulas():
    for basis in (B20, B11, B21):
        for n in range(5):
            total = 0
            for lam in enumerate_partitions(n):
                sub = module_W(lam, basis, n)
                assert sub.dim == w_dim(lam, basis.k, basis.l), (lam, basis)
                total += sub.dim
            assert total == basis.dim**n


def test_module_independent_of_tableau_choice():
    def column_tableau(lam):
        from filteralg.partitions import conjugate

        rows = [[0] * p for p in lam]
        nxt = 1
        for j in range(lam[0] if lam else 0):
            for i in range(conjugate(lam)[j]):
                rows[i][j] = nxt
                nxt += 1
        return rows

    for lam in [(2, 1), (2, 2), (3, 1), (2, 1, 1)]:
        n = sum(lam)
        for basis in (B20, B11):
            e_row = tableau_symmetrizer(standard_tableau(lam))
            e_col = tableau_symmetrizer(column_tableau(lam))
            span_row = _span_of(e_row, basis, n)
            span_col = _span_of(e_col, basis, n)
            assert span_row == span_col, (lam, basis)


def _span_of(e, basis, n):
    from filteralg.linalg import EchelonBasis
    from filteralg.oracle import _apply_ga_to_word, _adjacent_transpositions

    ech = EchelonBasis()
    pending = []
    for w in basis.words(n):
        v = _apply_ga_to_word(w, e, basis)
        if v and ech.insert(v):
            pending.append(v)
    while pending:
        v = pending.pop()
        for t in _adjacent_transpositions(n):
            moved = star_action(v, t, basis)
            if ech.insert(moved):
                pending.append(moved)
    return ech


def test_ideal_subspace_examples():
    assert ideal_subspace(Filter([(1, 1)], (2, 0)), B20, 2).dim == 1
    assert ideal_subspace(Filter([()], (2, 0)), B20, 3).dim == 8
    assert ideal_subspace(Filter([(2, 1)], (2, 0)), B20, 3).dim == 4


def test_check_ideal_filters_and_non_filters():
    def members_upto(f, nmax):
        return [
            lam
            for n in range(nmax + 1)
            for lam in enumerate_partitions(n)
            if f.member(lam)
        ]

    for gens in [[(1, 1)], [(2,)], [(2, 1)], [()]]:
        for ambient in [(2, 0), (1, 1)]:
            f = Filter(gens, ambient)
            assert check_ideal(members_upto(f, 4), SuperBasis(*ambient), 4), (
                gens,
                ambient,
            )
    assert not check_ideal([(1, 1)], B20, 3)
    assert not check_ideal([(2,)], B11, 3)
    assert not check_ideal([(1,), (2,)], B20, 3)
    # the full space is trivially an ideal
    everything = [lam for n in range(4) for lam in enumerate_partitions(n)]
    assert check_ideal(everything, B20, 3)


def test_super_commutation_relations():
    ideal = ideal_subspace(Filter([(1, 1)], (1, 1)), B11, 2)
    # t u - u t and u u (half the anticommutator) die in the quotient
    assert ideal.contains({(1, 2): 1, (2, 1): -1})
    assert ideal.contains({(2, 2): 1})
    assert not ideal.contains({(1, 1): 1})
    assert not ideal.contains({(1, 2): 1})


def test_commutator_values_avoid_single_row_block():
    for basis in (B20, B11):
        for n in range(2, 6):
            top = _span_c_at_least(basis, n, 1)
            for split in range(1, n):
                for w1 in basis.words(split):
                    for w2 in basis.words(n - split):
                        vec = {}
                        vec[w1 + w2] = vec.get(w1 + w2, 0) + 1
                        vec[w2 + w1] = vec.get(w2 + w1, 0) - 1
                        vec = {w: c for w, c in vec.items() if c}
                        assert top.contains(vec), (w1, w2, basis)


def test_commutator_products_avoid_shallow_blocks():
    for basis in (B20, B11):
        for j, n in [(2, 4), (2, 5)]:
            deep = _span_c_at_least(basis, n, j)
            g = commutator_product(j)
            items = g.int_coeffs()
            from filteralg.oracle import _compositions

            for comp in _compositions(n, 2 * j):
                for tup in product(*[list(basis.words(m)) for m in comp]):
                    val = {}
                    for sigma, c in items:
                        w = tuple()
                        for s in sigma:
                            w = w + tup[s - 1]
                        val[w] = val.get(w, 0) + c
                    val = {w: c for w, c in val.items() if c}
                    if val:
                        assert deep.contains(val), (tup, basis)


def _span_c_at_least(basis, n, j):
    from filteralg.linalg import EchelonBasis

    ech = EchelonBasis()
    for lam in enumerate_partitions(n):
        if c_stat(lam) >= j:
            for row in module_W(lam, basis, n).rows():
                ech.insert(row)
    return ech


def test_generated_ideal_reconstructions():
    sym_rel = [{(1, 2): 1, (2, 1): -1}]
    wedge_rel = [{(i, j): 1, (j, i): 1} for i in (1, 2) for j in (1, 2) if i <= j]
    for n in range(2, 5):
        assert generated_ideal(sym_rel, B20, n) == ideal_subspace(
            Filter([(1, 1)], (2, 0)), B20, n
        )
        assert generated_ideal(wedge_rel, B20, n) == ideal_subspace(
            Filter([(2,)], (2, 0)), B20, n
        )
    assert generated_ideal([], B20, 3).dim == 0


def test_generated_ideal_rejects_wrong_degree():
    with pytest.raises(ValueError):
        generated_ideal([{(1, 1, 1): 1}], B20, 3)


def test_evaluate_identity_commutativity():
    comm = commutator_product(1)
    sym = Filter([(1, 1)], (2, 0))
    for n in range(2, 6):
        assert evaluate_identity(comm, sym, B20, n)


def test_evaluate_identity_lie_nilpotence():
    lie3 = multilinear_from_free(
        free_commutator(free_commutator(free_var(0), free_var(1)), free_var(2)), 3
    )
    f = Filter([(1, 1)], (1, 1))
    for n in range(3, 6):
        assert evaluate_identity(lie3, f, B11, n), n
    # the mirror filter is not commutative in the mixed super case: its
    # quotient has t^2 = 0 but tu = -ut, so [[t,u],u] = 4tu^2 survives
    assert not evaluate_identity(lie3, Filter([(2,)], (1, 1)), B11, 3)
    # with no odd letters it is the plain exterior algebra, where the
    # identity does hold
    for n in range(3, 6):
        assert evaluate_identity(lie3, Filter([(2,)], (2, 0)), B20, n)


def test_evaluate_identity_three_commutators():
    assert evaluate_identity(
        commutator_product(3), Filter([(2, 2)], (2, 0)), B20, 6
    )


def test_evaluate_identity_finds_failures():
    comm = commutator_product(1)
    assert not evaluate_identity(comm, Filter([(2, 2)], (2, 0)), B20, 2)
    assert not evaluate_identity(comm, Filter([(2,)], (2, 0)), B20, 2)
