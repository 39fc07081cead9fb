import random
from fractions import Fraction

import pytest

from filteralg.dims import (
    dimension_record,
    f_lambda,
    f_lambda_by_recursion,
    hs_eval,
    iter_super_tableaux,
    schur_dim,
    schur_dim_by_enumeration,
    w_dim,
)
from filteralg.lr import lr_coefficient, outer_product
from filteralg.partitions import conjugate, enumerate_partitions, in_hook


def all_partitions_upto(n_max):
    return [lam for n in range(n_max + 1) for lam in enumerate_partitions(n)]


def test_f_lambda_examples():
    assert f_lambda((2, 1)) == 2
    assert f_lambda((7,)) == 1
    assert f_lambda((1,) * 7) == 1
    assert f_lambda(()) == 1
    assert sum(f_lambda(lam) ** 2 for lam in enumerate_partitions(4)) == 24


def test_f_lambda_against_corner_recursion():
    for lam in all_partitions_upto(12):
        assert f_lambda(lam) == f_lambda_by_recursion(lam), lam


def test_regular_representation_identity():
    from math import factorial

    for n in range(9):
        assert sum(f_lambda(lam) ** 2 for lam in enumerate_partitions(n)) == factorial(n)


def test_schur_dim_examples():
    assert schur_dim((2, 1), 2, 0) == 2
    assert schur_dim((1, 1, 1), 2, 0) == 0
    assert schur_dim((2,), 2, 0) == 3
    assert schur_dim((2, 1), 1, 1) == 2
    assert schur_dim((), 2, 1) == 1


def test_schur_dim_of_hooks_in_minimal_superspace():
    for n in range(1, 9):
        for lam in enumerate_partitions(n, hook=(1, 1)):
            assert schur_dim(lam, 1, 1) == 2
            assert schur_dim_by_enumeration(lam, 1, 1) == 2


def test_schur_dim_vanishes_outside_hook():
    for lam in all_partitions_upto(8):
        for k in range(3):
            for l in range(3):
                assert (schur_dim(lam, k, l) == 0) == (not in_hook(lam, k, l))


def test_schur_dim_against_enumeration():
    for lam in all_partitions_upto(6):
        for k in range(3):
            for l in range(3):
                assert schur_dim(lam, k, l) == schur_dim_by_enumeration(lam, k, l)


@pytest.mark.parametrize(
    "lam",
    [(4, 3), (3, 3, 1), (4, 4), (3, 3, 2), (2, 2, 2, 2), (5, 1, 1, 1), (8,), (1,) * 8],
)
def test_schur_dim_against_enumeration_large(lam):
    for k, l in [(2, 0), (1, 1), (2, 1), (2, 2)]:
        assert schur_dim(lam, k, l) == schur_dim_by_enumeration(lam, k, l)


def test_schur_dim_duality():
    for lam in all_partitions_upto(8):
        for k in range(4):
            for l in range(4):
                assert schur_dim(lam, k, l) == schur_dim(conjugate(lam), l, k)


def test_hook_decomposition_sums():
    for k in range(3):
        for l in range(3):
            for n in range(8):
                total = sum(
                    w_dim(lam, k, l) for lam in enumerate_partitions(n, hook=(k, l))
                )
                assert total == (k + l) ** n, (k, l, n)


def test_hook_character_sum():
    for n in range(1, 17):
        assert (
            sum(f_lambda(lam) for lam in enumerate_partitions(n, hook=(1, 1)))
            == 2 ** (n - 1)
        )


def test_w_dim_examples():
    assert w_dim((2,), 2, 0) == 3
    assert w_dim((1, 1), 2, 0) == 1
    assert w_dim((2, 1), 1, 1) == 4
    rec = dimension_record((7, 7, 7, 2, 2, 2, 2), 2, 1)
    assert rec.w == rec.f * rec.schur


def test_hs_eval_examples():
    assert hs_eval((1,), (Fraction(1, 2),), (Fraction(1, 3),)) == Fraction(5, 6)
    assert hs_eval((2,), (2,), (3,)) == 10
    assert hs_eval((), (), ()) == 1


def test_hs_eval_at_ones_counts_tableaux():
    for lam in all_partitions_upto(6):
        for k in range(3):
            for l in range(3):
                assert hs_eval(lam, (1,) * k, (1,) * l) == schur_dim(lam, k, l)


def test_hs_eval_against_weighted_enumeration():
    rng = random.Random(11)
    points = [
        (
            tuple(Fraction(rng.randint(-3, 5), rng.randint(1, 4)) for _ in range(2)),
            tuple(Fraction(rng.randint(-3, 5), rng.randint(1, 4)) for _ in range(2)),
        )
        for _ in range(2)
    ]
    for lam in all_partitions_upto(5):
        for xs, ys in points:
            expected = Fraction(0)
            for tab in iter_super_tableaux(lam, 2, 2):
                weight = Fraction(1)
                for row in tab:
                    for v in row:
                        weight *= xs[v - 1] if v <= 2 else ys[v - 3]
                expected += weight
            assert hs_eval(lam, xs, ys) == expected, (lam, xs, ys)


def test_product_identity_small():
    rng = random.Random(3)
    points = [
        (
            tuple(Fraction(rng.randint(-4, 6), rng.randint(1, 5)) for _ in range(2)),
            tuple(Fraction(rng.randint(-4, 6), rng.randint(1, 5)) for _ in range(1)),
        )
        for _ in range(2)
    ]
    shapes = all_partitions_upto(3)
    for mu in shapes:
        for lam in shapes:
            exp = outer_product(mu, lam)
            for xs, ys in points:
                lhs = hs_eval(mu, xs, ys) * hs_eval(lam, xs, ys)
                rhs = sum(
                    (c * hs_eval(nu, xs, ys) for nu, c in exp.terms.items()),
                    Fraction(0),
                )
                assert lhs == rhs, (mu, lam, xs, ys)


def test_lr_coefficient_zero_terms_do_not_contribute():
    # spot check that the expansion in the product identity is complete:
    # adding explicit zero terms changes nothing
    xs, ys = (Fraction(2), Fraction(1, 2)), (Fraction(3),)
    mu, lam = (2, 1), (1, 1)
    lhs = hs_eval(mu, xs, ys) * hs_eval(lam, xs, ys)
    rhs = sum(
        (
            lr_coefficient(mu, lam, nu) * hs_eval(nu, xs, ys)
            for nu in enumerate_partitions(5)
        ),
        Fraction(0),
    )
    assert lhs == rhs
