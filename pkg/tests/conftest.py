import pytest

from filteralg import Filter

# Filters used by the cross-module property tests: a spread of ambients,
# generator counts and growth behaviours (nilpotent, polynomial, exponential).
CATALOG_SPECS = [
    ([()], (1, 1)),
    ([(1,)], (2, 0)),
    ([(2,)], (2, 0)),
    ([(1, 1)], (2, 0)),
    ([(3,)], (1, 0)),
    ([(3,), (1, 1)], (1, 0)),
    ([(2, 1)], (2, 0)),
    ([(1, 1, 1)], (2, 0)),
    ([(2, 2)], (2, 0)),
    ([(2, 2)], (1, 1)),
    ([(1, 1)], (1, 1)),
    ([(2,)], (1, 1)),
    ([(2, 1)], (1, 1)),
    ([(3, 2)], (2, 1)),
    ([(2, 2), (4,)], (2, 0)),
    ([(1, 1)], (0, 2)),
    ([(2,)], (0, 2)),
    ([(3, 3, 3)], (2, 2)),
    ([(2, 2, 2)], (1, 2)),
    ([(2,)], (1, 0)),
    ([(4,), (2, 2), (1, 1, 1, 1)], (2, 2)),
    ([(3, 1)], (2, 0)),
    ([(5,), (1, 1)], (1, 1)),
    ([(2, 1)], (3, 3)),
]


@pytest.fixture(scope="session")
def catalog():
    return [Filter(gens, ambient) for gens, ambient in CATALOG_SPECS]
