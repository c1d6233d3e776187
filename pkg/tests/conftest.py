import random

import pytest

from shellability.complexes import SimplicialComplex, from_facets, random_complex
from shellability.graphs import cycle_graph, independence_complex
from shellability.partition import band_complex


@pytest.fixture
def simplex3() -> SimplicialComplex:
    return from_facets([{0, 1, 2}])


@pytest.fixture
def two_k2() -> SimplicialComplex:
    return from_facets([{0, 1}, {2, 3}])


@pytest.fixture
def hollow_triangle() -> SimplicialComplex:
    return from_facets([{0, 1}, {1, 2}, {0, 2}])


@pytest.fixture
def delta5() -> SimplicialComplex:
    return band_complex(2, 5)


@pytest.fixture
def complex_1a() -> SimplicialComplex:
    """Two disjoint triangles joined by a perfect matching."""
    return from_facets([{0, 1, 2}, {3, 4, 5}, {0, 3}, {1, 4}, {2, 5}])


@pytest.fixture
def complex_2() -> SimplicialComplex:
    """Two triangles sharing a vertex plus one cross edge."""
    return from_facets([{0, 1, 2}, {0, 3, 4}, {1, 3}])


@pytest.fixture
def ind_c6() -> SimplicialComplex:
    return independence_complex(cycle_graph(6))


def corpus(seed: int, count: int, n_max: int = 6, dim_cap: int = 3) -> list[SimplicialComplex]:
    """Deterministic random complex corpus shared across property suites."""
    rng = random.Random(seed)
    return [random_complex(rng, n_max=n_max, dim_cap=dim_cap) for _ in range(count)]
