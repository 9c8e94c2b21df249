import random

import pytest

from crossratio.hypergraph import Hypergraph, parse_matrix

WORKED_EXAMPLE = """
4 3 3 2 2 2 2 2
1 1 1 1 0 0 0 0
1 1 0 0 0 1 1 0
1 0 1 0 0 0 1 1
1 1 0 0 1 0 0 1
0 0 1 1 1 1 0 0
"""

# the worked example's edge tuples in presentation order (not sorted)
WORKED_EDGE_ORDER = [(1, 2, 3, 4), (1, 2, 6, 7), (1, 3, 7, 8), (1, 2, 5, 8), (3, 4, 5, 6)]

DEGREE_ZERO_EXAMPLE = """
3 3 3 3 2 2 2 2
1 1 1 1 0 0 0 0
1 1 1 0 1 0 0 0
1 1 0 1 1 0 0 0
0 0 1 0 0 1 1 1
0 0 0 1 0 1 1 1
"""

DEGREE_FOUR_MATRICES = [
    """
3 3 3 3 2 2 2 2
1 1 1 1 0 0 0 0
1 1 0 0 1 1 0 0
1 0 1 0 0 0 1 1
0 1 0 1 0 0 1 1
0 0 1 1 1 1 0 0
""",
    """
3 3 3 3 2 2 2 2
1 1 1 0 1 0 0 0
1 1 0 1 0 1 0 0
1 0 1 0 0 0 1 1
0 1 0 1 0 0 1 1
0 0 1 1 1 1 0 0
""",
    """
3 3 3 3 2 2 2 2
1 1 1 1 0 0 0 0
1 1 0 0 1 1 0 0
1 1 0 0 0 0 1 1
0 0 1 1 1 1 0 0
0 0 1 1 0 0 1 1
""",
    """
3 3 3 3 2 2 2 2
1 1 1 0 1 0 0 0
1 1 0 1 0 1 0 0
1 1 0 0 0 0 1 1
0 0 1 1 1 1 0 0
0 0 1 1 0 0 1 1
""",
]

DEGREE_THREE_MATRICES = [
    """
3 3 3 3 2 2 2 2
1 1 1 0 1 0 0 0
1 1 0 1 0 1 0 0
1 0 1 0 0 1 1 0
0 1 0 1 0 0 1 1
0 0 1 1 1 0 0 1
""",
    """
3 3 3 3 2 2 2 2
1 1 1 0 1 0 0 0
1 1 0 1 0 1 0 0
1 0 1 0 0 1 1 0
0 1 0 1 1 0 0 1
0 0 1 1 0 0 1 1
""",
    """
3 3 3 3 2 2 2 2
1 1 1 0 1 0 0 0
1 1 0 1 0 1 0 0
1 1 0 0 0 0 1 1
0 0 1 1 1 0 1 0
0 0 1 1 0 1 0 1
""",
    """
3 3 3 3 2 2 2 2
1 1 1 0 1 0 0 0
1 1 0 1 0 1 0 0
1 0 1 1 0 0 1 0
0 1 1 1 0 0 0 1
0 0 0 0 1 1 1 1
""",
    """
3 3 3 3 2 2 2 2
1 1 1 0 1 0 0 0
1 1 0 1 0 1 0 0
1 0 1 1 0 0 1 0
0 1 1 0 0 1 0 1
0 0 0 1 1 0 1 1
""",
    """
3 3 3 3 2 2 2 2
1 1 1 0 1 0 0 0
1 1 1 0 0 1 0 0
1 1 0 1 0 0 1 0
0 0 1 1 1 0 0 1
0 0 0 1 0 1 1 1
""",
    """
3 3 3 3 2 2 2 2
1 1 1 0 1 0 0 0
1 1 1 0 0 1 0 0
1 1 0 1 0 0 1 0
0 0 1 1 0 0 1 1
0 0 0 1 1 1 0 1
""",
    """
3 3 3 3 2 2 2 2
1 1 1 0 1 0 0 0
1 1 1 0 0 1 0 0
1 0 0 1 1 0 1 0
0 1 0 1 0 1 0 1
0 0 1 1 0 0 1 1
""",
]


@pytest.fixture
def worked_example() -> Hypergraph:
    return parse_matrix(WORKED_EXAMPLE)


@pytest.fixture
def degree_zero_example() -> Hypergraph:
    return parse_matrix(DEGREE_ZERO_EXAMPLE)


@pytest.fixture
def degree_four() -> list[Hypergraph]:
    return [parse_matrix(m) for m in DEGREE_FOUR_MATRICES]


@pytest.fixture
def degree_three() -> list[Hypergraph]:
    return [parse_matrix(m) for m in DEGREE_THREE_MATRICES]


def random_hypergraph(rng: random.Random, n_vertices: int, n_edges: int) -> Hypergraph:
    """A random hypergraph without isolated vertices."""
    import itertools

    pool = list(itertools.combinations(range(1, n_vertices + 1), 4))
    while True:
        edges = rng.sample(pool, n_edges)
        h = Hypergraph(n_vertices, tuple(edges))
        if not h.has_isolated_vertex():
            return h


def random_relabel(rng: random.Random, h: Hypergraph) -> Hypergraph:
    mapping = list(range(1, h.n_vertices + 1))
    rng.shuffle(mapping)
    return h.relabel(mapping)
