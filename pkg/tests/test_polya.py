import itertools
from fractions import Fraction
from math import comb, factorial

import pytest

from crossratio.polya import (
    CycleIndex,
    counting_polynomial,
    count_no_isolated,
    cycle_types,
    induced_cycle_index,
    induced_cycle_type,
    partitions,
    representative_permutation,
)


def oracle_induced_cycle_type(pt, k):
    """Independent orbit trace with explicit frozensets."""
    p = sum(pt)
    perm = {}
    start = 0
    for length in pt:
        cyc = list(range(start, start + length))
        for i, v in enumerate(cyc):
            perm[v] = cyc[(i + 1) % length]
        start += length
    subsets = [frozenset(s) for s in itertools.combinations(range(p), k)]
    seen = set()
    lengths = []
    for s in subsets:
        if s in seen:
            continue
        orbit = [s]
        cur = frozenset(perm[v] for v in s)
        while cur != s:
            orbit.append(cur)
            cur = frozenset(perm[v] for v in cur)
        seen.update(orbit)
        lengths.append(len(orbit))
    return tuple(sorted(lengths, reverse=True))


def test_cycle_types_s3_s4():
    assert dict(cycle_types(3)) == {(3,): 2, (2, 1): 3, (1, 1, 1): 1}
    s4 = dict(cycle_types(4))
    assert s4 == {(1, 1, 1, 1): 1, (2, 1, 1): 6, (2, 2): 3, (3, 1): 8, (4,): 6}


def test_cycle_types_s8():
    types = cycle_types(8)
    assert len(types) == 22
    assert sum(size for _, size in types) == factorial(8)


def test_induced_identity_fixes_everything():
    assert induced_cycle_type((1,) * 8, 4) == (1,) * 70


def test_induced_transposition():
    # fixed 4-subsets: contain both or neither swapped point, C(6,4)+C(6,2)=30
    ind = induced_cycle_type((2, 1, 1, 1, 1, 1, 1), 4)
    assert ind.count(1) == 30
    assert ind.count(2) == 20
    assert sum(ind) == 70


def test_induced_eight_cycle():
    ind = induced_cycle_type((8,), 4)
    assert sum(ind) == 70
    assert all(8 % length == 0 for length in ind)
    assert ind == oracle_induced_cycle_type((8,), 4)


def test_induced_matches_oracle_all_partitions_of_8():
    for pt in partitions(8):
        assert induced_cycle_type(pt, 4) == oracle_induced_cycle_type(pt, 4), pt


def test_representative_permutation_cycle_type():
    perm = representative_permutation((3, 2, 1))
    assert sorted(perm) == list(range(6))
    # trace cycles
    seen, lengths = set(), []
    for v in range(6):
        if v in seen:
            continue
        length, cur = 0, v
        while cur not in seen:
            seen.add(cur)
            cur = perm[cur]
            length += 1
        lengths.append(length)
    assert sorted(lengths, reverse=True) == [3, 2, 1]


def test_cycle_index_coefficients_sum_to_one():
    ci = induced_cycle_index(8, 4)
    assert sum(ci.terms.values(), Fraction(0)) == 1
    for induced in ci.terms:
        assert sum(induced) == comb(8, 4)
    with pytest.raises(ValueError):
        CycleIndex({(1,): Fraction(1, 2)})


def brute_force_class_counts(p, edge_size):
    """Class counts per edge count, by explicit orbit enumeration over all
    subsets of the possible hyperedges."""
    edges = [frozenset(e) for e in itertools.combinations(range(p), edge_size)]
    index = {e: i for i, e in enumerate(edges)}
    actions = [
        tuple(index[frozenset(perm[v] for v in e)] for e in edges)
        for perm in itertools.permutations(range(p))
    ]
    counts = [0] * (len(edges) + 1)
    seen = set()
    for k in range(len(edges) + 1):
        for subset in itertools.combinations(range(len(edges)), k):
            if frozenset(subset) in seen:
                continue
            counts[k] += 1
            for act in actions:
                seen.add(frozenset(act[e] for e in subset))
    return counts


def test_counting_polynomial_graphs_on_three_vertices():
    # 1-plexes are ordinary graphs; on 3 vertices there is one class per
    # edge count (brute force over all 2^3 labelled graphs modulo S3)
    assert counting_polynomial(3, 1).coefficients == (1, 1, 1, 1)
    assert brute_force_class_counts(3, 2) == [1, 1, 1, 1]


@pytest.mark.parametrize("p", [4, 5, 6])
def test_counting_polynomial_matches_brute_force(p):
    poly = counting_polynomial(p, 3)
    assert list(poly.coefficients) == brute_force_class_counts(p, 4), p


def test_paper_coefficients():
    assert counting_polynomial(8, 3)[5] == 621
    assert counting_polynomial(7, 3)[5] == 137


def test_count_no_isolated_paper_values():
    assert count_no_isolated(8, 5, 3) == 484
    assert count_no_isolated(7, 4, 3) == 29
    assert count_no_isolated(4, 1, 3) == 1


def test_count_no_isolated_rejects_bad_sizes():
    with pytest.raises(ValueError):
        counting_polynomial(3, 3)
    with pytest.raises(ValueError):
        counting_polynomial(11, 3)
