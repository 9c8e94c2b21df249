"""Counting hypergraph isomorphism classes via cycle indices.

The number of nonisomorphic (n+1)-uniform hypergraphs with p vertices and k
hyperedges equals the x^k coefficient of the cycle index of the symmetric
group's induced action on (n+1)-subsets, evaluated with every variable x_j
replaced by 1 + x^j.  This module computes those coefficients exactly and
serves as an independent oracle for the enumerator: subtracting consecutive
vertex counts removes the classes with isolated vertices.

The induced cycle type of a permutation acting on subsets is computed by
building one representative permutation per cycle type and tracing the
orbits of all subsets directly; everything is exact rational arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

Partition = tuple[int, ...]


def partitions(p: int) -> list[Partition]:
    """All partitions of p as nonincreasing tuples."""
    if p == 0:
        return [()]
    result: list[Partition] = []

    def extend(remaining: int, largest: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            result.append(prefix)
            return
        for part in range(min(remaining, largest), 0, -1):
            extend(remaining - part, part, prefix + (part,))

    extend(p, p, ())
    return result


def conjugacy_class_size(pt: Partition) -> int:
    """Number of permutations of S_p with cycle type pt."""
    p = sum(pt)
    size = factorial(p)
    for j in set(pt):
        m = pt.count(j)
        size //= j**m * factorial(m)
    return size


def cycle_types(p: int) -> list[tuple[Partition, int]]:
    """All cycle types of S_p with their conjugacy class sizes."""
    if not 1 <= p <= 12:
        raise ValueError("supported for 1 <= p <= 12")
    out = [(pt, conjugacy_class_size(pt)) for pt in partitions(p)]
    assert sum(size for _, size in out) == factorial(p)
    return out


def representative_permutation(pt: Partition) -> list[int]:
    """A permutation with cycle type pt, as an image list on 0..p-1."""
    p = sum(pt)
    perm = list(range(p))
    start = 0
    for length in pt:
        for i in range(length):
            perm[start + i] = start + (i + 1) % length
        start += length
    return perm


def induced_cycle_type(pt: Partition, k: int) -> Partition:
    """Cycle type of a type-pt permutation acting on k-subsets of {0..p-1}."""
    p = sum(pt)
    if k > p:
        raise ValueError("subset size exceeds ground set")
    perm = representative_permutation(pt)
    lengths: list[int] = []
    seen: set[tuple[int, ...]] = set()
    for subset in itertools.combinations(range(p), k):
        if subset in seen:
            continue
        length = 0
        cur = subset
        while True:
            cur = tuple(sorted(perm[v] for v in cur))
            seen.add(cur)
            length += 1
            if cur == subset:
                break
        lengths.append(length)
    assert sum(lengths) == comb(p, k)
    return tuple(sorted(lengths, reverse=True))


@dataclass(frozen=True)
class CycleIndex:
    """Cycle index as a map from cycle type to exact rational coefficient."""

    terms: dict[Partition, Fraction]

    def __post_init__(self) -> None:
        total = sum(self.terms.values(), Fraction(0))
        if total != 1:
            raise ValueError(f"cycle index coefficients sum to {total}, not 1")


def induced_cycle_index(p: int, k: int) -> CycleIndex:
    """Cycle index of S_p acting on k-subsets."""
    terms: dict[Partition, Fraction] = {}
    order = factorial(p)
    for pt, size in cycle_types(p):
        induced = induced_cycle_type(pt, k)
        terms[induced] = terms.get(induced, Fraction(0)) + Fraction(size, order)
    return CycleIndex(terms)


@dataclass(frozen=True)
class CountingPolynomial:
    """Coefficients c[k] = number of classes with exactly k hyperedges."""

    coefficients: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def total(self) -> int:
        return sum(self.coefficients)


def counting_polynomial(p: int, n: int) -> CountingPolynomial:
    """Class counts of (n+1)-uniform hypergraphs on p vertices by edge count.

    Every variable x_j of the induced cycle index is replaced by 1 + x^j
    and the result expanded with exact rational arithmetic; the output is
    integral by Burnside.
    """
    if n < 1:
        raise ValueError("uniformity parameter must be >= 1")
    if not n + 1 <= p <= 10:
        raise ValueError("supported for n+1 <= p <= 10")
    size = comb(p, n + 1)
    acc = [Fraction(0)] * (size + 1)
    for induced, coeff in induced_cycle_index(p, n + 1).terms.items():
        term = [Fraction(1)]
        for j in induced:
            term = _poly_mul_one_plus_xj(term, j)
        for i, c in enumerate(term):
            acc[i] += coeff * c
    assert all(c.denominator == 1 for c in acc)
    coeffs = tuple(int(c) for c in acc)
    assert coeffs[0] == 1
    return CountingPolynomial(coeffs)


def _poly_mul_one_plus_xj(poly: list[Fraction], j: int) -> list[Fraction]:
    out = poly + [Fraction(0)] * j
    for i in range(len(poly)):
        out[i + j] += poly[i]
    return out


def count_no_isolated(p: int, k: int, n: int) -> int:
    """Classes with p vertices, k edges, and no isolated vertex.

    Equals the count on p vertices minus the count on p-1 (the latter
    being exactly the classes where some vertex is isolated).
    """
    with_isolated = counting_polynomial(p, n)[k]
    if p - 1 < n + 1:
        smaller = 1 if k == 0 else 0
    else:
        smaller = counting_polynomial(p - 1, n)[k]
    return with_isolated - smaller
