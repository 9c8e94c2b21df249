"""Exhaustive generation of 4-uniform hypergraph isomorphism classes.

Candidate hypergraphs are k-subsets of the C(n,4) possible hyperedges,
identified with their colex rank.  Relabelling the n vertices permutes the
possible edges, so isomorphism classes are exactly the orbits of that
induced action on edge subsets.  The kernel walks all subset ranks in
ascending (colex) order and marks each newly seen orbit in full, which
visits every subset exactly once and yields the colex-least representative
per class.  Representatives are then filtered for isolated vertices,
canonicalised, cross-checked for key uniqueness, and sorted by key.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

from . import kernels
from .hypergraph import CanonicalKey, Hypergraph, canonical_form

_MAX_VERTICES = 12  # n! permutation table; beyond this the table is impractical


def possible_edges(n_vertices: int) -> list[tuple[int, int, int, int]]:
    """All vertex 4-subsets of 1..n in colex order."""
    edges = [tuple(sorted(e)) for e in itertools.combinations(range(1, n_vertices + 1), 4)]
    edges.sort(key=lambda e: tuple(reversed(e)))
    return edges


def _binom_table(n_items: int, k: int) -> np.ndarray:
    table = np.zeros((max(n_items, 1) + 1, k + 2), dtype=np.int64)
    for a in range(n_items + 1):
        for b in range(min(a, k + 1) + 1):
            table[a, b] = comb(a, b)
    return table


def _edge_action_table(n_vertices: int) -> np.ndarray:
    """edge_perm[g, e] = colex index of the image of edge e under permutation g."""
    n = n_vertices
    edges = possible_edges(n)
    m = len(edges)
    edge_arr = np.array([[v - 1 for v in e] for e in edges], dtype=np.int64)  # (m, 4)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)  # (n!, n)
    img = perms[:, edge_arr]  # (n!, m, 4)
    img.sort(axis=2)
    binom4 = _binom_table(n, 4)
    ranks = np.zeros(img.shape[:2], dtype=np.int64)
    for i in range(4):
        ranks += binom4[img[:, :, i], i + 1]
    return ranks


_class_cache: dict[tuple[int, int], list[Hypergraph]] = {}


def enumerate_classes(n_vertices: int, n_edges: int) -> list[Hypergraph]:
    """One canonical representative per isomorphism class, no isolated
    vertices, sorted by canonical key.

    Raises ValueError when 4*n_edges < n_vertices (every such hypergraph
    would have an isolated vertex).  Results are memoised; hypergraphs are
    immutable so sharing is safe.
    """
    key = (n_vertices, n_edges)
    if key in _class_cache:
        return list(_class_cache[key])
    out = _enumerate_classes(n_vertices, n_edges)
    _class_cache[key] = out
    return list(out)


def _enumerate_classes(n_vertices: int, n_edges: int) -> list[Hypergraph]:
    if n_vertices < 4:
        raise ValueError("need at least 4 vertices")
    if n_edges < 1:
        raise ValueError("need at least one edge")
    if 4 * n_edges < n_vertices:
        raise ValueError(
            f"no hypergraph on {n_vertices} vertices with {n_edges} edges covers every vertex"
        )
    if n_vertices > _MAX_VERTICES:
        raise ValueError(f"enumeration supports up to {_MAX_VERTICES} vertices")

    edges = possible_edges(n_vertices)
    m = len(edges)
    if n_edges > m:
        return []
    total = comb(m, n_edges)
    edge_perm = _edge_action_table(n_vertices).astype(np.int32)
    binom = _binom_table(m, n_edges)
    reps = kernels.walk_orbits(edge_perm, binom, total, n_edges)
    assert len(reps) > 0

    keyed: list[tuple[CanonicalKey, Hypergraph]] = []
    seen: set[str] = set()
    for rank in reps:
        subset = _unrank_subset(int(rank), m, n_edges)
        h = Hypergraph(n_vertices, tuple(edges[i] for i in subset))
        if h.has_isolated_vertex():
            continue
        key = canonical_form(h)
        # The orbit walk already separates classes; the canonical key must agree.
        assert key.bits not in seen, "canonical key collision across orbits"
        seen.add(key.bits)
        keyed.append((key, key.hypergraph()))
    keyed.sort(key=lambda kv: kv[0])
    return [h for _, h in keyed]


def count_labeled_subsets(n_vertices: int, n_edges: int) -> int:
    """Number of labelled edge subsets, for sizing sanity checks."""
    return comb(comb(n_vertices, 4), n_edges)


def orbit_count(n_vertices: int, n_edges: int) -> int:
    """Number of isomorphism classes including isolated-vertex graphs."""
    edges = possible_edges(n_vertices)
    m = len(edges)
    if n_edges > m:
        return 0
    total = comb(m, n_edges)
    edge_perm = _edge_action_table(n_vertices).astype(np.int32)
    binom = _binom_table(m, n_edges)
    return len(kernels.walk_orbits(edge_perm, binom, total, n_edges))


def _unrank_subset(rank: int, n_items: int, k: int) -> list[int]:
    subset = [0] * k
    rem = rank
    c = n_items - 1
    for i in range(k - 1, -1, -1):
        while comb(c, i + 1) > rem:
            c -= 1
        subset[i] = c
        rem -= comb(c, i + 1)
        c -= 1
    return subset
