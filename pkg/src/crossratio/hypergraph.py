"""4-uniform hypergraphs represented by biadjacency bit matrices.

A hypergraph on ``n`` vertices (labelled 1..n) with hyperedges of size 4 is
stored as a sorted tuple of strictly ascending vertex 4-tuples.  The working
representation is the biadjacency matrix of the bipartite incidence graph
between edges and vertices: row ``r`` has a 1 in column ``v`` exactly when
vertex ``v`` lies on edge ``r``.  Rows pack into integers with bit
``n - v`` set for vertex ``v``, so a row read as an ``n``-bit big-endian
number reproduces its printed 0/1 form.

Canonical form: columns are ordered by nonincreasing vertex degree, the
flattened row-major bit string is minimised over every column permutation
that respects the equal-degree blocks, and rows are sorted ascending for
each candidate ordering.  Equal-degree tie-breaking is therefore fixed by
this convention; two hypergraphs are isomorphic iff their keys are equal.

The matrix text format used by reports and golden files puts the column
sums on the first line followed by one 0/1 row per edge.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels

EDGE_SIZE = 4

Edge = tuple[int, int, int, int]
ColumnSumProfile = tuple[int, ...]


class HypergraphError(ValueError):
    """Raised for malformed hypergraph input."""


@dataclass(frozen=True)
class Hypergraph:
    """A 4-uniform hypergraph with vertex labels 1..n_vertices.

    Edges are strictly ascending 4-tuples, stored sorted and without
    duplicates.  Construction validates both invariants.
    """

    n_vertices: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n_vertices < EDGE_SIZE:
            raise HypergraphError(f"need at least {EDGE_SIZE} vertices, got {self.n_vertices}")
        seen = set()
        for e in self.edges:
            if len(e) != EDGE_SIZE or any(not isinstance(v, int) for v in e):
                raise HypergraphError(f"edge {e!r} is not a vertex 4-tuple")
            if not all(e[i] < e[i + 1] for i in range(EDGE_SIZE - 1)):
                raise HypergraphError(f"edge {e!r} is not strictly ascending")
            if e[0] < 1 or e[-1] > self.n_vertices:
                raise HypergraphError(f"edge {e!r} out of vertex range 1..{self.n_vertices}")
            if e in seen:
                raise HypergraphError(f"duplicate edge {e!r}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """Build from edges given in any vertex order."""
        normalized = []
        for e in edges:
            vs = tuple(sorted(e))
            if len(set(vs)) != EDGE_SIZE:
                raise HypergraphError(f"edge {tuple(e)!r} does not have 4 distinct vertices")
            normalized.append(vs)
        return cls(n_vertices, tuple(normalized))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> tuple[int, ...]:
        """Vertex degrees indexed by vertex-1."""
        deg = [0] * self.n_vertices
        for e in self.edges:
            for v in e:
                deg[v - 1] += 1
        return tuple(deg)

    def has_isolated_vertex(self) -> bool:
        return 0 in self.degrees()

    def matrix(self) -> np.ndarray:
        """Biadjacency matrix as a uint8 array of shape (n_edges, n_vertices)."""
        mat = np.zeros((self.n_edges, self.n_vertices), dtype=np.uint8)
        for r, e in enumerate(self.edges):
            for v in e:
                mat[r, v - 1] = 1
        return mat

    def row_masks(self) -> tuple[int, ...]:
        """Rows packed as big-endian integers (bit n - v set for vertex v)."""
        n = self.n_vertices
        return tuple(sum(1 << (n - v) for v in e) for e in self.edges)

    def relabel(self, mapping: Sequence[int]) -> "Hypergraph":
        """Apply a vertex relabelling; mapping[v-1] is the new label of v."""
        if sorted(mapping) != list(range(1, self.n_vertices + 1)):
            raise HypergraphError("mapping is not a permutation of 1..n")
        edges = [tuple(sorted(mapping[v - 1] for v in e)) for e in self.edges]
        return Hypergraph.from_edges(self.n_vertices, edges)


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Canonical biadjacency bit string; equal keys mean isomorphic graphs.

    ``bits`` is the row-major flattened matrix of the canonical
    representative, length n_edges * n_vertices.
    """

    n_vertices: int
    n_edges: int
    bits: str

    def __post_init__(self) -> None:
        if len(self.bits) != self.n_vertices * self.n_edges:
            raise HypergraphError("key length does not match matrix shape")

    def hypergraph(self) -> Hypergraph:
        """Reconstruct the canonical representative."""
        n = self.n_vertices
        edges = []
        for r in range(self.n_edges):
            row = self.bits[r * n : (r + 1) * n]
            edges.append(tuple(v + 1 for v, b in enumerate(row) if b == "1"))
        return Hypergraph(n, tuple(edges))


def column_sums(h: Hypergraph) -> ColumnSumProfile:
    """Vertex degree sequence sorted nonincreasing."""
    return tuple(sorted(h.degrees(), reverse=True))


def _degree_block_permutations(degrees: Sequence[int]) -> np.ndarray:
    """Column orders (0-based vertex indices) with nonincreasing degrees.

    Vertices are grouped into blocks of equal degree; the result is the
    cartesian product of within-block permutations, shape (P, n).
    """
    order = sorted(range(len(degrees)), key=lambda v: (-degrees[v], v))
    blocks: list[list[int]] = []
    for v in order:
        if blocks and degrees[blocks[-1][0]] == degrees[v]:
            blocks[-1].append(v)
        else:
            blocks.append([v])
    per_block = [list(itertools.permutations(b)) for b in blocks]
    perms = [sum(combo, ()) for combo in itertools.product(*per_block)]
    return np.array(perms, dtype=np.int64)


def canonical_form(h: Hypergraph) -> CanonicalKey:
    """Minimal flattened bit string over block-respecting permutations.

    Deterministic and isomorphism-invariant; recanonicalising the key's
    matrix is the identity.
    """
    rows = _canonical_rows(h)
    n = h.n_vertices
    bits = "".join(format(int(r), f"0{n}b") for r in rows)
    return CanonicalKey(n, h.n_edges, bits)


def canonicalize(h: Hypergraph) -> Hypergraph:
    """The canonical representative of h's isomorphism class."""
    return canonical_form(h).hypergraph()


def _canonical_rows(h: Hypergraph) -> tuple[int, ...]:
    perms = _degree_block_permutations(h.degrees())
    if h.n_edges * h.n_vertices <= 60:
        return tuple(int(r) for r in kernels.canonical_min_rows(h.matrix(), perms))
    # Wide matrices exceed the packed-uint64 kernels; plain search.
    mat = h.matrix()
    best = None
    for perm in perms:
        rows = tuple(
            sorted(sum(int(b) << s for b, s in zip(mat[r, perm], range(h.n_vertices - 1, -1, -1)))
                   for r in range(h.n_edges))
        )
        if best is None or rows < best:
            best = rows
    assert best is not None
    return best


def is_isomorphic(h1: Hypergraph, h2: Hypergraph) -> bool:
    """True iff the canonical keys agree."""
    if h1.n_vertices != h2.n_vertices or h1.n_edges != h2.n_edges:
        return False
    return canonical_form(h1) == canonical_form(h2)


def format_matrix(h: Hypergraph) -> str:
    """Matrix text format: column sums line, then one 0/1 row per edge."""
    mat = h.matrix()
    lines = [" ".join(str(int(s)) for s in mat.sum(axis=0))]
    for row in mat:
        lines.append(" ".join(str(int(b)) for b in row))
    return "\n".join(lines)


def parse_matrix(text: str) -> Hypergraph:
    """Parse the matrix text format, validating the column-sum header."""
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) < 2:
        raise HypergraphError("matrix text needs a header line and at least one row")
    header = [int(x) for x in lines[0]]
    rows = [[int(x) for x in ln] for ln in lines[1:]]
    n = len(header)
    for row in rows:
        if len(row) != n or any(b not in (0, 1) for b in row):
            raise HypergraphError("matrix rows must be 0/1 and match the header width")
    sums = [sum(row[j] for row in rows) for j in range(n)]
    if sums != header:
        raise HypergraphError(f"column-sum header {header} does not match rows {sums}")
    edges = [tuple(j + 1 for j, b in enumerate(row) if b) for row in rows]
    return Hypergraph(n, tuple(edges))
