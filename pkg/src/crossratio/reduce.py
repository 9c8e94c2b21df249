"""Structural rules that bound or settle a degree without solving.

Four rules, applied cheapest first:

* an edge containing two or more degree-1 vertices forces degree 0;
* a zero permanent of the edges-vs-remaining-vertices incidence after
  deleting the three gauge vertices certifies degree 0;
* a column of sum |E| makes every equation linear (degree <= 1), a column
  of sum |E|-1 leaves at most one quadratic (degree <= 2);
* a degree-1 vertex whose edge has no other degree-1 vertex can be deleted
  together with its edge without changing the degree, provided no vertex
  becomes isolated.

Rule outcomes carry the provenance tags used in classification reports.
The rules never replace the solver in golden runs; they are recorded as
certificates and cross-checks.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import kernels
from .hypergraph import Hypergraph


class ReductionKind(enum.Enum):
    ZERO_CERTIFICATE = "zero-certificate"
    UPPER_BOUND = "upper-bound"
    REDUCED = "reduced"
    NO_RULE = "no-rule"


@dataclass(frozen=True)
class ReductionOutcome:
    kind: ReductionKind
    bound: Optional[int] = None
    reduced: Optional[Hypergraph] = None
    note: str = ""

    def __post_init__(self) -> None:
        if self.kind is ReductionKind.UPPER_BOUND and self.bound not in (1, 2):
            raise ValueError("upper bounds are only ever 1 or 2")
        if self.kind is ReductionKind.REDUCED and self.reduced is None:
            raise ValueError("reduced outcome must carry the reduced hypergraph")


NO_RULE = ReductionOutcome(ReductionKind.NO_RULE)


def column_sum_bound(h: Hypergraph) -> ReductionOutcome:
    """Degree bound from the largest column sum.

    A vertex on every edge makes all equations linear; a vertex on all but
    one edge leaves a single possibly quadratic equation.
    """
    if h.has_isolated_vertex():
        raise ValueError("rule expects a hypergraph without isolated vertices")
    top = max(h.degrees())
    if top == h.n_edges:
        return ReductionOutcome(ReductionKind.UPPER_BOUND, bound=1, note=f"bound:colsum{top}")
    if top == h.n_edges - 1:
        return ReductionOutcome(ReductionKind.UPPER_BOUND, bound=2, note=f"bound:colsum{top}")
    return NO_RULE


def repeated_degree_one_zero(h: Hypergraph) -> ReductionOutcome:
    """Zero certificate: some edge contains at least two degree-1 vertices.

    The remaining equations then constrain the remaining points alone and
    are overdetermined, so a generic target is missed.  That argument
    needs at least one remaining equation; a single-edge hypergraph (all
    four vertices degree 1) genuinely has degree 1, not 0.
    """
    if h.n_edges < 2:
        return NO_RULE
    deg = h.degrees()
    for e in h.edges:
        if sum(1 for v in e if deg[v - 1] == 1) >= 2:
            return ReductionOutcome(ReductionKind.ZERO_CERTIFICATE, note="zero:repeated-deg1")
    return NO_RULE


def strip_degree_one(h: Hypergraph) -> ReductionOutcome:
    """Delete a degree-1 vertex together with its edge; degree-preserving.

    Applies to the lowest qualifying vertex: its unique edge must contain
    no other degree-1 vertex and the deletion must leave no isolated
    vertex.  Remaining vertices are relabelled 1..n-1 preserving order.
    """
    deg = h.degrees()
    for v in range(1, h.n_vertices + 1):
        if deg[v - 1] != 1:
            continue
        edge = next(e for e in h.edges if v in e)
        if sum(1 for u in edge if deg[u - 1] == 1) != 1:
            continue
        new_edges = []
        for e in h.edges:
            if e == edge:
                continue
            new_edges.append(tuple(u if u < v else u - 1 for u in e))
        reduced = Hypergraph(h.n_vertices - 1, tuple(new_edges))
        assert not reduced.has_isolated_vertex()
        return ReductionOutcome(ReductionKind.REDUCED, reduced=reduced, note="reduced:deg1")
    return NO_RULE


def matching_count(h: Hypergraph, deleted: Iterable[int]) -> int:
    """Perfect matchings between edges and the vertices not deleted.

    ``deleted`` must be a 3-subset of vertices; an edge can be matched to a
    remaining vertex it contains.  Computed as the permanent of the reduced
    incidence matrix (square because |E| = n - 3).  A zero count certifies
    degree 0.
    """
    deleted_set = set(deleted)
    if len(deleted_set) != 3 or not deleted_set <= set(range(1, h.n_vertices + 1)):
        raise ValueError("deleted must be a 3-subset of the vertices")
    remaining = [v for v in range(1, h.n_vertices + 1) if v not in deleted_set]
    if len(remaining) != h.n_edges:
        raise ValueError("matching rule needs |E| = n_vertices - 3")
    mat = np.zeros((h.n_edges, len(remaining)), dtype=np.int64)
    for r, e in enumerate(h.edges):
        for c, v in enumerate(remaining):
            if v in e:
                mat[r, c] = 1
    return kernels.permanent(mat)


GAUGE_VERTICES = (1, 2, 3)


def matching_zero_certificate(h: Hypergraph) -> ReductionOutcome:
    """Apply the matching rule with the gauge vertices deleted.

    Assumes canonical vertex order, so vertices 1..3 are the three
    highest-degree columns.
    """
    if matching_count(h, GAUGE_VERTICES) == 0:
        return ReductionOutcome(ReductionKind.ZERO_CERTIFICATE, note="zero:no-matching")
    return NO_RULE


@dataclass(frozen=True)
class RuleReport:
    """Combined outcome of all rules in their fixed application order."""

    zero: Optional[ReductionOutcome]
    bound: Optional[int]
    bound_note: str
    strip: Optional[ReductionOutcome]
    matchings: int

    @property
    def provenance(self) -> Optional[str]:
        return self.zero.note if self.zero is not None else None


def apply_rules(h: Hypergraph) -> RuleReport:
    """Run repeated-deg1, matching, column-sum, strip in that order."""
    zero = None
    out = repeated_degree_one_zero(h)
    if out.kind is ReductionKind.ZERO_CERTIFICATE:
        zero = out
    matchings = matching_count(h, GAUGE_VERTICES)
    if zero is None and matchings == 0:
        zero = ReductionOutcome(ReductionKind.ZERO_CERTIFICATE, note="zero:no-matching")
    bound_out = column_sum_bound(h)
    bound = bound_out.bound if bound_out.kind is ReductionKind.UPPER_BOUND else None
    strip_out = strip_degree_one(h)
    strip = strip_out if strip_out.kind is ReductionKind.REDUCED else None
    return RuleReport(
        zero=zero,
        bound=bound,
        bound_note=bound_out.note,
        strip=strip,
        matchings=matchings,
    )
