"""Benchmark the numba kernels against the pure-numpy fallbacks.

Run as ``python -m crossratio.bench``.  Covers the three hot kernels on
representative workloads: the full (8,5) orbit walk, canonical keys for
every resulting class, and a batch of permanents.
"""

from __future__ import annotations

import argparse
import time
from math import comb

import numpy as np

from . import kernels
from .enumeration import _binom_table, _edge_action_table, possible_edges
from .hypergraph import _degree_block_permutations, Hypergraph
from .reduce import GAUGE_VERTICES


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_orbit_walk(n_vertices: int, n_edges: int, repeat: int) -> dict[str, float]:
    edge_perm = _edge_action_table(n_vertices).astype(np.int32)
    m = len(possible_edges(n_vertices))
    binom = _binom_table(m, n_edges)
    total = comb(m, n_edges)
    results = {}
    for backend in ("numba", "numpy"):
        kernels.set_backend(backend)
        kernels.walk_orbits(edge_perm, binom, total, n_edges)  # warm up / compile
        results[backend] = _time(
            lambda: kernels.walk_orbits(edge_perm, binom, total, n_edges), repeat
        )
    return results


def bench_canonical(classes: list[Hypergraph], repeat: int) -> dict[str, float]:
    mats = [h.matrix() for h in classes]
    perms = [_degree_block_permutations(h.degrees()) for h in classes]
    results = {}
    for backend in ("numba", "numpy"):
        kernels.set_backend(backend)
        kernels.canonical_min_rows(mats[0], perms[0])

        def run() -> None:
            for mat, p in zip(mats, perms):
                kernels.canonical_min_rows(mat, p)

        results[backend] = _time(run, repeat)
    return results


def bench_permanent(classes: list[Hypergraph], repeat: int) -> dict[str, float]:
    mats = []
    for h in classes:
        keep = [v for v in range(1, h.n_vertices + 1) if v not in GAUGE_VERTICES]
        mat = np.zeros((h.n_edges, len(keep)), dtype=np.int64)
        for r, e in enumerate(h.edges):
            for c, v in enumerate(keep):
                mat[r, c] = 1 if v in e else 0
        mats.append(mat)
    results = {}
    for backend in ("numba", "numpy"):
        kernels.set_backend(backend)
        kernels.permanent(mats[0])

        def run() -> None:
            for mat in mats:
                kernels.permanent(mat)

        results[backend] = _time(run, repeat)
    return results


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--vertices", type=int, default=8)
    parser.add_argument("--edges", type=int, default=5)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    from .enumeration import enumerate_classes

    classes = enumerate_classes(args.vertices, args.edges)
    rows = [
        (f"orbit walk ({args.vertices},{args.edges})",
         bench_orbit_walk(args.vertices, args.edges, args.repeat)),
        (f"canonical keys ({len(classes)} classes)", bench_canonical(classes, args.repeat)),
        (f"permanents ({len(classes)} matrices)", bench_permanent(classes, args.repeat)),
    ]
    print(f"{'kernel':<36} {'numba':>10} {'numpy':>10} {'speedup':>9}")
    for name, res in rows:
        speedup = res["numpy"] / res["numba"] if res["numba"] > 0 else float("inf")
        print(f"{name:<36} {res['numba']*1e3:>8.1f}ms {res['numpy']*1e3:>8.1f}ms {speedup:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
