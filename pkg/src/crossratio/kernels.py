"""Hot numeric kernels with numba and pure-numpy backends.

Three inner loops dominate the combinatorial side of the pipeline:

* ``walk_orbits`` - partition all k-subsets of the possible hyperedges into
  vertex-relabelling orbits, returning the smallest subset rank per orbit
  (the enumeration workhorse; ~12.1M subsets for 8 vertices, 5 edges);
* ``canonical_min_rows`` - minimise a packed biadjacency matrix over a set
  of column permutations with rows sorted ascending;
* ``permanent`` - exact permanent of a small 0/1 matrix (Ryser's formula).

Each kernel has a numba ``@njit`` implementation and a vectorised numpy
fallback producing identical results.  The backend is chosen by the
``CROSSRATIO_KERNELS`` environment variable (``numba`` or ``numpy``);
default is numba when importable, else numpy.  ``set_backend`` overrides at
runtime (used by the benchmark and the tests).
"""

from __future__ import annotations

import os

import numpy as np

_VALID_BACKENDS = ("numba", "numpy")
_backend: str | None = None
_numba_funcs: dict | None = None


def _numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def active_backend() -> str:
    """The backend currently in use, resolving the env flag on first call."""
    global _backend
    if _backend is None:
        requested = os.environ.get("CROSSRATIO_KERNELS", "").strip().lower()
        if requested:
            set_backend(requested)
        else:
            _backend = "numba" if _numba_available() else "numpy"
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in _VALID_BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}; expected one of {_VALID_BACKENDS}")
    if name == "numba" and not _numba_available():
        raise RuntimeError("numba backend requested but numba is not importable")
    _backend = name


def _get_numba():
    """Compile the numba kernels once, on first use."""
    global _numba_funcs
    if _numba_funcs is None:
        from numba import njit

        _numba_funcs = {
            "walk_orbits": njit(cache=True)(_walk_orbits_loop),
            "canonical_min_rows": njit(cache=True)(_canonical_min_rows_loop),
            "permanent": njit(cache=True)(_permanent_loop),
        }
    return _numba_funcs


# ---------------------------------------------------------------------------
# loop implementations (compiled by numba; never run uncompiled)
# ---------------------------------------------------------------------------


def _walk_orbits_loop(edge_perm, binom, total, k):  # pragma: no cover - numba only
    n_group, n_items = edge_perm.shape
    visited = np.zeros(total, dtype=np.uint8)
    cap = 1024
    reps = np.empty(cap, dtype=np.int64)
    n_reps = 0
    subset = np.empty(k, dtype=np.int64)
    img = np.empty(k, dtype=np.int64)
    cursor = 0
    while cursor < total:
        if visited[cursor]:
            cursor += 1
            continue
        if n_reps == cap:
            cap *= 2
            grown = np.empty(cap, dtype=np.int64)
            grown[:n_reps] = reps[:n_reps]
            reps = grown
        reps[n_reps] = cursor
        n_reps += 1
        rem = cursor
        c = n_items - 1
        for i in range(k - 1, -1, -1):
            while binom[c, i + 1] > rem:
                c -= 1
            subset[i] = c
            rem -= binom[c, i + 1]
            c -= 1
        for g in range(n_group):
            for i in range(k):
                img[i] = edge_perm[g, subset[i]]
            for a in range(1, k):
                x = img[a]
                b = a - 1
                while b >= 0 and img[b] > x:
                    img[b + 1] = img[b]
                    b -= 1
                img[b + 1] = x
            rank = 0
            for i in range(k):
                rank += binom[img[i], i + 1]
            visited[rank] = 1
    return reps[:n_reps].copy()


def _canonical_min_rows_loop(mat, perms):  # pragma: no cover - numba only
    n_rows, n_cols = mat.shape
    n_perms = perms.shape[0]
    best = np.empty(n_rows, dtype=np.int64)
    cur = np.empty(n_rows, dtype=np.int64)
    for p in range(n_perms):
        for r in range(n_rows):
            acc = 0
            for j in range(n_cols):
                acc = (acc << 1) | mat[r, perms[p, j]]
            cur[r] = acc
        for a in range(1, n_rows):
            x = cur[a]
            b = a - 1
            while b >= 0 and cur[b] > x:
                cur[b + 1] = cur[b]
                b -= 1
            cur[b + 1] = x
        if p == 0:
            for r in range(n_rows):
                best[r] = cur[r]
        else:
            for r in range(n_rows):
                if cur[r] < best[r]:
                    for s in range(n_rows):
                        best[s] = cur[s]
                    break
                elif cur[r] > best[r]:
                    break
    return best


def _permanent_loop(mat):  # pragma: no cover - numba only
    n = mat.shape[0]
    total = 0
    for s in range(1 << n):
        bits = 0
        t = s
        while t:
            bits += t & 1
            t >>= 1
        prod = 1
        for i in range(n):
            acc = 0
            for j in range(n):
                if (s >> j) & 1:
                    acc += mat[i, j]
            prod *= acc
            if prod == 0:
                break
        if (n - bits) & 1:
            total -= prod
        else:
            total += prod
    return total


# ---------------------------------------------------------------------------
# numpy implementations
# ---------------------------------------------------------------------------


def _walk_orbits_numpy(edge_perm, binom, total, k):
    visited = np.zeros(total, dtype=np.uint8)
    reps = []
    idx = np.arange(k)
    cursor = 0
    while cursor < total:
        step = int(np.argmin(visited[cursor:]))
        cursor += step
        if visited[cursor]:
            break
        reps.append(cursor)
        subset = _unrank(cursor, binom, k, edge_perm.shape[1])
        img = np.sort(edge_perm[:, subset], axis=1).astype(np.int64)
        ranks = binom[img, idx + 1].sum(axis=1)
        visited[ranks] = 1
    return np.array(reps, dtype=np.int64)


def _unrank(rank: int, binom: np.ndarray, k: int, n_items: int) -> list[int]:
    subset = [0] * k
    rem = rank
    c = n_items - 1
    for i in range(k - 1, -1, -1):
        while binom[c, i + 1] > rem:
            c -= 1
        subset[i] = c
        rem -= int(binom[c, i + 1])
        c -= 1
    return subset


def _canonical_min_rows_numpy(mat, perms):
    n_rows, n_cols = mat.shape
    weights = (1 << np.arange(n_cols - 1, -1, -1)).astype(np.int64)
    packed = (mat[:, perms].astype(np.int64) * weights).sum(axis=2)  # (rows, P)
    packed = np.sort(packed.T, axis=1)  # (P, rows) with rows ascending
    shifts = n_cols * np.arange(n_rows - 1, -1, -1)
    combined = (packed << shifts).sum(axis=1)
    return packed[int(np.argmin(combined))]


def _permanent_numpy(mat):
    n = mat.shape[0]
    subsets = np.arange(1 << n)
    masks = (subsets[:, None] >> np.arange(n)) & 1  # (2^n, n)
    sums = masks @ mat.T.astype(np.int64)  # (2^n, n) row sums per subset
    prods = sums.prod(axis=1)
    signs = np.where((n - masks.sum(axis=1)) & 1, -1, 1)
    return int((signs * prods).sum())


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def walk_orbits(edge_perm: np.ndarray, binom: np.ndarray, total: int, k: int) -> np.ndarray:
    """Smallest rank of every orbit of k-subsets under the given action.

    ``edge_perm[g, e]`` is the image of item ``e`` under group element ``g``;
    ``binom`` is a combination table so that a sorted subset ``c_0<...<c_{k-1}``
    has rank ``sum(binom[c_i, i+1])``.  Returns rep ranks in ascending order.
    """
    if total == 0:
        return np.empty(0, dtype=np.int64)
    if active_backend() == "numba":
        return _get_numba()["walk_orbits"](
            np.ascontiguousarray(edge_perm), np.ascontiguousarray(binom), total, k
        )
    return _walk_orbits_numpy(edge_perm, binom, total, k)


def canonical_min_rows(mat: np.ndarray, perms: np.ndarray) -> np.ndarray:
    """Minimal ascending-sorted packed rows over the given column orders.

    Requires n_rows * n_cols <= 60 so each candidate fits in an int64 after
    packing; the caller handles wider matrices separately.
    """
    if mat.shape[0] * mat.shape[1] > 60:
        raise ValueError("matrix too wide for packed canonical search")
    if active_backend() == "numba":
        return _get_numba()["canonical_min_rows"](
            np.ascontiguousarray(mat), np.ascontiguousarray(perms)
        )
    return _canonical_min_rows_numpy(mat, perms)


def permanent(mat: np.ndarray) -> int:
    """Exact permanent of a small nonnegative integer matrix."""
    if mat.shape[0] != mat.shape[1]:
        raise ValueError("permanent needs a square matrix")
    if mat.shape[0] == 0:
        return 1
    arr = np.ascontiguousarray(mat, dtype=np.int64)
    if active_backend() == "numba":
        return int(_get_numba()["permanent"](arr))
    return _permanent_numpy(arr)
