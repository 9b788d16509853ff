"""Graph incidence matrices and exact permanents.

per[A] = sum over permutations s of prod_i A[i, s(i)], computed with Ryser's
inclusion-exclusion formula walked in Gray-code order, so each step updates
the row sums by one column: O(2^n n) integer operations.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import NamedTuple

import numpy as np

from .spin import DomainError

__all__ = [
    "SimpleGraph",
    "parse_edge_list",
    "parse_matrix",
    "incidence_matrix",
    "permanent",
    "permanent_naive",
]


class SimpleGraph(NamedTuple):
    """An undirected graph on vertices 0..n-1 without loops or multi-edges."""

    n: int
    edges: tuple

    @classmethod
    def build(cls, n: int, edges) -> "SimpleGraph":
        if n < 0:
            raise DomainError(f"vertex count must be non-negative, got {n}")
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DomainError(f"repeated edge {key}")
            seen.add(key)
        return cls(n, tuple(sorted(seen)))


def parse_edge_list(text: str, n: int | None = None) -> SimpleGraph:
    """Lines "u v"; '#' starts a comment.  Without ``n`` the vertex count is
    one more than the largest label."""
    edges = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DomainError(f"bad edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise DomainError(f"bad edge line {line!r}") from None
        if u < 0 or v < 0:
            raise DomainError(f"vertex labels must be non-negative: {line!r}")
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return SimpleGraph.build(n, edges)


def parse_matrix(text: str) -> np.ndarray:
    """Rows of 0/1 digits, optionally separated by spaces."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].replace(" ", "").replace(",", "").strip()
        if not line:
            continue
        if set(line) - {"0", "1"}:
            raise DomainError(f"matrix rows must contain only 0 and 1: {raw.strip()!r}")
        rows.append([int(ch) for ch in line])
    if rows and len({len(r) for r in rows}) != 1:
        raise DomainError("matrix rows have different lengths")
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(rows[0]) if rows else 0)


def incidence_matrix(g: SimpleGraph) -> np.ndarray:
    """Symmetric 0/1 matrix with A[i, j] = 1 iff {i, j} is an edge."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    return a


def _square(a):
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"permanent needs a square matrix, got shape {a.shape}")
    return [[int(x) for x in row] for row in a.tolist()]


def _ryser_segment(args):
    """Ryser terms for the Gray-code subsets gray(k), lo <= k < hi."""
    m, lo, hi = args
    n = len(m)
    start = lo ^ (lo >> 1)
    row_sums = [sum(m[i][c] for c in range(n) if start >> c & 1) for i in range(n)]
    size = bin(start).count("1")
    total = 0
    for k in range(lo, hi):
        if k > lo:
            col = (k & -k).bit_length() - 1
            g = k ^ (k >> 1)
            sign = 1 if g >> col & 1 else -1
            size += sign
            for i in range(n):
                row_sums[i] += sign * m[i][col]
        if size == 0:
            continue
        prod = 1
        for x in row_sums:
            if not x:
                prod = 0
                break
            prod *= x
        if prod:
            total += -prod if (n - size) % 2 else prod
    return total


def permanent(a, workers: int = 1) -> int:
    """Exact permanent of a square integer matrix.

    Ryser's formula per[A] = sum_S (-1)^(n-|S|) prod_i sum_{j in S} A[i, j]
    over column subsets visited in Gray-code order.  With ``workers > 1``
    the Gray sequence is cut into fixed segments summed in parallel; the
    arithmetic is exact, so the result never depends on the split.
    """
    m = _square(a)
    n = len(m)
    if n == 0:
        return 1
    full = 1 << n
    if workers <= 1 or n < 12:
        return _ryser_segment((m, 1, full))
    step = max(1, full // 64)
    tasks = [(m, lo, min(lo + step, full)) for lo in range(1, full, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_ryser_segment, tasks))


def permanent_naive(a) -> int:
    """Sum over all n! permutations; the reference for :func:`permanent`."""
    m = _square(a)
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        prod = 1
        for i, j in enumerate(perm):
            prod *= m[i][j]
            if not prod:
                break
        total += prod
    return total
