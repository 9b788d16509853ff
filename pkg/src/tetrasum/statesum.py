"""State sums over edge colorings of a closed triangulated 3-manifold.

Two sums are provided:

* :func:`tv_invariant`, the Turaev-Viro invariant at level r, built from
  q-6j symbols;
* :func:`pr_functional_cutoff`, the Ponzano-Regge functional restricted to
  spins <= L, built from exact 6j symbols.

Tetrahedron phases.  Each tetrahedron carries phi = (-1)^(sum of its six
spins), read as exp(i pi sum).  The sum of six spins can be a half-integer,
so a single phi may be +-i, but the product over all tetrahedra of a closed
complex is always real: it equals i^(sum over tets of the doubled spin sums),
and that exponent is twice the total triangle perimeter.  With this phase
and the signed edge weights (-1)^(2j)[2j+1] the Turaev-Viro sum is
independent of the triangulation.

Colorings are tuples of doubled spins indexed like ``cx.edges``.
Enumeration is lexicographic in that order.  Parallel runs split the search
tree on a fixed prefix of edges, independent of the worker count, and
combine the chunk sums in prefix order, so totals are bit-identical for any
number of workers.
"""
from __future__ import annotations

import math
import os
from fractions import Fraction
from concurrent.futures import ProcessPoolExecutor
from typing import NamedTuple

import mpmath

from .complex import SimplicialComplex3
from .qdeform import (
    check_level,
    classical_sixj_float,
    is_q_admissible,
    q_sixj,
    quantum_integer,
    total_quantum_weight,
)
from .spin import DomainError, SignedSqrtRational, _admissible2, spin, ssr_to_float
from .wigner import SixJCache, Tetra6j, sixj_cached

__all__ = [
    "THREADS_ENV",
    "default_threads",
    "enumerate_colorings",
    "count_colorings",
    "tet_phase",
    "tv_term",
    "tv_invariant",
    "TVResult",
    "pr_lambda",
    "pr_term",
    "pr_functional_cutoff",
    "PRResult",
    "w_closed_form",
]

THREADS_ENV = "TETRASUM_THREADS"
PREFIX_EDGES = 3


def default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise DomainError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def _bound(level, cutoff):
    """(largest doubled spin, triad test) for a level r or a cutoff L."""
    if (level is None) == (cutoff is None):
        raise DomainError("give exactly one of level or cutoff")
    if level is not None:
        r = check_level(level)
        return r - 2, lambda a, b, c: is_q_admissible(a, b, c, r)
    return spin(cutoff), _admissible2


def _plan(cx: SimplicialComplex3):
    """For each edge index, the triangles that become fully colored there."""
    closing = [[] for _ in cx.edges]
    for tri in cx.triangle_edges():
        closing[max(tri)].append(tri)
    return closing


def enumerate_colorings(cx: SimplicialComplex3, level=None, cutoff=None, prefix=()):
    """Yield every admissible coloring once, in lexicographic edge order.

    Pass ``level`` (Turaev-Viro, q-admissible triads) or ``cutoff`` (a spin L;
    classical triads with every spin <= L).  ``prefix`` fixes the first
    edges' doubled spins and restricts the stream to that subtree.
    """
    top, ok = _bound(level, cutoff)
    closing = _plan(cx)
    n = len(cx.edges)
    col = [0] * n

    def fits(k):
        return all(ok(col[a], col[b], col[c]) for a, b, c in closing[k])

    for k, t in enumerate(prefix):
        col[k] = t
        if not (0 <= t <= top) or not fits(k):
            return

    def walk(k):
        if k == n:
            yield tuple(col)
            return
        for t in range(top + 1):
            col[k] = t
            if fits(k):
                yield from walk(k + 1)

    yield from walk(len(prefix))


def count_colorings(cx: SimplicialComplex3, level=None, cutoff=None) -> int:
    return sum(1 for _ in enumerate_colorings(cx, level=level, cutoff=cutoff))


def _prefixes(cx, level, cutoff):
    """Admissible partial colorings of the first few edges, in order."""
    depth = min(PREFIX_EDGES, len(cx.edges))
    top, ok = _bound(level, cutoff)
    closing = _plan(cx)
    out = []
    col = [0] * depth

    def walk(k):
        if k == depth:
            out.append(tuple(col))
            return
        for t in range(top + 1):
            col[k] = t
            if all(ok(col[a], col[b], col[c]) for a, b, c in closing[k]):
                walk(k + 1)

    walk(0)
    return out


def tet_phase(cx: SimplicialComplex3, coloring) -> int:
    """Product over tetrahedra of exp(i pi * sum of the six spins); always +-1."""
    total = sum(coloring[i] for slots in cx.tet_edge_slots() for i in slots)
    assert total % 2 == 0, "tetrahedron phase exponent must be even on a closed complex"
    return -1 if (total // 2) % 2 else 1


def _symbols(cx, coloring):
    return [Tetra6j(*(coloring[i] for i in slots)) for slots in cx.tet_edge_slots()]


def tv_term(cx: SimplicialComplex3, coloring, r: int, prec=None, classical=False):
    """One Turaev-Viro summand without the w^(-N0) normalization.

    prod_e (-1)^(2j)[2j+1] * prod_t phi_t {6j}_q.  With ``classical=True``
    every quantum integer is replaced by the ordinary integer, which turns
    the q-6j into the ordinary 6j and [2j+1] into 2j+1.
    """
    check_level(r)
    if classical:

        def dim(t):
            return t + 1.0

        def six(s):
            return classical_sixj_float(s)
    else:

        def dim(t):
            return quantum_integer(t + 1, r, prec)

        def six(s):
            return q_sixj(s, r, prec)

    value = tet_phase(cx, coloring) * (1 if prec is None else mpmath.mpf(1))
    for t in coloring:
        value = value * (-dim(t) if t % 2 else dim(t))
    for s in _symbols(cx, coloring):
        value = value * six(s)
    return value


class TVResult(NamedTuple):
    value: float
    level: int
    w: float
    w_formula: str
    n_vertices: int
    colorings: int


def _tv_chunk(args):
    cx, r, prefix = args
    qcache = {}
    dims = [(-1 if t % 2 else 1) * quantum_integer(t + 1, r) for t in range(r - 1)]
    total = 0.0
    count = 0
    slots = cx.tet_edge_slots()
    for col in enumerate_colorings(cx, level=r, prefix=prefix):
        term = float(tet_phase(cx, col))
        for t in col:
            term *= dims[t]
        for sl in slots:
            s = Tetra6j(*(col[i] for i in sl))
            v = qcache.get(s)
            if v is None:
                v = qcache[s] = q_sixj(s, r)
            term *= v
        total += term
        count += 1
    return total, count


def _run_chunks(fn, tasks, workers):
    if workers is None:
        workers = default_threads()
    if workers < 1:
        raise DomainError(f"worker count must be positive, got {workers}")
    if workers == 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def tv_invariant(cx: SimplicialComplex3, r: int, workers=None) -> TVResult:
    """Turaev-Viro invariant Z = w^(-N0) sum_colorings prod_e w_e prod_t phi_t {6j}_q.

    w = sum_j [2j+1]^2 = r / (2 sin^2(pi/r)).  Chunk sums are combined in a
    fixed order, so the result does not depend on ``workers``.
    """
    check_level(r)
    cx.require_closed()
    tasks = [(cx, r, p) for p in _prefixes(cx, r, None)]
    parts = _run_chunks(_tv_chunk, tasks, workers)
    total = 0.0
    count = 0
    for s, c in parts:
        total += s
        count += c
    w = total_quantum_weight(r)
    n0 = len(cx.vertices)
    return TVResult(total * w ** (-n0), r, w, "r/(2 sin^2(pi/r))", n0, count)


def pr_lambda(cutoff, constant=1.0):
    """Lambda(L) = 4 L^3 / (3 C)."""
    if constant <= 0:
        raise DomainError(f"the constant C must be positive, got {constant}")
    ell = spin(cutoff) / 2
    return 4 * ell ** 3 / (3 * constant)


def _pr_exact(cx, coloring, cache):
    exact = SignedSqrtRational(tet_phase(cx, coloring), 1)
    for t in coloring:
        exact = exact * ((-1 if t % 2 else 1) * (t + 1))
    for s in _symbols(cx, coloring):
        exact = exact * sixj_cached(s, cache)
        if exact.is_zero():
            break
    return exact


def _pr_scale(lam, n0):
    # at L = 0 the cutoff volume vanishes; the lone all-zero term is kept unscaled
    return 1.0 if lam == 0 else lam ** (-n0)


def pr_term(cx: SimplicialComplex3, coloring, cutoff, constant=1.0, cache: SixJCache | None = None):
    """One Ponzano-Regge summand Lambda^(-N0) prod_e (-1)^(2j)(2j+1) prod_t phi_t {6j}.

    The product of the integer weights and exact 6j symbols is formed
    exactly and rounded once.  At L = 0, Lambda = 0 and Lambda^(-N0) is
    taken as 1.
    """
    scale = _pr_scale(pr_lambda(cutoff, constant), len(cx.vertices))
    return ssr_to_float(_pr_exact(cx, coloring, cache)) * scale


class PRResult(NamedTuple):
    value: float
    cutoff: float
    constant: float
    lam: float
    n_vertices: int
    colorings: int


def _pr_chunk(args):
    cx, tl, scale, prefix = args
    cache = SixJCache()
    total = 0.0
    count = 0
    for col in enumerate_colorings(cx, cutoff=Fraction(tl, 2), prefix=prefix):
        total += ssr_to_float(_pr_exact(cx, col, cache)) * scale
        count += 1
    return total, count


def pr_functional_cutoff(cx: SimplicialComplex3, cutoff, constant=1.0, workers=None) -> PRResult:
    """Finite-cutoff Ponzano-Regge functional: the sum of :func:`pr_term` over
    colorings with every spin <= L.  The L -> infinity limit diverges and is
    not taken."""
    cx.require_closed()
    tl = spin(cutoff)
    lam = pr_lambda(cutoff, constant)
    scale = _pr_scale(lam, len(cx.vertices))
    tasks = [(cx, tl, scale, p) for p in _prefixes(cx, None, Fraction(tl, 2))]
    parts = _run_chunks(_pr_chunk, tasks, workers)
    total = 0.0
    count = 0
    for s, c in parts:
        total += s
        count += c
    return PRResult(total, tl / 2, float(constant), lam, len(cx.vertices), count)


def w_closed_form(r: int) -> float:
    return r / (2 * math.sin(math.pi / r) ** 2)
