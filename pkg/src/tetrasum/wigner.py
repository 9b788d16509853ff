"""Wigner 3j and 6j symbols in exact arithmetic.

Two independent routes to the 6j symbol are provided:

* :func:`sixj_exact` evaluates Racah's single sum written as a terminating
  4F3 series at unit argument, multiplied by four Delta factors;
* :func:`sixj_oracle` contracts four 3j symbols over the magnetic quantum
  numbers.

The symbol ``{a b c; d e f}`` has triads (a b c), (a e f), (d b f), (d e c).
All internal spins are doubled integers.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .hypergeometric import hypergeometric_terminating, hypergeometric_terms
from .spin import (
    DomainError,
    SignedSqrtRational,
    _admissible2,
    _delta_sq2,
    factorial,
    spin,
    twice,
)

__all__ = [
    "Tetra6j",
    "three_j",
    "sixj",
    "sixj_exact",
    "sixj_oracle",
    "racah_parameters",
    "classical_images",
    "regge_image",
    "symmetry_orbit",
    "canonical_key",
    "SixJCache",
    "sixj_cached",
]


class Tetra6j(NamedTuple):
    """Spins of ``{a b c; d e f}``, each stored as twice its value."""

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    @classmethod
    def of(cls, a, b, c, d, e, f) -> "Tetra6j":
        return cls(*(spin(x) for x in (a, b, c, d, e, f)))

    def triads(self):
        a, b, c, d, e, f = self
        return ((a, b, c), (a, e, f), (d, b, f), (d, e, c))

    def is_admissible(self) -> bool:
        return all(_admissible2(*t) for t in self.triads())

    def spins(self):
        return tuple(Fraction(t, 2) for t in self)

    def __str__(self):
        s = [str(x) for x in self.spins()]
        return "{%s %s %s; %s %s %s}" % tuple(s)


# --- 3j -------------------------------------------------------------------------

def _mfact(tj: int, tm: int) -> int:
    return factorial((tj + tm) // 2) * factorial((tj - tm) // 2)


@lru_cache(maxsize=None)
def _three_j_sum(tj1, tj2, tj3, tm1, tm2, tm3) -> Fraction:
    """Phase times Racah's alternating sum; the 3j is this times
    sqrt(Delta^2 * prod (j+m)!(j-m)!).  Zero when selection rules fail."""
    if tm1 + tm2 + tm3 != 0 or not _admissible2(tj1, tj2, tj3):
        return Fraction(0)
    k_min = max(0, (tj2 - tj3 - tm1) // 2, (tj1 - tj3 + tm2) // 2)
    k_max = min((tj1 + tj2 - tj3) // 2, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    total = Fraction(0)
    for k in range(k_min, k_max + 1):
        den = (
            factorial(k)
            * factorial((tj3 - tj2 + tm1) // 2 + k)
            * factorial((tj3 - tj1 - tm2) // 2 + k)
            * factorial((tj1 + tj2 - tj3) // 2 - k)
            * factorial((tj1 - tm1) // 2 - k)
            * factorial((tj2 + tm2) // 2 - k)
        )
        total += Fraction(-1 if k % 2 else 1, den)
    if ((tj1 - tj2 - tm3) // 2) % 2:
        total = -total
    return total


def _check_m(tj: int, tm: int):
    if abs(tm) > tj or (tj - tm) % 2:
        raise DomainError(
            f"magnetic number {Fraction(tm, 2)} not in -j..j in integer steps for j={Fraction(tj, 2)}"
        )


def three_j(j1, j2, j3, m1, m2, m3) -> SignedSqrtRational:
    """Exact Wigner 3j symbol ``(j1 j2 j3; m1 m2 m3)``."""
    tj = (spin(j1), spin(j2), spin(j3))
    tm = (twice(m1), twice(m2), twice(m3))
    for a, b in zip(tj, tm):
        _check_m(a, b)
    s = _three_j_sum(*tj, *tm)
    if s == 0:
        return SignedSqrtRational(0)
    rad = _delta_sq2(*tj) * _mfact(tj[0], tm[0]) * _mfact(tj[1], tm[1]) * _mfact(tj[2], tm[2])
    return SignedSqrtRational(1 if s > 0 else -1, rad * s * s)


# --- 6j via the terminating 4F3 --------------------------------------------------

def racah_parameters(s: Tetra6j):
    """The integer sums entering Racah's formula for ``s`` (admissible).

    Returns ``(alphas, betas)`` with alphas the four triad perimeters and
    betas the three sums over pairs of opposite edges, in the order
    (a+b+d+e, a+c+d+f, b+c+e+f), undoubled.
    """
    a, b, c, d, e, f = s
    alphas = [(a + b + c) // 2, (a + e + f) // 2, (d + b + f) // 2, (d + e + c) // 2]
    betas = [(a + b + d + e) // 2, (a + c + d + f) // 2, (b + c + e + f) // 2]
    return alphas, betas


def _racah_4f3(s: Tetra6j, pick=None):
    alphas, betas = racah_parameters(s)
    # first minimum wins on ties unless another minimal index is picked
    i1 = min(range(3), key=lambda i: betas[i])
    if pick is not None:
        if betas[pick] != betas[i1]:
            raise DomainError(f"beta {pick} is not minimal")
        i1 = pick
    b1 = betas[i1]
    b2, b3 = (betas[i] for i in range(3) if i != i1)
    upper = [al - b1 for al in alphas]
    lower = [-b1 - 1, b2 - b1 + 1, b3 - b1 + 1]
    den = factorial(b2 - b1) * factorial(b3 - b1)
    for al in alphas:
        den *= factorial(b1 - al)
    lead = Fraction((-1) ** b1 * factorial(b1 + 1), den)
    return lead, upper, lower


def racah_series_length(s: Tetra6j) -> int:
    """Number of 4F3 terms evaluated for an admissible symbol."""
    _, upper, lower = _racah_4f3(s)
    return sum(1 for _ in hypergeometric_terms(upper, lower))


def sixj_exact(s: Tetra6j, pick=None) -> SignedSqrtRational:
    """Exact 6j symbol; zero for inadmissible spins.

    ``pick`` selects which minimal opposite-edge sum plays beta_1 when
    several tie; the value does not depend on it.
    """
    s = Tetra6j(*s)
    if not s.is_admissible():
        return SignedSqrtRational(0)
    lead, upper, lower = _racah_4f3(s, pick)
    total = lead * hypergeometric_terminating(upper, lower)
    if total == 0:
        return SignedSqrtRational(0)
    rad = Fraction(1)
    for t in s.triads():
        rad *= _delta_sq2(*t)
    return SignedSqrtRational(1 if total > 0 else -1, rad * total * total)


def sixj(a, b, c, d, e, f) -> SignedSqrtRational:
    """Convenience wrapper: ``sixj(1, 1, 1, 1, 1, 1)`` or with ``"1/2"`` spins."""
    return sixj_exact(Tetra6j.of(a, b, c, d, e, f))


# --- 6j as a contraction of four 3j symbols -------------------------------------

def sixj_oracle(s: Tetra6j) -> SignedSqrtRational:
    """Exact 6j from the sum over magnetic numbers of four 3j products.

    Uses (a b c; al be -ga)(a e f; al ep -ph)(d b f; -de be ph)(d e c; de -ep -ga)
    with phase (-1)^(d+e+f+de+ep+ph); the three free indices are al, be, ep.
    Each 3j is split as sqrt(Delta^2) * sqrt(prod (j+-m)!) * rational; the
    m-dependent radicals pair up across the four factors, so every term is a
    rational multiple of sqrt(prod Delta^2) and the sum is exact.
    """
    a, b, c, d, e, f = Tetra6j(*s)
    total = Fraction(0)
    for al in range(-a, a + 1, 2):
        for be in range(-b, b + 1, 2):
            ga = al + be
            if abs(ga) > c or (c - ga) % 2:
                continue
            p1 = _three_j_sum(a, b, c, al, be, -ga)
            if p1 == 0:
                continue
            for ep in range(-e, e + 1, 2):
                ph = al + ep
                de = ga + ep
                if abs(ph) > f or abs(de) > d or (f - ph) % 2 or (d - de) % 2:
                    continue
                p = p1 * _three_j_sum(a, e, f, al, ep, -ph)
                if p == 0:
                    continue
                p *= _three_j_sum(d, b, f, -de, be, ph)
                if p == 0:
                    continue
                p *= _three_j_sum(d, e, c, de, -ep, -ga)
                if p == 0:
                    continue
                w = (_mfact(a, al) * _mfact(b, be) * _mfact(c, ga)
                     * _mfact(d, de) * _mfact(e, ep) * _mfact(f, ph))
                if ((d + e + f + de + ep + ph) // 2) % 2:
                    w = -w
                total += w * p
    if total == 0:
        return SignedSqrtRational(0)
    rad = (_delta_sq2(a, b, c) * _delta_sq2(a, e, f)
           * _delta_sq2(d, b, f) * _delta_sq2(d, e, c))
    return SignedSqrtRational(1 if total > 0 else -1, rad * total * total)


# --- symmetries ----------------------------------------------------------------

_COLUMN_PERMS = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
_FLIPS = ((False, False, False), (True, True, False), (True, False, True), (False, True, True))


def classical_images(s: Tetra6j):
    """The 24 images under column permutations and paired row swaps (with repeats)."""
    cols = ((s[0], s[3]), (s[1], s[4]), (s[2], s[5]))
    out = []
    for perm in _COLUMN_PERMS:
        pc = [cols[i] for i in perm]
        for flip in _FLIPS:
            top, bot = [], []
            for (u, l), fl in zip(pc, flip):
                if fl:
                    u, l = l, u
                top.append(u)
                bot.append(l)
            out.append(Tetra6j(*top, *bot))
    return out


def regge_image(s: Tetra6j):
    """(a,b,c,d,e,f) -> (S-a, S-b, c, S-d, S-e, f) with S = (a+b+d+e)/2.

    Returns None when a+b+d+e is not an integer (never for admissible input).
    """
    a, b, c, d, e, f = s
    tot = a + b + d + e
    if tot % 2:
        return None
    ts = tot // 2
    img = (ts - a, ts - b, c, ts - d, ts - e, f)
    if min(img) < 0:
        assert not Tetra6j(*s).is_admissible(), "Regge image of admissible symbol has a negative spin"
        return None
    return Tetra6j(*img)


def symmetry_orbit(s: Tetra6j, regge: bool = True) -> frozenset:
    """Orbit of ``s`` under the classical symmetries, and optionally Regge's."""
    s = Tetra6j(*s)
    seen = {s}
    frontier = [s]
    while frontier:
        nxt = []
        for t in frontier:
            images = classical_images(t)
            if regge:
                r = regge_image(t)
                if r is not None:
                    images.append(r)
            for u in images:
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return frozenset(seen)


def canonical_key(s: Tetra6j, regge: bool = False) -> Tetra6j:
    """Lexicographically smallest orbit member."""
    if regge:
        return min(symmetry_orbit(s, regge=True))
    return min(classical_images(Tetra6j(*s)))


# --- memoization -----------------------------------------------------------------

class SixJCache:
    """Memo table for 6j values keyed on the canonical orbit representative.

    ``regge=True`` folds Regge images onto one key as well, trading a larger
    transform per lookup for a smaller table.  Writers race benignly: all of
    them store the same value.
    """

    def __init__(self, regge: bool = False):
        self.regge = regge
        self._table = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def __len__(self):
        return len(self._table)

    def __contains__(self, s):
        return canonical_key(s, self.regge) in self._table

    def clear(self):
        with self._lock:
            self._table.clear()
            self.hits = self.misses = 0

    def get(self, s: Tetra6j) -> SignedSqrtRational:
        s = Tetra6j(*s)
        if not s.is_admissible():
            return SignedSqrtRational(0)
        key = canonical_key(s, self.regge)
        val = self._table.get(key)
        if val is not None:
            with self._lock:
                self.hits += 1
            return val
        val = sixj_exact(key)
        self._table[key] = val
        with self._lock:
            self.misses += 1
        return val


_default_cache = SixJCache()


def sixj_cached(s: Tetra6j, cache: SixJCache | None = None) -> SignedSqrtRational:
    return (_default_cache if cache is None else cache).get(s)
