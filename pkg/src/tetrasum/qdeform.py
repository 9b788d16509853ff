"""Quantum integers and q-6j symbols at the root of unity of level r.

Convention: [n] = sin(n pi / r) / sin(pi / r), positive for 0 < n < r, which
keeps every q-factorial that appears for q-admissible spins positive and
the q-6j real.  Spins at level r run over 0, 1/2, ..., (r-2)/2 and a triad
is q-admissible when it is admissible and a+b+c <= r-2.

Values are floats by default; pass ``prec`` (bits) for mpmath.
"""
from __future__ import annotations

import math
import threading
from contextlib import nullcontext

import mpmath

from .spin import DomainError, _admissible2, spin
from .wigner import Tetra6j

__all__ = [
    "check_level",
    "quantum_integer",
    "q_factorial",
    "is_q_admissible",
    "q_dimension",
    "total_quantum_weight",
    "q_sixj",
    "classical_sixj_float",
    "q_check_orthogonality",
    "q_check_biedenharn_elliott",
]


def check_level(r) -> int:
    if isinstance(r, bool) or not isinstance(r, int) or r < 3:
        raise DomainError(f"level r must be an integer >= 3, got {r!r}")
    return r


def quantum_integer(n: int, r: int, prec=None):
    """[n] = sin(n pi / r) / sin(pi / r)."""
    check_level(r)
    if prec is None:
        return math.sin(n * math.pi / r) / math.sin(math.pi / r)
    with mpmath.workprec(prec):
        return mpmath.sin(n * mpmath.pi / r) / mpmath.sin(mpmath.pi / r)


class _QFactorials:
    """Per-(level, precision) tables [0]!, [1]!, ..., [r-1]!; [n]! = 0 for n >= r."""

    def __init__(self):
        self._tables = {}
        self._lock = threading.Lock()

    def table(self, r, prec):
        key = (r, prec)
        tab = self._tables.get(key)
        if tab is None:
            with self._lock:
                tab = self._tables.get(key)
                if tab is None:
                    acc = 1.0 if prec is None else mpmath.mpf(1)
                    tab = [acc]
                    for k in range(1, r):
                        acc = acc * quantum_integer(k, r, prec)
                        tab.append(acc)
                    self._tables[key] = tab
        return tab


_qfact = _QFactorials()


def q_factorial(n: int, r: int, prec=None):
    check_level(r)
    if n < 0:
        raise DomainError(f"q-factorial of negative integer {n}")
    tab = _qfact.table(r, prec)
    if n >= r:
        return tab[0] * 0
    return tab[n]


def is_q_admissible(ta: int, tb: int, tc: int, r: int) -> bool:
    """q-admissibility of a triad given in doubled spins."""
    return _admissible2(ta, tb, tc) and ta + tb + tc <= 2 * (r - 2)


def q_dimension(tj: int, r: int, prec=None):
    """Signed quantum dimension (-1)^(2j) [2j+1] of the doubled spin tj."""
    d = quantum_integer(tj + 1, r, prec)
    return -d if tj % 2 else d


def total_quantum_weight(r: int, prec=None):
    """w = sum over level-r spins of [2j+1]^2; equals r / (2 sin^2(pi/r))."""
    check_level(r)
    ctx = nullcontext() if prec is None else mpmath.workprec(prec)
    with ctx:
        return sum(quantum_integer(t + 1, r, prec) ** 2 for t in range(r - 1))


def _racah_float(s: Tetra6j, fact, sqrt):
    """Racah's single sum with a supplied factorial; s must be admissible."""
    a, b, c, d, e, f = s
    alphas = ((a + b + c) // 2, (a + e + f) // 2, (d + b + f) // 2, (d + e + c) // 2)
    betas = ((a + b + d + e) // 2, (a + c + d + f) // 2, (b + c + e + f) // 2)
    total = 0
    for z in range(max(alphas), min(betas) + 1):
        den = 1
        for al in alphas:
            den = den * fact(z - al)
        for be in betas:
            den = den * fact(be - z)
        term = fact(z + 1) / den
        total = total - term if z % 2 else total + term
    delta2 = 1
    for ta, tb, tc in s.triads():
        delta2 = delta2 * (fact((ta + tb - tc) // 2) * fact((ta - tb + tc) // 2)
                           * fact((-ta + tb + tc) // 2) / fact((ta + tb + tc) // 2 + 1))
    return sqrt(delta2) * total


def q_sixj(s: Tetra6j, r: int, prec=None):
    """The q-6j symbol at level r (real, tetrahedrally symmetric).

    Zero when a triad fails q-admissibility; a spin above (r-2)/2 is a
    domain error.
    """
    check_level(r)
    s = Tetra6j(*s)
    if max(s) > r - 2:
        raise DomainError(f"spin {max(s) / 2} exceeds the level-{r} bound {(r - 2) / 2}")
    if not all(is_q_admissible(*t, r) for t in s.triads()):
        return 0.0 if prec is None else mpmath.mpf(0)
    tab = _qfact.table(r, prec)
    zero = tab[0] * 0

    def fact(n):
        return tab[n] if n < r else zero

    if prec is None:
        return _racah_float(s, fact, math.sqrt)
    with mpmath.workprec(prec):
        return _racah_float(s, fact, mpmath.sqrt)


def classical_sixj_float(s: Tetra6j):
    """The ordinary 6j in floating point by the same sum with integer factorials.

    This is the q -> 1 replacement [n] -> n of :func:`q_sixj`; exact values
    live in :func:`tetrasum.wigner.sixj_exact`.
    """
    s = Tetra6j(*s)
    if not s.is_admissible():
        return 0.0
    return _racah_float(s, lambda n: float(math.factorial(n)), math.sqrt)


def _coupling_range(r, *pairs):
    parities = {(u + v) % 2 for u, v in pairs}
    if len(parities) != 1:
        return range(0)
    lo = max(abs(u - v) for u, v in pairs)
    hi = min(min(u + v, 2 * (r - 2) - u - v) for u, v in pairs)
    return range(lo, hi + 1, 2)


def q_check_orthogonality(a, b, c, d, p, q, r: int):
    """Both sides of the level-r orthogonality relation, as floats.

    sum_x [2x+1] {a b x; c d p}_q {c d x; a b q}_q = delta_pq / [2p+1]
    over q-admissible x; the right side is zero unless (a d p) and (c b p)
    are q-admissible.
    """
    a, b, c, d, p, q = (spin(v) for v in (a, b, c, d, p, q))
    lhs = 0.0
    for x in _coupling_range(r, (a, b), (c, d)):
        lhs += (quantum_integer(x + 1, r) * q_sixj(Tetra6j(a, b, x, c, d, p), r)
                * q_sixj(Tetra6j(c, d, x, a, b, q), r))
    if p == q and is_q_admissible(a, d, p, r) and is_q_admissible(c, b, p, r):
        rhs = 1 / quantum_integer(p + 1, r)
    else:
        rhs = 0.0
    return lhs, rhs


def q_check_biedenharn_elliott(a, b, c, d, e, f, p, q, rr, r: int):
    """Both sides of the level-r Biedenharn-Elliott identity, as floats.

    Same phase structure as the classical identity with (2x+1) -> [2x+1].
    ``rr`` is the ninth spin (named r in the classical identity); ``r`` is
    the level.
    """
    a, b, c, d, e, f, p, q, rr = (spin(v) for v in (a, b, c, d, e, f, p, q, rr))
    big_r = a + b + c + d + e + f + p + q + rr
    lhs = 0.0
    for x in _coupling_range(r, (a, b), (c, d), (e, f)):
        t = (q_sixj(Tetra6j(a, b, x, c, d, p), r) * q_sixj(Tetra6j(c, d, x, e, f, q), r)
             * q_sixj(Tetra6j(e, f, x, b, a, rr), r))
        if t == 0:
            continue
        sign = -1 if ((big_r + x) // 2) % 2 else 1
        lhs += sign * quantum_integer(x + 1, r) * t
    rhs = q_sixj(Tetra6j(p, q, rr, e, a, d), r) * q_sixj(Tetra6j(p, q, rr, f, b, c), r)
    return lhs, rhs
