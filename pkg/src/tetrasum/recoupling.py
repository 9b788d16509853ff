"""Recoupling matrices, transition probabilities and the 6j defining identities.

Everything here is exact; identity checks return both sides as
:class:`SignedSqrtRational` so a mismatch is a bug, not round-off.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .spin import DomainError, SignedSqrtRational, _admissible2, spin, ssr_sum
from .wigner import SixJCache, Tetra6j, sixj_cached

__all__ = [
    "RecouplingMatrix",
    "IdentityCheck",
    "coupling_range",
    "recoupling_matrix",
    "recoupling_probability",
    "check_biedenharn_elliott",
    "check_orthogonality",
]


def coupling_range(*pairs):
    """Doubled spins x admissible with every pair (u, v) given (doubled).

    The intersection of the triangle ranges, stepping by one unit of spin;
    empty when the pairs disagree on parity.
    """
    parities = {(u + v) % 2 for u, v in pairs}
    if len(parities) != 1:
        return range(0)
    lo = max(abs(u - v) for u, v in pairs)
    hi = min(u + v for u, v in pairs)
    return range(lo, hi + 1, 2)


def _sign_pow(t2: int) -> int:
    """(-1)**(t2/2) for an even doubled exponent."""
    assert t2 % 2 == 0, "phase exponent is not an integer"
    return -1 if (t2 // 2) % 2 else 1


@dataclass(frozen=True)
class RecouplingMatrix:
    """Entries <(j1 j2) j12, j3; j | j1, (j2 j3) j23; j>, rows j12, columns j23.

    Spins are doubled integers.
    """

    j1: int
    j2: int
    j3: int
    j: int
    j12: tuple
    j23: tuple
    entries: tuple  # tuple of row tuples of SignedSqrtRational

    def __len__(self):
        return len(self.j12)

    def to_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries])

    def gram(self, transpose_first: bool = True):
        """Exact M^T M (or M M^T) as a nested tuple of SignedSqrtRational."""
        m = self.entries
        n = len(m)
        if transpose_first:
            return tuple(tuple(ssr_sum(m[k][i] * m[k][j] for k in range(n)) for j in range(n))
                         for i in range(n))
        return tuple(tuple(ssr_sum(m[i][k] * m[j][k] for k in range(n)) for j in range(n))
                     for i in range(n))

    def is_orthogonal(self) -> bool:
        one, zero = SignedSqrtRational(1, 1), SignedSqrtRational(0)
        for g in (self.gram(True), self.gram(False)):
            for i, row in enumerate(g):
                for j, x in enumerate(row):
                    if x != (one if i == j else zero):
                        return False
        return True


def recoupling_matrix(j1, j2, j3, j, cache: SixJCache | None = None) -> RecouplingMatrix:
    """Change of basis between the (j1 j2)j12 and (j2 j3)j23 coupling schemes.

    Entry (j12, j23) is (-1)^(j1+j2+j3+j) sqrt((2j12+1)(2j23+1)) {j1 j2 j12; j3 j j23}.
    """
    t1, t2, t3, t = spin(j1), spin(j2), spin(j3), spin(j)
    rows = coupling_range((t1, t2), (t, t3))
    cols = coupling_range((t2, t3), (t, t1))
    if not rows or not cols:
        raise DomainError(
            f"no admissible intermediate couplings for j1={Fraction(t1, 2)}, "
            f"j2={Fraction(t2, 2)}, j3={Fraction(t3, 2)}, j={Fraction(t, 2)}"
        )
    phase = _sign_pow(t1 + t2 + t3 + t)
    entries = tuple(
        tuple(
            SignedSqrtRational(phase, (x + 1) * (y + 1)) * sixj_cached(Tetra6j(t1, t2, x, t3, t, y), cache)
            for y in cols
        )
        for x in rows
    )
    return RecouplingMatrix(t1, t2, t3, t, tuple(rows), tuple(cols), entries)


def recoupling_probability(j1, j2, j3, j, j12, j23, cache: SixJCache | None = None) -> Fraction:
    """(2 j12 + 1)(2 j23 + 1) {j1 j2 j12; j3 j j23}^2, zero when inadmissible."""
    t1, t2, t3, t, x, y = (spin(v) for v in (j1, j2, j3, j, j12, j23))
    if not (_admissible2(t1, t2, x) and _admissible2(x, t3, t)
            and _admissible2(t2, t3, y) and _admissible2(t1, y, t)):
        return Fraction(0)
    return (x + 1) * (y + 1) * sixj_cached(Tetra6j(t1, t2, x, t3, t, y), cache).radicand


class IdentityCheck(NamedTuple):
    """Both sides of an exact identity."""

    lhs: SignedSqrtRational
    rhs: SignedSqrtRational

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    @property
    def residual(self) -> Fraction:
        """Difference of signed squares; zero iff lhs == rhs, since the
        signed square determines a SignedSqrtRational uniquely."""
        return self.lhs.square - self.rhs.square


def check_biedenharn_elliott(a, b, c, d, e, f, p, q, r, cache: SixJCache | None = None) -> IdentityCheck:
    """Both sides of the Biedenharn-Elliott (pentagon) identity.

    sum_x (-1)^(R+x) (2x+1) {a b x; c d p}{c d x; e f q}{e f x; b a r}
        = {p q r; e a d}{p q r; f b c},   R = a+b+c+d+e+f+p+q+r.
    """
    a, b, c, d, e, f, p, q, r = (spin(v) for v in (a, b, c, d, e, f, p, q, r))
    # triads free of x appear on both sides; if one fails, both sides vanish
    fixed = ((a, d, p), (c, b, p), (c, f, q), (e, d, q), (e, a, r), (b, f, r))
    if not all(_admissible2(*t) for t in fixed):
        zero = SignedSqrtRational(0)
        return IdentityCheck(zero, zero)
    big_r = a + b + c + d + e + f + p + q + r
    terms = []
    for x in coupling_range((a, b), (c, d), (e, f)):
        t = (sixj_cached(Tetra6j(a, b, x, c, d, p), cache)
             * sixj_cached(Tetra6j(c, d, x, e, f, q), cache))
        if t.is_zero():
            continue
        t = t * sixj_cached(Tetra6j(e, f, x, b, a, r), cache)
        if t.is_zero():
            continue
        terms.append(t * (_sign_pow(big_r + x) * (x + 1)))
    lhs = ssr_sum(terms)
    rhs = sixj_cached(Tetra6j(p, q, r, e, a, d), cache) * sixj_cached(Tetra6j(p, q, r, f, b, c), cache)
    return IdentityCheck(lhs, rhs)


def check_orthogonality(a, b, c, d, p, q, cache: SixJCache | None = None) -> IdentityCheck:
    """Both sides of sum_x (2x+1){a b x; c d p}{c d x; a b q} = delta_pq / (2p+1).

    The right side is taken as zero when the fixed triads (a d p), (c b p)
    are inadmissible, since then every term on the left vanishes.
    """
    a, b, c, d, p, q = (spin(v) for v in (a, b, c, d, p, q))
    terms = []
    for x in coupling_range((a, b), (c, d)):
        t = sixj_cached(Tetra6j(a, b, x, c, d, p), cache) * sixj_cached(Tetra6j(c, d, x, a, b, q), cache)
        if not t.is_zero():
            terms.append(t * (x + 1))
    lhs = ssr_sum(terms)
    if p == q and _admissible2(a, d, p) and _admissible2(c, b, p):
        rhs = SignedSqrtRational.from_rational(Fraction(1, p + 1))
    else:
        rhs = SignedSqrtRational(0)
    return IdentityCheck(lhs, rhs)
