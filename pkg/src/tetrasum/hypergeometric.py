"""Terminating generalized hypergeometric series in exact rational arithmetic."""
from __future__ import annotations

from fractions import Fraction

from .spin import DomainError


def pochhammer(a, n: int):
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    out = Fraction(1) if isinstance(a, Fraction) else 1
    for k in range(n):
        out *= a + k
    return out


def termination_order(upper) -> int:
    """Index of the last nonzero term: the smallest -a over nonpositive integer a."""
    orders = [-int(a) for a in upper if Fraction(a).denominator == 1 and a <= 0]
    if not orders:
        raise DomainError("series does not terminate: no nonpositive integer numerator parameter")
    return min(orders)


def hypergeometric_terms(upper, lower, z=1):
    """Yield the terms of pFq(upper; lower; z) up to its termination order.

    Consecutive terms are built by their ratio, so each step costs O(p + q)
    rational multiplications.  A lower parameter hitting zero before the
    series terminates is a domain error.
    """
    upper = [Fraction(a) for a in upper]
    lower = [Fraction(b) for b in lower]
    z = Fraction(z)
    n_max = termination_order(upper)
    term = Fraction(1)
    for n in range(n_max + 1):
        yield term
        if n == n_max:
            break
        num = z
        for a in upper:
            num *= a + n
        den = Fraction(n + 1)
        for b in lower:
            if b + n == 0:
                raise DomainError("lower parameter reaches zero before termination")
            den *= b + n
        term = term * num / den


def hypergeometric_terminating(upper, lower, z=1) -> Fraction:
    """Exact value of a terminating pFq(upper; lower; z)."""
    return sum(hypergeometric_terms(upper, lower, z), Fraction(0))
