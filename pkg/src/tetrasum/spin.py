"""Half-integer spins, triads, Delta factors and exact signed square roots.

Spins are carried as twice their value (``tj`` = 2j) wherever arithmetic
happens, so parity and triangle tests stay in the integers.  Public entry
points accept anything :func:`twice` understands: ``int``, ``Fraction``,
``HalfInt``, floats that are exact halves, and strings such as ``"3/2"``.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import NamedTuple

import mpmath

__all__ = [
    "DomainError",
    "HalfInt",
    "Triad",
    "SignedSqrtRational",
    "twice",
    "spin",
    "factorial",
    "is_triad_admissible",
    "delta_factor",
    "ssr_sum",
    "ssr_to_float",
]


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


def twice(x) -> int:
    """Return 2x as an int, for x an integer or half-integer (any sign)."""
    if isinstance(x, HalfInt):
        return x.twice
    if isinstance(x, bool):
        raise DomainError(f"not a spin value: {x!r}")
    if isinstance(x, int):
        return 2 * x
    if isinstance(x, Fraction) and x.denominator <= 2:
        return x.numerator * (2 // x.denominator)
    if isinstance(x, str):
        try:
            x = Fraction(x.strip())
        except ValueError:
            raise DomainError(f"cannot parse spin {x!r}") from None
    try:
        t = Fraction(x) * 2
    except (TypeError, ValueError):
        raise DomainError(f"not a spin value: {x!r}") from None
    if t.denominator != 1:
        raise DomainError(f"{x!r} is not an integer or half-integer")
    return int(t)


def spin(x) -> int:
    """Like :func:`twice` but rejects negative values (representation labels)."""
    t = twice(x)
    if t < 0:
        raise DomainError(f"spin label must be non-negative, got {Fraction(t, 2)}")
    return t


@dataclass(frozen=True, order=True)
class HalfInt:
    """A half-integer stored as ``twice`` = 2j."""

    twice: int

    @classmethod
    def of(cls, x) -> "HalfInt":
        return cls(twice(x))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __float__(self):
        return self.twice / 2

    def __str__(self):
        return str(self.twice // 2) if self.twice % 2 == 0 else f"{self.twice}/2"


class Triad(NamedTuple):
    """Three spins (stored doubled) meeting at a vertex / bounding a face."""

    a: int
    b: int
    c: int

    @classmethod
    def of(cls, a, b, c) -> "Triad":
        return cls(spin(a), spin(b), spin(c))


# --- factorials --------------------------------------------------------------

class _FactorialTable:
    # Reads are lock-free; growth is serialized.
    def __init__(self):
        self._table = [1]
        self._lock = threading.Lock()

    def __call__(self, n: int) -> int:
        table = self._table
        if n < len(table):
            return table[n]
        if n < 0:
            raise DomainError(f"factorial of negative integer {n}")
        with self._lock:
            table = self._table
            grown = list(table)
            acc = grown[-1]
            for k in range(len(grown), n + 1):
                acc *= k
                grown.append(acc)
            self._table = grown
        return grown[n]


factorial = _FactorialTable()


# --- triads and Delta ---------------------------------------------------------

def _admissible2(ta: int, tb: int, tc: int) -> bool:
    return (
        (ta + tb + tc) % 2 == 0
        and abs(ta - tb) <= tc <= ta + tb
    )


def is_triad_admissible(a, b, c) -> bool:
    """Triangle inequality plus integer perimeter."""
    return _admissible2(spin(a), spin(b), spin(c))


def _delta_sq2(ta: int, tb: int, tc: int) -> Fraction:
    # assumes admissibility
    return Fraction(
        factorial((ta + tb - tc) // 2)
        * factorial((ta - tb + tc) // 2)
        * factorial((-ta + tb + tc) // 2),
        factorial((ta + tb + tc) // 2 + 1),
    )


def delta_factor(a, b, c) -> "SignedSqrtRational":
    """Delta(abc) = sqrt((a+b-c)! (a-b+c)! (-a+b+c)! / (a+b+c+1)!)."""
    ta, tb, tc = spin(a), spin(b), spin(c)
    if (ta + tb + tc) % 2:
        raise DomainError(
            f"triad ({Fraction(ta, 2)}, {Fraction(tb, 2)}, {Fraction(tc, 2)}): "
            "a+b+c is not an integer"
        )
    if not abs(ta - tb) <= tc <= ta + tb:
        raise DomainError(
            f"triad ({Fraction(ta, 2)}, {Fraction(tb, 2)}, {Fraction(tc, 2)}): "
            "triangle inequality violated"
        )
    return SignedSqrtRational(1, _delta_sq2(ta, tb, tc))


# --- signed square roots of rationals -----------------------------------------

def _rational_sqrt(x: Fraction):
    """Exact square root of a non-negative rational, or None if irrational."""
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class SignedSqrtRational:
    """The exact real number ``sign * sqrt(radicand)``.

    Closed under multiplication, not under addition; see :func:`ssr_sum`
    for the commensurable case.
    """

    __slots__ = ("sign", "radicand")

    def __init__(self, sign: int, radicand=Fraction(0)):
        radicand = Fraction(radicand)
        if radicand < 0:
            raise DomainError("radicand must be non-negative")
        if radicand == 0 or sign == 0:
            sign, radicand = 0, Fraction(0)
        elif sign not in (1, -1):
            raise DomainError(f"sign must be -1, 0 or +1, got {sign!r}")
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "radicand", radicand)

    def __setattr__(self, name, value):
        raise AttributeError("SignedSqrtRational is immutable")

    @classmethod
    def from_rational(cls, x) -> "SignedSqrtRational":
        x = Fraction(x)
        return cls((x > 0) - (x < 0), x * x)

    @classmethod
    def parse(cls, text: str) -> "SignedSqrtRational":
        """Inverse of ``str()``: ``"+sqrt(1/36)"``, ``"-sqrt(2/3)"``, ``"0sqrt(0/1)"``."""
        s = text.strip()
        if s == "0":
            return cls(0)
        if not s or s[0] not in "+-0" or not s[1:].startswith("sqrt(") or not s.endswith(")"):
            raise DomainError(f"malformed exact value {text!r}")
        try:
            rad = Fraction(s[6:-1])
        except ValueError:
            raise DomainError(f"malformed exact value {text!r}") from None
        sign = {"+": 1, "-": -1, "0": 0}[s[0]]
        if (sign == 0) != (rad == 0):
            raise DomainError(f"inconsistent sign and radicand in {text!r}")
        return cls(sign, rad)

    @property
    def square(self) -> Fraction:
        """The signed square ``sign * radicand``; determines the value."""
        return self.sign * self.radicand

    def is_zero(self) -> bool:
        return self.sign == 0

    def __mul__(self, other):
        if isinstance(other, SignedSqrtRational):
            return SignedSqrtRational(self.sign * other.sign, self.radicand * other.radicand)
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return SignedSqrtRational(self.sign * ((other > 0) - (other < 0)),
                                      self.radicand * other * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return SignedSqrtRational(-self.sign, self.radicand)

    def __abs__(self):
        return SignedSqrtRational(abs(self.sign), self.radicand)

    def __eq__(self, other):
        if isinstance(other, SignedSqrtRational):
            return self.sign == other.sign and self.radicand == other.radicand
        if isinstance(other, (int, Fraction)):
            return self == SignedSqrtRational.from_rational(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.sign, self.radicand))

    def __float__(self):
        return ssr_to_float(self)

    def __str__(self):
        s = {1: "+", -1: "-", 0: "0"}[self.sign]
        r = self.radicand
        return f"{s}sqrt({r.numerator}/{r.denominator})"

    def __repr__(self):
        return f"SignedSqrtRational({str(self)!r})"


def ssr_sum(values) -> SignedSqrtRational:
    """Exact sum of square roots that share a common irrational kernel.

    Every nonzero term must be a rational multiple of the first nonzero term;
    anything else leaves the closed form and raises :class:`DomainError`.
    """
    ref = None
    total = Fraction(0)
    for v in values:
        if v.sign == 0:
            continue
        if ref is None:
            ref = v.radicand
            total += v.sign
            continue
        k = _rational_sqrt(v.radicand / ref)
        if k is None:
            raise DomainError("terms are not commensurable square roots")
        total += v.sign * k
    if ref is None or total == 0:
        return SignedSqrtRational(0)
    return SignedSqrtRational((total > 0) - (total < 0), ref * total * total)


def _round_sqrt_bits(radicand: Fraction, precision: int):
    """Mantissa m and exponent e with m*2**e = sqrt(radicand) rounded to nearest-even."""
    n, d = radicand.numerator, radicand.denominator
    # scale so the integer square root carries precision + 2 bits
    k = (precision + 2) - (n.bit_length() - d.bit_length()) // 2 + 1
    while True:
        num = n << (2 * k) if k >= 0 else n
        den = d if k >= 0 else d << (-2 * k)
        s = isqrt(num // den)
        if s.bit_length() >= precision + 2:
            break
        k += 1
    exact = s * s * den == num
    drop = s.bit_length() - precision
    m, rem = s >> drop, s & ((1 << drop) - 1)
    half = 1 << (drop - 1)
    if rem > half or (rem == half and (not exact or m & 1)):
        m += 1
    return m, drop - k


def ssr_to_float(x: SignedSqrtRational, precision: int = 53):
    """``sign * sqrt(radicand)`` correctly rounded to ``precision`` bits.

    Returns a ``float`` at the default 53 bits and an ``mpmath.mpf`` above it.
    """
    if precision < 53:
        raise DomainError("precision must be at least 53 bits")
    if x.sign == 0:
        return 0.0 if precision == 53 else mpmath.mpf(0)
    m, e = _round_sqrt_bits(x.radicand, precision)
    if precision == 53:
        from math import ldexp
        return x.sign * ldexp(m, e)
    with mpmath.workprec(precision):
        return x.sign * mpmath.ldexp(mpmath.mpf(m), e)
