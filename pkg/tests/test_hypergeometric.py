from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from tetrasum.hypergeometric import (
    hypergeometric_terminating,
    hypergeometric_terms,
    pochhammer,
    termination_order,
)
from tetrasum.spin import DomainError


def test_pochhammer():
    assert pochhammer(3, 0) == 1
    assert pochhammer(1, 5) == 120
    assert pochhammer(-2, 3) == 0
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)


def test_termination_order_uses_smallest():
    assert termination_order([-3, -1, 2]) == 1
    with pytest.raises(DomainError):
        termination_order([Fraction(1, 2), 3])


@given(st.integers(0, 12), st.integers(1, 12), st.integers(1, 12))
def test_chu_vandermonde(n, b, c):
    # 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
    assert hypergeometric_terminating([-n, b], [c]) == Fraction(pochhammer(c - b, n), pochhammer(c, n))


@given(st.integers(0, 15))
def test_binomial_theorem(n):
    # 1F0(-n;;z) = (1-z)^n
    z = Fraction(1, 3)
    assert hypergeometric_terminating([-n], [], z) == (1 - z) ** n
    assert hypergeometric_terminating([-n], [], -1) == sum(comb(n, k) for k in range(n + 1))


def test_term_count_is_termination_order_plus_one():
    assert len(list(hypergeometric_terms([-4, 1, 2, 3], [5, 6, 7]))) == 5


def test_lower_parameter_hitting_zero():
    with pytest.raises(DomainError):
        hypergeometric_terminating([-3, 1], [-1])
