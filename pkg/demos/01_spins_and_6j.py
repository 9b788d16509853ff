"""Spins, Delta factors and the 6j symbol two ways.

Spins are stored doubled, so j = 3/2 is the integer 3.  Values of 3j and
6j symbols are exact numbers sign * sqrt(p/q).
"""
from fractions import Fraction

from tetrasum.spin import delta_factor, is_triad_admissible, ssr_to_float
from tetrasum.wigner import Tetra6j, sixj, sixj_exact, sixj_oracle, three_j

H = Fraction(1, 2)

# Triads must close into a triangle with an integer perimeter.
for t in [(1, 1, 1), (H, H, H), (1, 2, 4)]:
    print("triad", t, "admissible:", is_triad_admissible(*t))

print("Delta(1,1,1) =", delta_factor(1, 1, 1))

# A 3j symbol, and its constituents of the 6j contraction.
print("(1 1 0; 0 0 0) =", three_j(1, 1, 0, 0, 0, 0))

# The 6j from Racah's terminating 4F3 and from summing four 3j symbols.
s = Tetra6j.of(2, 2, 2, 1, 1, 1)
print(s, "Racah:", sixj_exact(s), " contraction:", sixj_oracle(s))
print("as a float:", ssr_to_float(sixj_exact(s)))
print("201 bits  :", ssr_to_float(sixj_exact(s), 201))

# Inadmissible symbols are exactly zero.
print("{1 2 4; 1 2 4} =", sixj(1, 2, 4, 1, 2, 4))
