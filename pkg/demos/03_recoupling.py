"""Recoupling three spins, transition probabilities, and the two defining identities."""
from fractions import Fraction

from tetrasum.recoupling import (
    check_biedenharn_elliott,
    check_orthogonality,
    recoupling_matrix,
    recoupling_probability,
)

H = Fraction(1, 2)

# Three spin-1/2 particles coupled to total spin 1/2: two intermediate channels.
m = recoupling_matrix(H, H, H, H)
print("rows j12 =", [Fraction(x, 2) for x in m.j12], "cols j23 =", [Fraction(y, 2) for y in m.j23])
for row in m.entries:
    print("   ", [str(x) for x in row])
print("orthogonal:", m.is_orthogonal())
print(m.to_array())

# Probability of finding j23 given j12 = 0.
for j23 in (0, 1):
    print(f"P(j23={j23} | j12=0) =", recoupling_probability(H, H, H, H, 0, j23))

# A larger case: still exactly orthogonal.
big = recoupling_matrix(2, Fraction(3, 2), 1, Fraction(5, 2))
print(len(big), "x", len(big), "matrix orthogonal:", big.is_orthogonal())

# Biedenharn-Elliott and orthogonality hold exactly, not just to round-off.
be = check_biedenharn_elliott(1, 1, 1, 1, 1, 1, 1, 1, 1)
print("BE  lhs", be.lhs, "rhs", be.rhs, "residual", be.residual)
orth = check_orthogonality(H, H, H, H, 1, 1)
print("ort lhs", orth.lhs, "rhs", orth.rhs)
