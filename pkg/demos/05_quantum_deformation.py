"""Quantum integers and q-6j symbols at a root of unity."""
import math

from tetrasum.qdeform import (
    q_check_biedenharn_elliott,
    q_check_orthogonality,
    q_sixj,
    quantum_integer,
    total_quantum_weight,
)
from tetrasum.spin import ssr_to_float
from tetrasum.wigner import Tetra6j, sixj_exact

r = 5
print(f"level r = {r}: spins 0 .. {(r - 2) / 2}")
print("[n] =", [round(quantum_integer(n, r), 6) for n in range(r + 1)])
print("[2] = golden ratio:", quantum_integer(2, r), (1 + math.sqrt(5)) / 2)
print("w = sum [2j+1]^2 =", total_quantum_weight(r), " r / (2 sin^2(pi/r)) =", r / (2 * math.sin(math.pi / r) ** 2))

# Truncation: the triad (1,1,1) has perimeter 3 > r - 2 at r = 4.
print("{1 1 1; 1 1 1}_q at r=4:", q_sixj(Tetra6j.of(1, 1, 1, 1, 1, 1), 4))

# The classical symbol is recovered as r grows.
s = Tetra6j.of(2, 2, 2, 1, 1, 1)
exact = ssr_to_float(sixj_exact(s))
for level in (10, 50, 200, 1000):
    print(f"r={level:5d}  q-6j = {q_sixj(s, level): .8f}   classical {exact: .8f}")

# The deformed identities hold to round-off.
print("q-orthogonality:", q_check_orthogonality(0.5, 1, 0.5, 1, 0.5, 0.5, 7))
print("q-BE           :", q_check_biedenharn_elliott(1, 1, 1, 1, 1, 1, 1, 1, 1, 7))
