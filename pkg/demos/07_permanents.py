"""Incidence matrices of graphs and their permanents."""
import math

import numpy as np

from tetrasum.permanent import SimpleGraph, incidence_matrix, permanent, permanent_naive

# K_{3,3}: the permanent counts permutations along edges, (3!)^2 = 36.
k33 = SimpleGraph.build(6, [(i, j) for i in range(3) for j in range(3, 6)])
a = incidence_matrix(k33)
print(a)
print("per =", permanent(a), " naive =", permanent_naive(a))

# A cycle: perfect matchings (2) plus the two directed Hamiltonian cycles.
c6 = SimpleGraph.build(6, [(i, (i + 1) % 6) for i in range(6)])
print("per(C6) =", permanent(incidence_matrix(c6)))

# All-ones matrices: per = n!.
for n in (4, 8, 12):
    print(f"per(J_{n}) = {permanent(np.ones((n, n), dtype=int))} = {n}! = {math.factorial(n)}")

# The Petersen graph.
outer = [(i, (i + 1) % 5) for i in range(5)]
spokes = [(i, i + 5) for i in range(5)]
inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
petersen = SimpleGraph.build(10, outer + spokes + inner)
print("per(Petersen) =", permanent(incidence_matrix(petersen)))
