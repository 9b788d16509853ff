"""Turaev-Viro invariant and the finite-cutoff Ponzano-Regge functional on S^3.

Two triangulations of the 3-sphere ship with the package: two tetrahedra
glued along their boundary, and the boundary of the 4-simplex.  The
Turaev-Viro sum must give the same number on both, namely (2/r) sin^2(pi/r).
"""
import math
import time

from tetrasum.complex import load_complex
from tetrasum.statesum import count_colorings, pr_functional_cutoff, tv_invariant

two = load_complex("builtin:s3-2tet")
five = load_complex("builtin:s3-5tet")
print("counts (N0, N1, N2, N3):", two.counts, five.counts)

print("\n r   colorings(2,5)    Z(2 tets)          Z(5 tets)          (2/r)sin^2(pi/r)")
for r in range(3, 9):
    t0 = time.time()
    a, b = tv_invariant(two, r), tv_invariant(five, r)
    print(f"{r:2d}   {a.colorings:5d} {b.colorings:6d}   {a.value:.15f}  {b.value:.15f}  "
          f"{2 / r * math.sin(math.pi / r) ** 2:.15f}   ({time.time() - t0:.2f}s)")

# The Ponzano-Regge partial sums grow without bound in the cutoff; here are
# the first few, with Lambda(L) = 4 L^3 / 3.
print("\n L     colorings   Lambda        Z_PR(L)")
for L in ("0", "1/2", "1", "3/2", "2"):
    res = pr_functional_cutoff(two, L)
    print(f"{L:>4}   {res.colorings:6d}     {res.lam:8.4f}   {res.value:.10g}")

print("\ncount of spin <= 2 colorings on the 4-simplex boundary:", count_colorings(five, cutoff=2))
