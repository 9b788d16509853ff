"""Tetrahedra from edge lengths, and how the 6j symbol approaches geometry.

For large spins the 6j symbol oscillates like A cos(sum (j+1/2) theta + pi/4)
where theta are the outer dihedral angles of the tetrahedron with edge
lengths j + 1/2.  The exact values show A = (12 pi V)^(-1/2); the
(24 pi V)^(-1/2) amplitude of the "phase" mode is smaller by sqrt 2, and the
squared symbol averages to half of 1 / (12 pi V).
"""
import math
from fractions import Fraction

from tetrasum.complex import load_complex
from tetrasum.geometry import pr_asymptotic, regge_action_3d, sixj_lengths, tet_geometry, volume_sq
from tetrasum.spin import ssr_to_float
from tetrasum.wigner import Tetra6j, sixj_exact

g = tet_geometry([Fraction(1)] * 6)
print("regular unit tetrahedron: V^2 =", g.volume_sq, " theta =", g.dihedral[0],
      " pi - arccos(1/3) =", math.pi - math.acos(1 / 3))
print("square (coplanar)        : V^2 =", volume_sq([1, math.sqrt(2), 1, 1, math.sqrt(2), 1]))
print("too long an edge         : V^2 =", volume_sq([1, 1, 1, 1, 1, 10]))

print("\n  j     exact          (12piV)^-1/2 cos   (24piV)^-1/2 cos   ratio")
for j in (10, 20, 40, 80):
    s = Tetra6j.of(*[j] * 6)
    x = ssr_to_float(sixj_exact(s))
    std, ph = pr_asymptotic(s, "standard"), pr_asymptotic(s, "phase")
    print(f"{j:4d}  {x: .6e}   {std: .6e}      {ph: .6e}      {x / ph: .4f}")

vals = []
for j in range(25, 36):
    s = Tetra6j.of(*[j] * 6)
    vals.append(ssr_to_float(sixj_exact(s)) ** 2 / pr_asymptotic(s, "wigner"))
print("\nmean of {6j}^2 * 12 pi V over j = 25..35:", round(sum(vals) / len(vals), 3))

# Regge action of the two-tetrahedron 3-sphere with unit edges.
cx = load_complex("builtin:s3-2tet")
action, deficits = regge_action_3d(cx, cx.lengths)
print("\nRegge action of the unit double tetrahedron:", action)
print("deficit per edge:", deficits[(0, 1)], "= 2 pi - 2 arccos(1/3)")
print("lengths of {2 2 2; 1 1 1} as a tetrahedron:", [str(x) for x in sixj_lengths(Tetra6j.of(2, 2, 2, 1, 1, 1))])
