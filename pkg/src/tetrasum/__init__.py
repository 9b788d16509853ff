"""Exact SU(2) recoupling theory, tetrahedron geometry and 3-manifold state sums."""
