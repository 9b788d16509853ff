"""Euclidean tetrahedra from edge lengths, semiclassical 6j asymptotics,
and the three-dimensional Regge action.

Edge slots follow the 6j layout ``{a b c; d e f}`` on a tetrahedron with
vertices 0..3: a=01, b=02, c=12, d=23, e=13, f=03.  Faces (012), (013),
(023), (123) carry the triads (a b c), (a e f), (d b f), (d e c), and the
three columns (a d), (b e), (c f) are pairs of opposite edges.
"""
from __future__ import annotations

import math
from contextlib import nullcontext
from fractions import Fraction
from typing import NamedTuple

import mpmath

from .spin import DomainError

__all__ = [
    "EDGE_VERTICES",
    "NonEuclideanError",
    "TetGeometry",
    "cayley_menger",
    "volume_sq",
    "volume_sq_from_squares",
    "embed",
    "dihedral_angles",
    "interior_dihedral_angles",
    "tet_geometry",
    "sixj_lengths",
    "pr_asymptotic",
    "regge_action_3d",
]

EDGE_VERTICES = ((0, 1), (0, 2), (1, 2), (2, 3), (1, 3), (0, 3))


class NonEuclideanError(DomainError):
    """The six lengths do not bound a tetrahedron of positive volume."""

    def __init__(self, volume_sq, message=None):
        self.volume_sq = volume_sq
        super().__init__(message or f"not a Euclidean tetrahedron: V^2 = {volume_sq}")


def _det(rows):
    """Determinant by Gaussian elimination; exact for Fraction entries."""
    m = [list(r) for r in rows]
    n = len(m)
    exact = all(isinstance(x, (int, Fraction)) for r in m for x in r)
    if exact:
        m = [[Fraction(x) for x in r] for r in m]
    det = Fraction(1) if exact else 1.0
    for col in range(n):
        if exact:
            piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        else:
            piv = max(range(col, n), key=lambda r: abs(m[r][col]))
            if m[piv][col] == 0:
                piv = None
        if piv is None:
            return det * 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for r in range(col + 1, n):
            k = m[r][col] / p
            if k:
                row, prow = m[r], m[col]
                for cc in range(col, n):
                    row[cc] -= k * prow[cc]
    return det


def cayley_menger(squares):
    """The 5x5 Cayley-Menger matrix from six squared lengths in slot order."""
    d = [[0] * 4 for _ in range(4)]
    for (i, j), s in zip(EDGE_VERTICES, squares):
        d[i][j] = d[j][i] = s
    return [[0, 1, 1, 1, 1]] + [[1] + d[i] for i in range(4)]


def volume_sq_from_squares(squares):
    """V^2 = det(CM) / 288 from squared edge lengths (exact if rational)."""
    squares = list(squares)
    if len(squares) != 6:
        raise DomainError("need six squared edge lengths")
    det = _det(cayley_menger(squares))
    return det / 288


def volume_sq(lengths):
    """Squared volume from six edge lengths; positive iff Euclidean.

    Exact (a Fraction) when every length is an int or Fraction.
    """
    lengths = list(lengths)
    if len(lengths) != 6 or any(x <= 0 for x in lengths):
        raise DomainError("need six positive edge lengths")
    return volume_sq_from_squares([x * x for x in lengths])


def _backend(prec):
    return math if prec is None else mpmath


def _precision(prec):
    return nullcontext() if prec is None else mpmath.workprec(prec)


def _num(x, prec):
    if prec is None:
        return float(x)
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def embed(lengths, prec=None):
    """Vertices v0..v3 realizing the lengths.

    v0 at the origin, v1 on the x axis, v2 in the xy plane with y > 0, v3 by
    trilateration with z > 0.  ``prec`` (bits) switches to mpmath.
    """
    lengths = list(lengths)
    v2 = volume_sq(lengths)
    if v2 <= 0:
        raise NonEuclideanError(v2)
    m = _backend(prec)
    with _precision(prec):
        l01, l02, l12, l23, l13, l03 = (_num(x, prec) for x in lengths)
        x2 = (l01 * l01 + l02 * l02 - l12 * l12) / (2 * l01)
        y2 = m.sqrt(l02 * l02 - x2 * x2)
        x3 = (l01 * l01 + l03 * l03 - l13 * l13) / (2 * l01)
        y3 = (l02 * l02 + l03 * l03 - l23 * l23 - 2 * x2 * x3) / (2 * y2)
        z3sq = l03 * l03 - x3 * x3 - y3 * y3
        if z3sq <= 0:
            # V^2 > 0 but round-off ate the height
            raise NonEuclideanError(v2, f"tetrahedron too close to degenerate: V^2 = {v2}")
        z3 = m.sqrt(z3sq)
        zero = l01 * 0
        return [
            (zero, zero, zero),
            (l01, zero, zero),
            (x2, y2, zero),
            (x3, y3, z3),
        ]


def _sub(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def interior_dihedral_angles(lengths, prec=None):
    """Interior dihedral angle at each edge slot, in radians."""
    m = _backend(prec)
    verts = embed(lengths, prec)
    out = []
    with _precision(prec):
        for i, j in EDGE_VERTICES:
            k, l = (v for v in range(4) if v not in (i, j))
            axis = _sub(verts[j], verts[i])
            # face normals orthogonal to the shared edge, pointing at the far vertices
            n1 = _cross(axis, _cross(_sub(verts[k], verts[i]), axis))
            n2 = _cross(axis, _cross(_sub(verts[l], verts[i]), axis))
            c = _dot(n1, n2) / m.sqrt(_dot(n1, n1) * _dot(n2, n2))
            c = max(-1, min(1, c))
            out.append(m.acos(c))
    return tuple(out)


def dihedral_angles(lengths, prec=None):
    """Angles between outer face normals at each edge: pi minus the interior angle."""
    m = _backend(prec)
    inner = interior_dihedral_angles(lengths, prec)
    with _precision(prec):
        return tuple(m.pi - t for t in inner)


class TetGeometry(NamedTuple):
    volume_sq: float
    volume: float
    dihedral: tuple


def tet_geometry(lengths, prec=None) -> TetGeometry:
    """Squared volume, volume and outer-normal dihedral angles in one call."""
    v2 = volume_sq(lengths)
    if v2 <= 0:
        raise NonEuclideanError(v2)
    with _precision(prec):
        vol = _backend(prec).sqrt(_num(v2, prec))
    return TetGeometry(v2, vol, dihedral_angles(lengths, prec))


def sixj_lengths(s):
    """Ponzano-Regge edge lengths j + 1/2 for a 6j symbol given in doubled spins."""
    return tuple(Fraction(t + 1, 2) for t in s)


def pr_asymptotic(s, mode: str = "phase", prec=None):
    """Semiclassical value of the 6j symbol ``s`` (doubled spins).

    mode="phase": (24 pi V)^(-1/2) cos(sum_r l_r theta_r + pi/4);
    mode="standard": the same oscillation with amplitude (12 pi V)^(-1/2),
    which is the normalization the exact symbols actually approach;
    mode="wigner": the squared-symbol estimate 1 / (12 pi V).
    Raises :class:`NonEuclideanError` in the classically forbidden region.
    """
    lengths = sixj_lengths(s)
    v2 = volume_sq(lengths)
    if v2 <= 0:
        raise NonEuclideanError(v2)
    m = _backend(prec)
    with _precision(prec):
        vol = m.sqrt(_num(v2, prec))
        if mode == "wigner":
            return 1 / (12 * m.pi * vol)
        if mode not in ("phase", "standard"):
            raise DomainError(f"unknown asymptotic mode {mode!r}")
        theta = dihedral_angles(lengths, prec)
        phase = sum(_num(l, prec) * t for l, t in zip(lengths, theta))
        k = 24 if mode == "phase" else 12
        return m.cos(phase + m.pi / 4) / m.sqrt(k * m.pi * vol)


def regge_action_3d(cx, lengths, prec=None):
    """Regge action sum_e l_e eps_e and the deficit angles eps_e.

    ``cx`` is a :class:`~tetrasum.complex.SimplicialComplex3` and ``lengths``
    maps each edge (sorted vertex pair) to a positive length.  Deficit
    angles use interior dihedral angles: eps_e = 2 pi - sum of the interior
    angles of the tetrahedra around e.
    """
    from .complex import StructureError

    cx.require_closed()
    m = _backend(prec)
    missing = [e for e in cx.edges if e not in lengths]
    if missing:
        raise StructureError(f"no length given for edges {missing}")
    angle_sum = {e: 0.0 if prec is None else mpmath.mpf(0) for e in cx.edges}
    for tet in cx.tets:
        ls = [lengths[tuple(sorted((tet[i], tet[j])))] for i, j in EDGE_VERTICES]
        v2 = volume_sq(ls)
        if v2 <= 0:
            raise NonEuclideanError(v2, f"tetrahedron {tet} is not Euclidean: V^2 = {v2}")
        for (i, j), ang in zip(EDGE_VERTICES, interior_dihedral_angles(ls, prec)):
            angle_sum[tuple(sorted((tet[i], tet[j])))] += ang
    with _precision(prec):
        deficits = {e: 2 * m.pi - angle_sum[e] for e in cx.edges}
        action = sum(_num(lengths[e], prec) * deficits[e] for e in cx.edges)
    return action, deficits
