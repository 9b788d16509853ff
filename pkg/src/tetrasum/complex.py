"""Closed triangulated 3-manifolds given by their tetrahedra.

A triangulation document is plain text::

    # comments start with '#'
    tets 2
    0 1 2 3
    1 0 2 3
    lengths            (optional, for Regge calculus)
    0 1 -> 1.0
    ...

Edges and triangles are derived from the tetrahedra.  Cells are allowed to
share a vertex set (the two-tetrahedron sphere does), but listing the same
oriented tetrahedron twice is an error.
"""
from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

__all__ = [
    "StructureError",
    "SimplicialComplex3",
    "parse_complex",
    "load_complex",
    "builtin_names",
]


class StructureError(ValueError):
    """Malformed or non-manifold triangulation."""


def _parity(seq) -> int:
    seq = list(seq)
    inv = sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] > seq[j])
    return inv % 2


@dataclass
class SimplicialComplex3:
    """A closed 3-dimensional triangulation.

    ``tets`` keeps the vertex order given in the document; it fixes the 6j
    slot assignment {j01 j02 j12; j23 j13 j03} for each tetrahedron.
    """

    tets: list
    lengths: dict = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        self.tets = [tuple(t) for t in self.tets]
        for t in self.tets:
            if len(t) != 4 or len(set(t)) != 4:
                raise StructureError(f"tetrahedron {t} must have four distinct vertices")
            if any((not isinstance(v, int)) or v < 0 for v in t):
                raise StructureError(f"tetrahedron {t}: vertex labels must be non-negative integers")
        oriented = Counter((tuple(sorted(t)), _parity(t)) for t in self.tets)
        dup = [k for k, n in oriented.items() if n > 1]
        if dup:
            raise StructureError(f"duplicate tetrahedron {dup[0][0]} with the same orientation")
        self.vertices = sorted({v for t in self.tets for v in t})
        self.edges = sorted({tuple(sorted(p)) for t in self.tets for p in itertools.combinations(t, 2)})
        self.triangles = sorted({tuple(sorted(p)) for t in self.tets for p in itertools.combinations(t, 3)})
        self.edge_tets = defaultdict(list)
        self.triangle_tets = defaultdict(list)
        for k, t in enumerate(self.tets):
            for p in itertools.combinations(t, 2):
                self.edge_tets[tuple(sorted(p))].append(k)
            for p in itertools.combinations(t, 3):
                self.triangle_tets[tuple(sorted(p))].append(k)
        self.edge_tets = dict(self.edge_tets)
        self.triangle_tets = dict(self.triangle_tets)

    @property
    def counts(self):
        """(N0, N1, N2, N3)."""
        return (len(self.vertices), len(self.edges), len(self.triangles), len(self.tets))

    @property
    def euler_characteristic(self) -> int:
        n0, n1, n2, n3 = self.counts
        return n0 - n1 + n2 - n3

    def require_closed(self):
        for tri, inc in self.triangle_tets.items():
            if len(inc) != 2:
                raise StructureError(
                    f"not closed: triangle {tri} lies in {len(inc)} tetrahedra (need 2)"
                )
        if self.euler_characteristic != 0:
            raise StructureError(
                f"not a closed 3-manifold: Euler characteristic {self.euler_characteristic}"
            )
        return self

    def edge_index(self):
        return {e: i for i, e in enumerate(self.edges)}

    def tet_edge_slots(self):
        """Per tetrahedron, the edge indices in 6j slot order (j01, j02, j12, j23, j13, j03)."""
        idx = self.edge_index()
        out = []
        for v0, v1, v2, v3 in self.tets:
            pairs = ((v0, v1), (v0, v2), (v1, v2), (v2, v3), (v1, v3), (v0, v3))
            out.append(tuple(idx[tuple(sorted(p))] for p in pairs))
        return out

    def triangle_edges(self):
        """Per triangle, its three edge indices."""
        idx = self.edge_index()
        return [tuple(idx[p] for p in ((a, b), (a, c), (b, c))) for a, b, c in self.triangles]


def parse_complex(text: str, name: str = "") -> SimplicialComplex3:
    """Parse and validate a triangulation document."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise StructureError("empty triangulation document")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "tets":
        raise StructureError("first line must be 'tets N'")
    try:
        n = int(head[1])
    except ValueError:
        raise StructureError(f"bad tetrahedron count {head[1]!r}") from None
    if n < 1 or len(lines) < 1 + n:
        raise StructureError(f"expected {n} tetrahedron lines")
    tets = []
    for line in lines[1:1 + n]:
        parts = line.split()
        try:
            tets.append(tuple(int(p) for p in parts))
        except ValueError:
            raise StructureError(f"bad tetrahedron line {line!r}") from None
    rest = lines[1 + n:]
    lengths = {}
    if rest:
        if rest[0] != "lengths":
            raise StructureError(f"unexpected line {rest[0]!r}")
        for line in rest[1:]:
            parts = line.replace("→", " ").replace("->", " ").split()
            if len(parts) != 3:
                raise StructureError(f"bad length line {line!r}")
            try:
                u, v, ell = int(parts[0]), int(parts[1]), float(parts[2])
            except ValueError:
                raise StructureError(f"bad length line {line!r}") from None
            if ell <= 0:
                raise StructureError(f"edge length must be positive: {line!r}")
            key = tuple(sorted((u, v)))
            if key in lengths:
                raise StructureError(f"duplicate length for edge {key}")
            lengths[key] = ell
    cx = SimplicialComplex3(tets, lengths, name)
    unknown = [e for e in lengths if e not in set(cx.edges)]
    if unknown:
        raise StructureError(f"lengths given for non-edges {unknown}")
    return cx.require_closed()


def builtin_names():
    return sorted(p.name[:-4] for p in resources.files("tetrasum.data").iterdir()
                  if p.name.endswith(".tri"))


def load_complex(source) -> SimplicialComplex3:
    """Load ``builtin:<name>`` from the bundled catalog, or a file path."""
    source = str(source)
    if source.startswith("builtin:"):
        name = source[len("builtin:"):]
        res = resources.files("tetrasum.data") / f"{name}.tri"
        if not res.is_file():
            raise StructureError(f"unknown builtin complex {name!r}; have {builtin_names()}")
        return parse_complex(res.read_text(), name)
    path = Path(source)
    return parse_complex(path.read_text(), path.stem)
