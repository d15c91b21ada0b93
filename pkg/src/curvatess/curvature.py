"""Exact curvatures of embedded graphs.

All values are :class:`fractions.Fraction` or ``int``; nothing here uses
floating point, so positivity tests are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .maps import EmbeddedMap

__all__ = [
    "VP_PATTERNS",
    "CORNER_VERTEX_PATTERNS",
    "vertex_pattern",
    "face_pattern",
    "combinatorial_curvature",
    "corner_curvature",
    "forman_definitional",
    "forman_formula",
    "edge_mean_curvature",
    "gauss_bonnet_total",
    "positive_corner",
    "CurvatureReport",
    "curvature_report",
]

# degree 4-tuples (two vertex degrees, two face degrees) around an edge of
# positive Forman curvature: all entries >= 3 with sum <= 15
VP_PATTERNS = frozenset({
    (3, 3, 3, 3), (3, 3, 3, 4), (3, 3, 3, 5), (3, 3, 3, 6),
    (3, 3, 4, 4), (3, 3, 4, 5), (3, 4, 4, 4),
})

# vertex patterns allowed when every corner has positive curvature
CORNER_VERTEX_PATTERNS = frozenset({
    (3, 3, 3), (3, 3, 4), (3, 3, 5), (3, 4, 4), (3, 4, 5), (3, 5, 5),
    (4, 4, 4), (4, 4, 5), (4, 5, 5), (5, 5, 5), (3, 3, 3, 3), (3, 3, 3, 3, 3),
})

_HALF = Fraction(1, 2)


def vertex_pattern(m: EmbeddedMap, v: int) -> tuple[int, ...]:
    """Sorted degrees of the faces at the corners of ``v``."""
    return tuple(sorted(len(m.faces[m.face_of[d]]) for d in m.vertices[v]))


def face_pattern(m: EmbeddedMap, f: int) -> tuple[int, ...]:
    """Sorted degrees of the vertices along face ``f``."""
    return tuple(sorted(len(m.vertices[m.vertex_of[d]]) for d in m.faces[f]))


def combinatorial_curvature(m: EmbeddedMap, v: int) -> Fraction:
    """``1 - deg/2 + sum of 1/|face|`` over the corners at ``v``."""
    r = m.vertices[v]
    total = 1 - Fraction(len(r), 2)
    for d in r:
        total += Fraction(1, len(m.faces[m.face_of[d]]))
    return total


def corner_curvature(m: EmbeddedMap, v: int, f: int) -> Fraction:
    if not any(m.face_of[d] == f for d in m.vertices[v]):
        raise ValueError(f"vertex {v} is not on face {f}")
    return Fraction(1, len(m.vertices[v])) + Fraction(1, len(m.faces[f])) - _HALF


def positive_corner(vdeg: int, fdeg: int) -> bool:
    """``1/vdeg + 1/fdeg > 1/2`` in integers."""
    return (vdeg - 2) * (fdeg - 2) < 4


def _edge_sets(m: EmbeddedMap, e: int):
    d = m.edges[e][0]
    a = m.alpha[d]
    verts = {m.vertex_of[d], m.vertex_of[a]}
    faces = {m.face_of[d], m.face_of[a]}
    return verts, faces


def forman_definitional(m: EmbeddedMap, e: int) -> int:
    """Faces of ``e`` plus endpoints of ``e`` minus parallel neighbours (all as sets).

    Another edge is a parallel neighbour when it shares a vertex with ``e``
    or a face with ``e``, but not both.
    """
    verts, faces = _edge_sets(m, e)
    parallel = 0
    for g in range(m.num_edges):
        if g == e:
            continue
        gv, gf = _edge_sets(m, g)
        if bool(verts & gv) != bool(faces & gf):
            parallel += 1
    return len(faces) + len(verts) - parallel


def forman_formula(m: EmbeddedMap, e: int, *, validate: bool = True) -> int:
    """``16`` minus the two endpoint degrees and the two face degrees.

    Valid on tessellations only; ``validate=False`` skips the check when the
    caller already knows.
    """
    if validate:
        from .tessellation import is_tessellation

        if not is_tessellation(m).passed:
            raise ValueError("the degree formula needs a tessellation")
    d = m.edges[e][0]
    a = m.alpha[d]
    return 16 - (
        len(m.vertices[m.vertex_of[d]]) + len(m.vertices[m.vertex_of[a]])
        + len(m.faces[m.face_of[d]]) + len(m.faces[m.face_of[a]])
    )


def edge_mean_curvature(m: EmbeddedMap, e: int) -> Fraction:
    """Sum of ``1/deg`` over the endpoints and faces of ``e``, minus 1."""
    verts, faces = _edge_sets(m, e)
    total = Fraction(-1)
    for v in verts:
        total += Fraction(1, len(m.vertices[v]))
    for f in faces:
        total += Fraction(1, len(m.faces[f]))
    return total


def gauss_bonnet_total(m: EmbeddedMap) -> Fraction:
    return sum((combinatorial_curvature(m, v) for v in range(m.num_vertices)), Fraction(0))


def _frac_json(x):
    return {"num": x.numerator, "den": x.denominator}


@dataclass
class CurvatureReport:
    """Per-element curvatures of one map.

    ``corners`` is keyed by dart: dart ``d`` names the corner of vertex
    ``vertex_of[d]`` inside face ``face_of[d]``.  ``forman`` uses the degree
    formula on tessellations and the definition otherwise; ``forman_def``
    always holds the definitional values.
    """

    vertex_phi: list[Fraction]
    forman: list[int]
    forman_def: list[int]
    corners: list[Fraction]
    edge_psi: list[Fraction]
    total_phi: Fraction
    tessellation: bool
    min_phi: Optional[Fraction] = None
    min_forman: Optional[int] = None
    min_corner: Optional[Fraction] = None
    min_psi: Optional[Fraction] = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        self.min_phi = min(self.vertex_phi, default=None)
        self.min_forman = min(self.forman, default=None)
        self.min_corner = min(self.corners, default=None)
        self.min_psi = min(self.edge_psi, default=None)

    def to_json(self) -> dict:
        return {
            "vertex_phi": [_frac_json(x) for x in self.vertex_phi],
            "forman": list(self.forman),
            "forman_definitional": list(self.forman_def),
            "corner": [_frac_json(x) for x in self.corners],
            "edge_psi": [_frac_json(x) for x in self.edge_psi],
            "total_phi": _frac_json(self.total_phi),
            "min_phi": _frac_json(self.min_phi) if self.min_phi is not None else None,
            "min_forman": self.min_forman,
            "min_corner": _frac_json(self.min_corner) if self.min_corner is not None else None,
            "min_psi": _frac_json(self.min_psi) if self.min_psi is not None else None,
            "tessellation": self.tessellation,
        }


def curvature_report(m: EmbeddedMap) -> CurvatureReport:
    from .tessellation import is_tessellation

    tess = is_tessellation(m).passed
    phi = [combinatorial_curvature(m, v) for v in range(m.num_vertices)]
    fdef = [forman_definitional(m, e) for e in range(m.num_edges)]
    forman = [forman_formula(m, e, validate=False) for e in range(m.num_edges)] if tess else list(fdef)
    corners = [
        Fraction(1, len(m.vertices[m.vertex_of[d]])) + Fraction(1, len(m.faces[m.face_of[d]])) - _HALF
        for d in range(m.dart_count)
    ]
    psi = [edge_mean_curvature(m, e) for e in range(m.num_edges)]
    return CurvatureReport(phi, forman, fdef, corners, psi, sum(phi, Fraction(0)), tess)
