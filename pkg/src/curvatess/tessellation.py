"""Tessellation axioms for finite embedded graphs.

A closed face counts as a disk when its boundary walk repeats no vertex and
no edge.  The compact-cover axiom is automatic for finite maps.

Two readings of the face-intersection axiom are offered.  The strict one
demands that two closed faces meet in nothing, one vertex or one closed
edge; on the sphere this forces 3-connectivity.  The default one only
forbids two faces sharing more than one edge, i.e. it asks the dual to be
simple.  Together with the other checks it says that the map and its dual
are both simple and 2-connected, which is the class the classifications
are computed in (and which contains a handful of 2-connected members).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .maps import EmbeddedMap

__all__ = [
    "AXIOMS",
    "Violation",
    "TessellationReport",
    "Intersection",
    "face_closure_intersection",
    "is_tessellation",
    "check_incidence",
]

AXIOMS = (
    "disk_face",
    "two_faces_per_edge",
    "intersection",
    "min_vertex_degree",
    "min_face_degree",
    "simplicity",
)


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "witness": list(self.witness)}


@dataclass
class TessellationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    def axioms_failed(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def to_json(self) -> dict:
        return {"passed": self.passed, "violations": [v.to_json() for v in self.violations]}


@dataclass(frozen=True)
class Intersection:
    """``kind`` is ``empty``, ``one_vertex``, ``one_edge`` or ``violation``."""

    kind: str
    element: Optional[int] = None
    vertices: tuple = ()
    edges: tuple = ()


def _classify(fv1, fe1, fv2, fe2, edge_ends) -> Intersection:
    vs = tuple(sorted(set(fv1) & set(fv2)))
    es = tuple(sorted(set(fe1) & set(fe2)))
    if not vs and not es:
        return Intersection("empty")
    if not es and len(vs) == 1:
        return Intersection("one_vertex", vs[0], vs)
    if len(es) == 1 and set(vs) == set(edge_ends(es[0])):
        return Intersection("one_edge", es[0], vs, es)
    return Intersection("violation", None, vs, es)


def _walk_simple(fv, fe) -> bool:
    return len(set(fv)) == len(fv) and len(set(fe)) == len(fe)


def face_closure_intersection(m: EmbeddedMap, f1: int, f2: int) -> Intersection:
    """How the closures of two distinct faces meet."""
    if f1 == f2:
        raise ValueError("faces must differ")
    fv1, fe1 = m.face_vertices(f1), m.face_edges(f1)
    fv2, fe2 = m.face_vertices(f2), m.face_edges(f2)
    if not (_walk_simple(fv1, fe1) and _walk_simple(fv2, fe2)):
        return Intersection("violation", None)
    return _classify(fv1, fe1, fv2, fe2, m.edge_ends)


def check_incidence(
    vertex_degrees: Sequence[int],
    face_vertices: Sequence[Sequence[int]],
    face_edges: Sequence[Sequence[int]],
    edge_ends: Sequence[tuple[int, int]],
    edge_faces: Sequence[tuple[int, int]],
    strict: bool = False,
) -> TessellationReport:
    """Evaluate the axioms on bare incidence data (also used for quotients)."""
    out = []
    for f, (fv, fe) in enumerate(zip(face_vertices, face_edges)):
        if not _walk_simple(fv, fe):
            out.append(Violation("disk_face", (f,)))
    for e, (f1, f2) in enumerate(edge_faces):
        if f1 == f2:
            out.append(Violation("two_faces_per_edge", (e,)))
    # only faces sharing a vertex can meet
    at_vertex: dict[int, set[int]] = {}
    for f, fv in enumerate(face_vertices):
        for v in fv:
            at_vertex.setdefault(v, set()).add(f)
    pairs = set()
    for fs in at_vertex.values():
        s = sorted(fs)
        for i, a in enumerate(s):
            for b in s[i + 1:]:
                pairs.add((a, b))
    for a, b in sorted(pairs):
        if not strict:
            if len(set(face_edges[a]) & set(face_edges[b])) > 1:
                out.append(Violation("intersection", (a, b)))
            continue
        r = _classify(face_vertices[a], face_edges[a], face_vertices[b], face_edges[b],
                      edge_ends.__getitem__)
        if r.kind == "violation":
            out.append(Violation("intersection", (a, b)))
    for v, d in enumerate(vertex_degrees):
        if d < 3:
            out.append(Violation("min_vertex_degree", (v,)))
    for f, fv in enumerate(face_vertices):
        if len(fv) < 3:
            out.append(Violation("min_face_degree", (f,)))
    seen = {}
    for e, (u, w) in enumerate(edge_ends):
        if u == w:
            out.append(Violation("simplicity", (e,)))
            continue
        key = (min(u, w), max(u, w))
        if key in seen:
            out.append(Violation("simplicity", (seen[key], e)))
        else:
            seen[key] = e
    return TessellationReport(out)


def is_tessellation(m: EmbeddedMap, strict: bool = False) -> TessellationReport:
    """All axioms; ``strict`` selects the literal face-intersection reading."""
    return check_incidence(
        m.vertex_degrees(),
        [m.face_vertices(f) for f in range(m.num_faces)],
        [m.face_edges(f) for f in range(m.num_faces)],
        [m.edge_ends(e) for e in range(m.num_edges)],
        [m.edge_faces(e) for e in range(m.num_edges)],
        strict,
    )
