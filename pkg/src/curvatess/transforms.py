"""Dual, medial and inverse-medial constructions."""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import CanonicalCode, Isomorphism, Mode, are_isomorphic, canonical_code
from .maps import EmbeddedMap, MapError

__all__ = [
    "TransformError",
    "DualPair",
    "FaceBipartition",
    "dual",
    "medial",
    "face_two_coloring",
    "inverse_medial",
    "is_self_dual",
]


class TransformError(ValueError):
    pass


@dataclass(frozen=True)
class FaceBipartition:
    first: frozenset
    second: frozenset


@dataclass(frozen=True)
class DualPair:
    primal: EmbeddedMap
    dual: EmbeddedMap
    self_dual: bool
    source: CanonicalCode


def dual(m: EmbeddedMap) -> EmbeddedMap:
    """Faces become vertices; the rotation at a new vertex is the old face walk reversed.

    Face walks run clockwise around the face they bound, so the reversal
    keeps the orientation.  Applying it twice gives a relabelled copy of the
    original map.
    """
    sinv, alpha = m.sigma_inv, m.alpha
    return EmbeddedMap([alpha[sinv[d]] for d in range(m.dart_count)], alpha)


def medial(m: EmbeddedMap) -> EmbeddedMap:
    """One vertex per edge, one edge per corner.

    Dart ``x`` of ``m`` (with its successor ``sigma(x)``) yields the medial
    edge from the midpoint of ``x``'s edge to the midpoint of ``sigma(x)``'s
    edge, as darts ``2x`` (forward) and ``2x+1`` (backward).
    """
    if m.num_edges and min(m.vertex_degrees()) < 2:
        raise TransformError("medial graphs need minimum degree 2")
    n = m.dart_count
    sigma, alpha, sinv = m.sigma, m.alpha, m.sigma_inv
    s = [0] * (2 * n)
    a = [0] * (2 * n)
    for x in range(n):
        s[2 * x] = 2 * sinv[x] + 1
        s[2 * x + 1] = 2 * alpha[sigma[x]]
        a[2 * x] = 2 * x + 1
        a[2 * x + 1] = 2 * x
    return EmbeddedMap(s, a)


def face_two_coloring(m: EmbeddedMap) -> FaceBipartition:
    """Split the faces of a 4-regular map into the two classes of opposite corners.

    At every vertex the faces in opposite corners are related; the classes
    of the generated equivalence are returned, the one holding face 0 first.
    """
    if not m.is_regular(4):
        raise TransformError("face 2-colouring needs a 4-regular map")
    parent = list(range(m.num_faces))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    fo = m.face_of
    for r in m.vertices:
        for i in (0, 1):
            a, b = find(fo[r[i]]), find(fo[r[i + 2]])
            if a != b:
                parent[max(a, b)] = min(a, b)
    roots = sorted({find(f) for f in range(m.num_faces)})
    if len(roots) != 2:
        raise TransformError(f"opposite-corner relation has {len(roots)} classes, not 2")
    first = frozenset(f for f in range(m.num_faces) if find(f) == roots[0])
    second = frozenset(range(m.num_faces)) - first
    for d in range(m.dart_count):
        if (fo[d] in first) == (fo[m.alpha[d]] in first):
            raise TransformError("faces across an edge share a colour")
    return FaceBipartition(first, second)


def _from_class(h: EmbeddedMap, cls: frozenset) -> EmbeddedMap:
    """Graph whose vertices are the faces in ``cls`` and whose edges are h's vertices."""
    darts = [y for y in range(h.dart_count) if h.face_of[y] in cls]
    index = {y: i for i, y in enumerate(darts)}
    sigma, alpha, sinv = h.sigma, h.alpha, h.sigma_inv
    rot = [0] * len(darts)
    rev = [0] * len(darts)
    for y in darts:
        # the face walk runs clockwise around the new vertex, so step backwards
        rot[index[y]] = index[alpha[sinv[y]]]
        rev[index[y]] = index[sigma[sigma[y]]]
    try:
        return EmbeddedMap(rot, rev)
    except MapError as exc:
        raise TransformError(str(exc)) from None


def inverse_medial(h: EmbeddedMap) -> DualPair:
    """The dual pair whose common medial graph is ``h``.

    The primal is the member with the smaller canonical code.
    """
    parts = face_two_coloring(h)
    g1 = _from_class(h, parts.first)
    g2 = _from_class(h, parts.second)
    c1, c2 = canonical_code(g1), canonical_code(g2)
    if c2 < c1:
        g1, g2, c1, c2 = g2, g1, c2, c1
    return DualPair(g1, g2, c1 == c2, canonical_code(h))


def is_self_dual(m: EmbeddedMap) -> bool:
    return are_isomorphic(m, dual(m)) is not Isomorphism.NONE
