"""Projective-plane maps, handled through their sphere double covers.

A map on the projective plane is stored as a sphere map together with an
orientation-reversing involution (the deck transformation) that moves every
vertex, edge and face.  The quotient's incidences are read off the orbit
pairs; no non-orientable rotation system is ever built.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .canonical import MapAutomorphism, automorphism_group
from .codecs import to_planar_code
from .maps import EmbeddedMap
from .tessellation import TessellationReport, check_incidence

__all__ = [
    "QuotientError",
    "QuotientMap",
    "antipodal_involutions",
    "quotient",
    "quotient_is_tessellation",
    "classify_rp2",
]


class QuotientError(ValueError):
    pass


def _moves_everything(m: EmbeddedMap, perm) -> bool:
    """For a reversing ``perm``: no vertex, edge or face is mapped to itself."""
    for d in range(m.dart_count):
        e = perm[d]
        if (m.vertex_of[e] == m.vertex_of[d] or m.edge_of[e] == m.edge_of[d]
                or _face_image(m, perm, d) == m.face_of[d]):
            return False
    return True


def _face_image(m: EmbeddedMap, perm, d: int) -> int:
    # a reversing automorphism sends the walk through d to a reversed walk,
    # which runs along the other side of each edge
    return m.face_of[m.alpha[perm[d]]]


def _is_involution(perm) -> bool:
    return all(perm[perm[d]] == d for d in range(len(perm)))


def antipodal_involutions(m: EmbeddedMap, group=None) -> list[MapAutomorphism]:
    """Orientation-reversing involutive automorphisms fixing no vertex, edge or face."""
    group = automorphism_group(m) if group is None else group
    return [g for g in group
            if g.orientation == -1 and _is_involution(g.perm) and _moves_everything(m, g.perm)]


class QuotientMap:
    """Sphere cover plus deck involution, with the quotient incidences."""

    def __init__(self, cover: EmbeddedMap, deck: MapAutomorphism):
        if deck.orientation != -1:
            raise QuotientError("the deck transformation must reverse orientation")
        if not _is_involution(deck.perm):
            raise QuotientError("the deck transformation must be an involution")
        if not _moves_everything(cover, deck.perm):
            raise QuotientError("the deck transformation fixes a vertex, edge or face")
        self.cover = cover
        self.deck = deck

        def pair_index(orbits, image):
            out = [-1] * len(orbits)
            k = 0
            for x, orbit in enumerate(orbits):
                if out[x] < 0:
                    out[x] = out[image(orbit[0])] = k
                    k += 1
            return out

        perm = deck.perm
        self.vertex_class = pair_index(cover.vertices, lambda d: cover.vertex_of[perm[d]])
        self.edge_class = pair_index(cover.edges, lambda d: cover.edge_of[perm[d]])
        self.face_class = pair_index(cover.faces, lambda d: _face_image(cover, perm, d))

    @property
    def num_vertices(self) -> int:
        return self.cover.num_vertices // 2

    @property
    def num_edges(self) -> int:
        return self.cover.num_edges // 2

    @property
    def num_faces(self) -> int:
        return self.cover.num_faces // 2

    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces

    def _representatives(self, cls, n):
        rep = [-1] * n
        for x, k in enumerate(cls):
            if rep[k] < 0:
                rep[k] = x
        return rep

    def vertex_degrees(self) -> list[int]:
        rep = self._representatives(self.vertex_class, self.num_vertices)
        return [self.cover.vertex_degree(v) for v in rep]

    def face_degrees(self) -> list[int]:
        rep = self._representatives(self.face_class, self.num_faces)
        return [self.cover.face_degree(f) for f in rep]

    def face_vertices(self) -> list[list[int]]:
        rep = self._representatives(self.face_class, self.num_faces)
        c = self.cover
        return [[self.vertex_class[v] for v in c.face_vertices(f)] for f in rep]

    def face_edges(self) -> list[list[int]]:
        rep = self._representatives(self.face_class, self.num_faces)
        c = self.cover
        return [[self.edge_class[e] for e in c.face_edges(f)] for f in rep]

    def edge_ends(self) -> list[tuple[int, int]]:
        rep = self._representatives(self.edge_class, self.num_edges)
        c = self.cover
        return [tuple(self.vertex_class[v] for v in c.edge_ends(e)) for e in rep]

    def edge_faces(self) -> list[tuple[int, int]]:
        rep = self._representatives(self.edge_class, self.num_edges)
        c = self.cover
        return [tuple(self.face_class[f] for f in c.edge_faces(e)) for e in rep]

    def adjacency(self) -> list[list[int]]:
        """Neighbour lists of the quotient graph (as multisets, unordered)."""
        out = [[] for _ in range(self.num_vertices)]
        for u, w in self.edge_ends():
            out[u].append(w)
            out[w].append(u)
        return [sorted(x) for x in out]

    def combinatorial_curvatures(self) -> list[Fraction]:
        from .curvature import combinatorial_curvature

        rep = self._representatives(self.vertex_class, self.num_vertices)
        return [combinatorial_curvature(self.cover, v) for v in rep]

    def to_json(self) -> dict:
        return {
            "cover": to_planar_code(self.cover).hex(),
            "deck": list(self.deck.perm),
            "orientation": "reversing",
            "counts": {"V": self.num_vertices, "E": self.num_edges, "F": self.num_faces},
            "adjacency": self.adjacency(),
        }

    def __repr__(self) -> str:
        return f"QuotientMap(V={self.num_vertices}, E={self.num_edges}, F={self.num_faces})"


def quotient(m: EmbeddedMap, involution: MapAutomorphism) -> QuotientMap:
    return QuotientMap(m, involution)


def quotient_is_tessellation(q: QuotientMap, strict: bool = True) -> TessellationReport:
    """Axioms on the quotient incidences.

    Face intersections are read literally by default: two quotient faces
    may meet in nothing, one vertex or one closed edge.  The weaker sphere
    reading would admit the hemi-cuboctahedron (two squares meeting in two
    opposite corners).
    """
    return check_incidence(q.vertex_degrees(), q.face_vertices(), q.face_edges(),
                           q.edge_ends(), q.edge_faces(), strict)


def _conjugate(g: MapAutomorphism, t: MapAutomorphism) -> tuple:
    return g.compose(t).compose(g.inverse()).perm


def classify_rp2(sphere_catalog: Iterable[EmbeddedMap], positivity: str = "forman") -> list[QuotientMap]:
    """Projective-plane tessellations doubly covered by catalog members.

    Curvature positivity carries over from the cover because degrees are
    deck-invariant.  Deck transformations conjugate under the cover's
    automorphisms give isomorphic quotients and are reported once.
    """
    if positivity not in ("forman", "corner"):
        raise ValueError(f"unknown positivity {positivity!r}")
    out = []
    for m in sphere_catalog:
        group = automorphism_group(m)
        classes = []
        for t in antipodal_involutions(m, group):
            if any(t.perm in cls for cls in classes):
                continue
            classes.append({_conjugate(g, t) for g in group})
            q = quotient(m, t)
            if quotient_is_tessellation(q).passed:
                out.append(q)
    return out
