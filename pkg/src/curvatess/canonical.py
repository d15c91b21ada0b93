"""Canonical codes, isomorphism tests and automorphism groups of maps.

The canonical code is the lexicographically smallest breadth-first word
over all starting darts (and, in ``OP_OR`` mode, over both orientations).
Vertices are numbered in the order they are reached; each vertex record is
``[255 - degree, neighbour numbers...]`` read around the vertex starting at
the dart it was entered by.  Starting a record with ``255 - degree`` makes
the minimum start at a vertex of maximum degree, which is what lets the
search skip most starting darts.  For non-simple maps every neighbour
number is followed by the position of the reverse dart in the neighbour's
rotation, since numbers alone no longer identify the edge.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .maps import EmbeddedMap

__all__ = [
    "Mode",
    "Isomorphism",
    "CanonicalCode",
    "MapAutomorphism",
    "canonical_code",
    "are_isomorphic",
    "automorphism_group",
]


class Mode(enum.Enum):
    OP = "OP"
    OP_OR = "OP_OR"


class Isomorphism(enum.Enum):
    OP = "OP"
    OR_ONLY = "OR-only"
    NONE = "none"


@dataclass(frozen=True, order=True)
class CanonicalCode:
    mode: str
    bytes: bytes

    def hex(self) -> str:
        return self.bytes.hex()


@dataclass(frozen=True)
class MapAutomorphism:
    """Dart permutation commuting with ``alpha``.

    ``orientation`` is ``+1`` when ``sigma`` is conjugated to itself and
    ``-1`` when it is conjugated to ``sigma^-1``.
    """

    perm: tuple[int, ...]
    orientation: int

    @property
    def preserving(self) -> bool:
        return self.orientation == 1

    def __call__(self, d: int) -> int:
        return self.perm[d]

    def compose(self, other: "MapAutomorphism") -> "MapAutomorphism":
        """``self o other``."""
        return MapAutomorphism(
            tuple(self.perm[other.perm[d]] for d in range(len(self.perm))),
            self.orientation * other.orientation,
        )

    def inverse(self) -> "MapAutomorphism":
        inv = [0] * len(self.perm)
        for d, e in enumerate(self.perm):
            inv[e] = d
        return MapAutomorphism(tuple(inv), self.orientation)

    def is_identity(self) -> bool:
        return all(d == e for d, e in enumerate(self.perm))


def _word(m: EmbeddedMap, rot, start, best, simple):
    """BFS word from ``start``; ``None`` once it is known to exceed ``best``."""
    alpha = m.alpha
    vertex_of = m.vertex_of
    vertices = m.vertices
    label = {vertex_of[start]: 1}
    entry = [start]
    word = []
    append = word.append
    # while ``tied`` the word equals a prefix of ``best``
    tied = best is not None
    nb = len(best) if tied else 0
    i = 0
    while i < len(entry):
        d = entry[i]
        deg = len(vertices[vertex_of[d]])
        rec = [255 - deg]
        for _ in range(deg):
            a = alpha[d]
            w = vertex_of[a]
            lw = label.get(w)
            if lw is None:
                lw = len(entry) + 1
                label[w] = lw
                entry.append(a)
            rec.append(lw)
            if not simple:
                # position of the reverse dart around w, from w's entry dart
                e = entry[lw - 1]
                k = 0
                while e != a:
                    e = rot[e]
                    k += 1
                rec.append(k)
            d = rot[d]
        if tied:
            p = len(word)
            q = p + len(rec)
            if q > nb:
                return None
            ref = best[p:q]
            if rec > ref:
                return None
            if rec < ref:
                tied = False
        word.extend(rec)
        i += 1
    if tied and len(word) < nb:
        return None
    return word


def _candidates(m: EmbeddedMap, simple: bool) -> list[int]:
    maxdeg = max(len(r) for r in m.vertices)
    darts = [d for r in m.vertices if len(r) == maxdeg for d in r]
    if simple:
        # the record of the second vertex starts with its degree
        best = max(len(m.vertices[m.vertex_of[m.alpha[d]]]) for d in darts)
        darts = [d for d in darts if len(m.vertices[m.vertex_of[m.alpha[d]]]) == best]
    return darts


def _min_word(m: EmbeddedMap, rots, simple):
    best = None
    for rot in rots:
        for d in _candidates(m, simple):
            w = _word(m, rot, d, best, simple)
            if w is not None:
                best = w
    return best


def canonical_code(m: EmbeddedMap, mode: Mode | str = Mode.OP_OR) -> CanonicalCode:
    """Canonical byte string; equal for two maps iff they are isomorphic."""
    mode = Mode(mode)
    simple = m.is_simple
    rots = [m.sigma] if mode is Mode.OP else [m.sigma, m.sigma_inv]
    word = _min_word(m, rots, simple)
    head = bytes([0 if simple else 1])
    n = m.num_vertices
    if simple and n <= 255:
        body = bytes(word)
    else:
        body = b"".join(x.to_bytes(2, "big") for x in word)
    return CanonicalCode(mode.value, head + body)


def are_isomorphic(a: EmbeddedMap, b: EmbeddedMap) -> Isomorphism:
    if (a.num_vertices, a.num_edges, a.num_faces) != (b.num_vertices, b.num_edges, b.num_faces):
        return Isomorphism.NONE
    if canonical_code(a, Mode.OP) == canonical_code(b, Mode.OP):
        return Isomorphism.OP
    if canonical_code(a, Mode.OP_OR) == canonical_code(b, Mode.OP_OR):
        return Isomorphism.OR_ONLY
    return Isomorphism.NONE


def _extend(m: EmbeddedMap, rot_image, d0: int, e0: int):
    """Dart map with ``d0 -> e0`` commuting with alpha and sending sigma to ``rot_image``."""
    n = m.dart_count
    f = [-1] * n
    f[d0] = e0
    stack = [d0]
    sigma, alpha = m.sigma, m.alpha
    while stack:
        d = stack.pop()
        fd = f[d]
        for x, y in ((sigma[d], rot_image[fd]), (alpha[d], alpha[fd])):
            if f[x] < 0:
                f[x] = y
                stack.append(x)
            elif f[x] != y:
                return None
    if len(set(f)) != n:
        return None
    return tuple(f)


def automorphism_group(m: EmbeddedMap) -> list[MapAutomorphism]:
    """All map automorphisms, orientation-preserving ones first."""
    out = []
    d0 = 0
    deg0 = len(m.vertices[m.vertex_of[d0]])
    for orient, rot in ((1, m.sigma), (-1, m.sigma_inv)):
        for e in range(m.dart_count):
            if len(m.vertices[m.vertex_of[e]]) != deg0:
                continue
            f = _extend(m, rot, d0, e)
            if f is not None:
                out.append(MapAutomorphism(f, orient))
    return out
