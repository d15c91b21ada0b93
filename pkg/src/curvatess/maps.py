"""Combinatorial maps: graphs cellularly embedded in an oriented surface.

A map is a pair of permutations on darts (directed half-edges):

* ``sigma`` sends a dart to the next dart counter-clockwise around its
  source vertex;
* ``alpha`` sends a dart to its reversal.

Vertices are the orbits of ``sigma``, edges the orbits of ``alpha`` and
faces the orbits of ``phi = sigma o alpha`` (apply ``alpha`` first).
All derived structure is computed once at construction; maps never change
afterwards.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Mapping, Sequence

__all__ = [
    "EmbeddedMap",
    "MapError",
    "build_map",
    "faces",
    "euler_characteristic",
    "connectivity",
]


class MapError(ValueError):
    """Raised when permutation data or rotation lists do not describe a map."""


class EmbeddedMap:
    """Immutable rotation system.

    Vertices, edges and faces are numbered by their smallest dart, and each
    vertex rotation / face walk starts at that dart.  For maps produced by
    :func:`build_map` this means vertex ``i`` is the ``i``-th listed vertex
    and its rotation starts at the first listed neighbour.
    """

    __slots__ = (
        "sigma",
        "alpha",
        "vertex_of",
        "edge_of",
        "face_of",
        "vertices",
        "edges",
        "faces",
        "_sigma_inv",
        "_hash",
    )

    def __init__(self, sigma: Sequence[int], alpha: Sequence[int]):
        sigma = tuple(sigma)
        alpha = tuple(alpha)
        n = len(sigma)
        if len(alpha) != n:
            raise MapError("sigma and alpha must act on the same darts")
        if n % 2:
            raise MapError("dart count must be even")
        if sorted(sigma) != list(range(n)):
            raise MapError("sigma is not a permutation")
        for d, e in enumerate(alpha):
            if not 0 <= e < n or e == d or alpha[e] != d:
                raise MapError("alpha must be a fixed-point-free involution")
        self.sigma = sigma
        self.alpha = alpha
        inv = [0] * n
        for d, e in enumerate(sigma):
            inv[e] = d
        self._sigma_inv = tuple(inv)

        self.vertex_of, self.vertices = _orbits(n, sigma.__getitem__)
        self.edge_of, self.edges = _orbits(n, alpha.__getitem__)
        self.face_of, self.faces = _orbits(n, lambda d: sigma[alpha[d]])
        self._hash = None
        if n and not self._is_connected():
            raise MapError("map is not connected")

    # -- basic counts -------------------------------------------------------

    @property
    def dart_count(self) -> int:
        return len(self.sigma)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    @property
    def sigma_inv(self) -> tuple[int, ...]:
        return self._sigma_inv

    def phi(self, d: int) -> int:
        """Next dart along the face walk through ``d``."""
        return self.sigma[self.alpha[d]]

    def source(self, d: int) -> int:
        return self.vertex_of[d]

    def target(self, d: int) -> int:
        return self.vertex_of[self.alpha[d]]

    def vertex_degree(self, v: int) -> int:
        return len(self.vertices[v])

    def face_degree(self, f: int) -> int:
        return len(self.faces[f])

    def vertex_degrees(self) -> list[int]:
        return [len(r) for r in self.vertices]

    def face_degrees(self) -> list[int]:
        return [len(w) for w in self.faces]

    def edge_ends(self, e: int) -> tuple[int, int]:
        d = self.edges[e][0]
        return self.vertex_of[d], self.vertex_of[self.alpha[d]]

    def edge_faces(self, e: int) -> tuple[int, int]:
        d = self.edges[e][0]
        return self.face_of[d], self.face_of[self.alpha[d]]

    def face_vertices(self, f: int) -> list[int]:
        """Vertices along the boundary walk of ``f`` (with repetitions)."""
        return [self.vertex_of[d] for d in self.faces[f]]

    def face_edges(self, f: int) -> list[int]:
        return [self.edge_of[d] for d in self.faces[f]]

    def corner_face(self, d: int) -> int:
        """Face lying in the corner between ``sigma^-1(d)`` and ``d``."""
        return self.face_of[d]

    def neighbors(self, v: int) -> list[int]:
        """Neighbours of ``v`` in counter-clockwise rotation order."""
        return [self.vertex_of[self.alpha[d]] for d in self.vertices[v]]

    def rotations(self) -> list[list[int]]:
        return [self.neighbors(v) for v in range(self.num_vertices)]

    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces

    @property
    def is_simple(self) -> bool:
        seen = set()
        for d in range(0, self.dart_count):
            if d > self.alpha[d]:
                continue
            u, w = self.vertex_of[d], self.vertex_of[self.alpha[d]]
            if u == w:
                return False
            key = (u, w) if u < w else (w, u)
            if key in seen:
                return False
            seen.add(key)
        return True

    def is_regular(self, k: int) -> bool:
        return all(len(r) == k for r in self.vertices)

    # -- derived maps -------------------------------------------------------

    def mirror(self) -> "EmbeddedMap":
        """Mirror image: every rotation reversed."""
        return EmbeddedMap(self._sigma_inv, self.alpha)

    def relabel(self, perm: Sequence[int]) -> "EmbeddedMap":
        """Return the same map with dart ``d`` renamed ``perm[d]``."""
        n = self.dart_count
        sigma = [0] * n
        alpha = [0] * n
        for d in range(n):
            sigma[perm[d]] = perm[self.sigma[d]]
            alpha[perm[d]] = perm[self.alpha[d]]
        return EmbeddedMap(sigma, alpha)

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmbeddedMap):
            return NotImplemented
        return self.sigma == other.sigma and self.alpha == other.alpha

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.sigma, self.alpha))
        return self._hash

    def __repr__(self) -> str:
        return (
            f"EmbeddedMap(V={self.num_vertices}, E={self.num_edges}, "
            f"F={self.num_faces})"
        )

    def _is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for e in (self.sigma[d], self.alpha[d]):
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        return len(seen) == self.dart_count


def _orbits(n, step):
    owner = [-1] * n
    orbits = []
    for d in range(n):
        if owner[d] >= 0:
            continue
        idx = len(orbits)
        cycle = []
        e = d
        while owner[e] < 0:
            owner[e] = idx
            cycle.append(e)
            e = step(e)
        orbits.append(tuple(cycle))
    return tuple(owner), tuple(orbits)


def build_map(
    rotations: Mapping[object, Sequence[object]] | Sequence[Sequence[int]],
    simple: bool = True,
) -> EmbeddedMap:
    """Build a map from counter-clockwise neighbour lists.

    ``rotations`` is either a mapping ``vertex -> neighbours`` (any hashable
    labels, insertion order fixes the vertex numbering) or a list whose
    ``i``-th entry lists the neighbours of vertex ``i``.

    With ``simple=False`` repeated neighbours are allowed; the ``k``-th
    occurrence of ``w`` around ``v`` is paired with the ``k``-th occurrence
    of ``v`` around ``w`` counted backwards, which is the planar convention
    for a bundle of parallel edges.
    """
    if isinstance(rotations, Mapping):
        names = list(rotations)
        index = {name: i for i, name in enumerate(names)}
        try:
            lists = [[index[w] for w in rotations[name]] for name in names]
        except KeyError as exc:
            raise MapError(f"unknown neighbour {exc.args[0]!r}") from None
    else:
        lists = [list(r) for r in rotations]
        nv = len(lists)
        for r in lists:
            for w in r:
                if not 0 <= w < nv:
                    raise MapError(f"neighbour index {w} out of range")

    offsets = []
    total = 0
    for r in lists:
        offsets.append(total)
        total += len(r)
    sigma = [0] * total
    for v, r in enumerate(lists):
        k = len(r)
        for i in range(k):
            sigma[offsets[v] + i] = offsets[v] + (i + 1) % k

    # occurrence positions of w in the rotation of v
    slots: dict[tuple[int, int], list[int]] = {}
    for v, r in enumerate(lists):
        for i, w in enumerate(r):
            if w == v:
                raise MapError(f"loop at vertex {v}")
            slots.setdefault((v, w), []).append(offsets[v] + i)

    alpha = [-1] * total
    for (v, w), darts in slots.items():
        back = slots.get((w, v), [])
        if len(back) != len(darts):
            raise MapError(f"asymmetric adjacency between {v} and {w}")
        if simple and len(darts) > 1:
            raise MapError(f"repeated neighbour {w} around vertex {v}")
        for d, e in zip(darts, reversed(back)):
            alpha[d] = e
    if total == 0:
        raise MapError("empty rotation system")
    return EmbeddedMap(sigma, alpha)


def faces(m: EmbeddedMap) -> list[tuple[int, ...]]:
    """Face boundary walks as dart cycles."""
    return list(m.faces)


def euler_characteristic(m: EmbeddedMap) -> int:
    return m.euler_characteristic()


def _adjacency(m: EmbeddedMap) -> list[set[int]]:
    adj = [set() for _ in range(m.num_vertices)]
    for d in range(m.dart_count):
        u, w = m.vertex_of[d], m.vertex_of[m.alpha[d]]
        if u != w:
            adj[u].add(w)
    return adj


def _connected_without(adj: list[set[int]], removed: frozenset[int]) -> bool:
    alive = [v for v in range(len(adj)) if v not in removed]
    if len(alive) <= 1:
        return True
    seen = {alive[0]}
    queue = deque([alive[0]])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen and w not in removed:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(alive)


def connectivity(m: EmbeddedMap, cap: int = 4) -> int:
    """Vertex connectivity of the underlying graph, capped at ``cap``.

    A complete graph on ``n`` vertices counts as ``(n-1)``-connected.
    """
    adj = _adjacency(m)
    n = len(adj)
    for k in range(cap):
        if k >= n - 1:
            return k
        for cut in combinations(range(n), k):
            if not _connected_without(adj, frozenset(cut)):
                return k
    return cap


def dart_cycles(perm: Sequence[int]) -> list[list[int]]:
    """Cycles of a permutation given as a sequence."""
    seen = [False] * len(perm)
    out = []
    for d in range(len(perm)):
        if seen[d]:
            continue
        cyc = []
        e = d
        while not seen[e]:
            seen[e] = True
            cyc.append(e)
            e = perm[e]
        out.append(cyc)
    return out


def from_face_gluing(phi: Sequence[int], alpha: Iterable[int]) -> EmbeddedMap:
    """Map from a face permutation and an edge pairing (``sigma = phi o alpha``)."""
    alpha = tuple(alpha)
    sigma = [phi[alpha[d]] for d in range(len(alpha))]
    return EmbeddedMap(sigma, alpha)
