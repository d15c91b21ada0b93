"""Orderly growth of planar maps by gluing polygons around vertices.

The search builds a surface with boundary out of polygons.  Vertices are
*fans*: maximal runs of polygon corners already glued around a point.  A
fan is either closed (a complete vertex) or a path with one open dart
leaving it (its out-end) and one open dart entering it (its in-end).

At every step the incomplete vertex owning the smallest corner label is
extended at its out-end ``s`` by

* gluing ``s`` to the first side of a brand-new polygon, or
* gluing ``s`` to another open dart on the same boundary component.

Only same-component gluings are tried, so genus stays 0 and every closed
result is a sphere.  The labelled state determines every choice, hence each
rooted map (root = dart 0, the first side of polygon 0) is produced exactly
once.  The first vertex completed is the root vertex; once it is closed no
vertex may exceed its degree, so only rootings at maximum-degree vertices
survive.

All constraints checked on partial states are monotone: degrees only grow,
fans only merge, and an edge present in a partial state persists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from ..maps import EmbeddedMap, from_face_gluing

__all__ = ["GrowthConstraints", "grow_maps"]


@dataclass
class GrowthConstraints:
    """Bounds for :func:`grow_maps`.

    ``face_ok(size, degrees)`` receives the size of a polygon and the
    current (lower-bound) degrees of its corners; ``corner_ok(vdeg, fdeg)``
    receives a vertex degree lower bound and a face size.  Both must be
    monotone: once false they stay false as degrees grow.
    """

    face_sizes: tuple[int, ...] = (4,)
    max_faces: int = 12
    min_degree: int = 2
    max_degree: int = 255
    max_vertices: Optional[int] = None
    face_size_counts: Optional[dict[int, int]] = None
    vertex_degree_counts: Optional[dict[int, int]] = None
    face_ok: Optional[Callable[[int, list[int]], bool]] = None
    corner_ok: Optional[Callable[[int, int], bool]] = None
    leaf_ok: Optional[Callable[[EmbeddedMap], bool]] = field(default=None)
    bipartite: bool = False


class _State:
    __slots__ = (
        "phi", "phi_inv", "alpha", "poly", "poly_start", "poly_size",
        "parent", "size", "in_end", "out_end", "nxt", "open_count",
        "closed", "undo", "faces_by_size", "complete_by_deg",
        "n_complete",
    )

    def __init__(self):
        self.phi = []
        self.phi_inv = []
        self.alpha = []
        self.poly = []
        self.poly_start = []
        self.poly_size = []
        self.parent = []
        self.size = []
        self.in_end = []
        self.out_end = []
        self.nxt = []
        self.closed = []
        self.open_count = 0
        self.undo = []
        self.faces_by_size = {}
        self.complete_by_deg = {}
        self.n_complete = 0

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x


def grow_maps(c: GrowthConstraints) -> Iterator[EmbeddedMap]:
    """Yield every rooted sphere map meeting ``c`` (one per valid rooting).

    Rootings not at a maximum-degree vertex are suppressed, so each
    isomorphism class appears at least once and usually a handful of times;
    callers deduplicate by canonical code.
    """
    for k0 in sorted(c.face_sizes):
        if c.face_size_counts is not None and c.face_size_counts.get(k0, 0) == 0:
            continue
        st = _State()
        _add_polygon(st, k0)
        if not _polys_ok(st, c, [0]):
            continue
        yield from _search(st, c, 0, None)


def _add_polygon(st: _State, k: int) -> int:
    base = len(st.phi)
    pid = len(st.poly_start)
    st.poly_start.append(base)
    st.poly_size.append(k)
    for i in range(k):
        d = base + i
        st.phi.append(base + (i + 1) % k)
        st.phi_inv.append(base + (i - 1) % k)
        st.alpha.append(-1)
        st.poly.append(pid)
        st.parent.append(d)
        st.size.append(1)
        st.in_end.append(base + (i - 1) % k)
        st.out_end.append(d)
        st.nxt.append(d)
        st.closed.append(False)
    st.open_count += k
    st.faces_by_size[k] = st.faces_by_size.get(k, 0) + 1
    return base


def _remove_polygon(st: _State, k: int) -> None:
    for lst in (st.phi, st.phi_inv, st.alpha, st.poly, st.parent, st.size,
                st.in_end, st.out_end, st.nxt, st.closed):
        del lst[-k:]
    st.poly_start.pop()
    st.poly_size.pop()
    st.open_count -= k
    st.faces_by_size[k] -= 1


def _union(st: _State, a: int, b: int) -> int:
    """Join fan ``a`` (its out-end is glued) with fan ``b`` (its in-end is glued).

    Returns the resulting root.  When ``a == b`` the fan closes.
    """
    if a == b:
        st.closed[a] = True
        st.undo.append((0, a))
        return a
    in_end = st.in_end[a]
    out_end = st.out_end[b]
    if st.size[a] < st.size[b]:
        a, b = b, a
    # b hangs under a
    st.undo.append((1, a, b, st.in_end[a], st.out_end[a]))
    st.parent[b] = a
    st.size[a] += st.size[b]
    st.in_end[a] = in_end
    st.out_end[a] = out_end
    nxt = st.nxt
    nxt[a], nxt[b] = nxt[b], nxt[a]
    return a


def _rollback(st: _State, mark: int) -> None:
    undo = st.undo
    while len(undo) > mark:
        rec = undo.pop()
        if rec[0] == 0:
            st.closed[rec[1]] = False
        else:
            _, a, b, ie, oe = rec
            nxt = st.nxt
            nxt[a], nxt[b] = nxt[b], nxt[a]
            st.size[a] -= st.size[b]
            st.parent[b] = b
            st.in_end[a] = ie
            st.out_end[a] = oe


def _glue(st: _State, s: int, t: int) -> list[int]:
    """Pair open darts ``s`` and ``t``; returns the roots that changed."""
    st.alpha[s] = t
    st.alpha[t] = s
    st.open_count -= 2
    r1 = _union(st, st.find(t), st.find(st.phi[s]))
    r2 = _union(st, st.find(s), st.find(st.phi[t]))
    r1 = st.find(r1)
    return [r1] if r1 == r2 else [r1, r2]


def _members(st: _State, r: int):
    nxt = st.nxt
    x = r
    while True:
        yield x
        x = nxt[x]
        if x == r:
            return


def _fan_ok(st: _State, r: int) -> bool:
    """No loop and no forced multi-edge at fan ``r``."""
    find = st.find
    alpha = st.alpha
    phi = st.phi
    slots = {}
    for c in _members(st, r):
        y = find(phi[c])
        if y == r:
            return False
        rec = slots.get(y)
        if rec is None:
            rec = slots[y] = [0, 0, 0]
        if alpha[c] >= 0:
            rec[0] += 1
        else:
            rec[1] += 1
    if not st.closed[r]:
        y = find(st.in_end[r])
        if y == r:
            return False
        rec = slots.get(y)
        if rec is None:
            rec = slots[y] = [0, 0, 0]
        rec[2] += 1
    for g, a, b in slots.values():
        if g + (a if a > b else b) > 1:
            return False
    return True


def _polys_ok(st: _State, c: GrowthConstraints, pids) -> bool:
    if c.face_ok is None and c.corner_ok is None:
        return True
    find = st.find
    size = st.size
    for pid in pids:
        base = st.poly_start[pid]
        k = st.poly_size[pid]
        degs = [size[find(base + i)] for i in range(k)]
        if c.corner_ok is not None:
            for dv in degs:
                if not c.corner_ok(dv, k):
                    return False
        if c.face_ok is not None and not c.face_ok(k, degs):
            return False
    return True


def _check(st: _State, c: GrowthConstraints, roots, rootdeg) -> bool:
    size = st.size
    limit = c.max_degree if rootdeg is None else min(rootdeg, c.max_degree)
    pids = set()
    for r in roots:
        if size[r] > limit:
            return False
        if not _fan_ok(st, r):
            return False
        if st.closed[r]:
            if size[r] < c.min_degree:
                return False
        for x in _members(st, r):
            pids.add(st.poly[x])
    return _polys_ok(st, c, pids)


def _complete_count_ok(st: _State, c: GrowthConstraints, roots) -> bool:
    """Account closed fans; returns False if a vertex budget is exceeded."""
    for r in roots:
        if st.closed[r]:
            st.n_complete += 1
            d = st.size[r]
            st.complete_by_deg[d] = st.complete_by_deg.get(d, 0) + 1
    if c.max_vertices is not None and st.n_complete > c.max_vertices:
        return False
    if c.vertex_degree_counts is not None:
        for r in roots:
            if st.closed[r]:
                d = st.size[r]
                if st.complete_by_deg[d] > c.vertex_degree_counts.get(d, 0):
                    return False
    return True


def _uncount(st: _State, roots) -> None:
    for r in roots:
        if st.closed[r]:
            st.n_complete -= 1
            st.complete_by_deg[st.size[r]] -= 1


def _emit(st: _State, c: GrowthConstraints):
    if c.face_size_counts is not None:
        for k, n in c.face_size_counts.items():
            if st.faces_by_size.get(k, 0) != n:
                return None
    m = from_face_gluing(st.phi, st.alpha)
    if c.leaf_ok is not None and not c.leaf_ok(m):
        return None
    return m


def _root_key_ok(st: _State, ptr: int) -> bool:
    """Dart 0 must maximise (deg head, deg next corner, ...) among the root's darts.

    Corners 1, 2, 3 of polygon 0 close in that order; once corner ``j`` is
    closed its degree bounds the matching corner of every other root dart
    whose earlier corners tie.
    """
    find = st.find
    size = st.size
    closed = st.closed
    phi = st.phi
    depth = min(ptr, st.poly_size[0]) - 1
    key = [size[find(j)] for j in range(1, depth + 1)]
    for x in _members(st, find(0)):
        y = x
        for j in range(depth):
            y = phi[y]
            r = find(y)
            if size[r] > key[j]:
                return False
            if not closed[r] or size[r] < key[j]:
                break
    return True


def _search(st: _State, c: GrowthConstraints, ptr: int, rootdeg):
    if st.open_count == 0:
        m = _emit(st, c)
        if m is not None:
            yield m
        return
    find = st.find
    n = len(st.phi)
    while ptr < n and st.closed[find(ptr)]:
        ptr += 1
    r = find(ptr)
    if rootdeg is None and ptr > 0:
        rootdeg = st.size[find(0)]
    elif ptr > 1 and rootdeg is not None and not _root_key_ok(st, ptr):
        return
    s = st.out_end[r]

    # boundary component through s
    comp = []
    d = s
    while True:
        d = st.out_end[find(st.phi[d])]
        if d == s:
            break
        comp.append(d)
    if c.bipartite:
        # every boundary walk of a bipartite map is even: keep odd offsets only
        comp = comp[::2]

    # glue to an existing open dart
    for t in comp:
        mark = len(st.undo)
        roots = _glue(st, s, t)
        if _check(st, c, roots, rootdeg):
            if _complete_count_ok(st, c, roots):
                yield from _search(st, c, ptr, rootdeg)
            _uncount(st, roots)
        _rollback(st, mark)
        st.alpha[s] = -1
        st.alpha[t] = -1
        st.open_count += 2

    # glue to a new polygon
    nfaces = len(st.poly_start)
    if nfaces >= c.max_faces:
        return
    for k in c.face_sizes:
        if c.face_size_counts is not None and st.faces_by_size.get(k, 0) >= c.face_size_counts.get(k, 0):
            continue
        base = _add_polygon(st, k)
        mark = len(st.undo)
        roots = _glue(st, s, base)
        if _check(st, c, roots, rootdeg) and _polys_ok(st, c, [nfaces]):
            if _complete_count_ok(st, c, roots):
                yield from _search(st, c, ptr, rootdeg)
            _uncount(st, roots)
        _rollback(st, mark)
        st.alpha[s] = -1
        st.alpha[base] = -1
        st.open_count += 2
        _remove_polygon(st, k)
