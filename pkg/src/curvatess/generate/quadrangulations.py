"""Sphere quadrangulations: seeds, local expansions and the exhaustive generator."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from ..canonical import canonical_code
from ..maps import EmbeddedMap, MapError, build_map, connectivity
from .growth import GrowthConstraints, grow_maps

__all__ = [
    "VP_PATTERNS",
    "QuadConstraints",
    "ExpansionError",
    "pseudo_double_wheel",
    "cycle_map",
    "expansion_sites",
    "apply_expansion",
    "expansion_closure",
    "generate_quadrangulations",
    "face_pattern",
]

# every 4-tuple with entries >= 3 and sum <= 15
VP_PATTERNS = frozenset({
    (3, 3, 3, 3), (3, 3, 3, 4), (3, 3, 3, 5), (3, 3, 3, 6),
    (3, 3, 4, 4), (3, 3, 4, 5), (3, 4, 4, 4),
})

EXPANSION_KINDS = ("face_vertex", "split_vertex", "inset_square")


class ExpansionError(ValueError):
    pass


@dataclass(frozen=True)
class QuadConstraints:
    """Which quadrangulations to generate.

    ``allowed_face_patterns`` holds sorted 4-tuples of vertex degrees; ``None``
    means no restriction.
    """

    max_faces: int = 24
    allowed_face_patterns: Optional[frozenset] = VP_PATTERNS
    require_simple: bool = True
    require_two_connected: bool = True

    def __post_init__(self):
        if self.max_faces < 2:
            raise ValueError("max_faces must be at least 2")
        if self.allowed_face_patterns is not None:
            pats = frozenset(tuple(p) for p in self.allowed_face_patterns)
            for p in pats:
                if len(p) != 4 or list(p) != sorted(p):
                    raise ValueError(f"face pattern {p} must be a sorted 4-tuple")
            object.__setattr__(self, "allowed_face_patterns", pats)


def face_pattern(m: EmbeddedMap, f: int) -> tuple[int, ...]:
    return tuple(sorted(m.vertex_degree(v) for v in m.face_vertices(f)))


def cycle_map(n: int) -> EmbeddedMap:
    """The ``n``-cycle on the sphere (two faces of degree ``n``)."""
    return build_map([[(i - 1) % n, (i + 1) % n] for i in range(n)])


def pseudo_double_wheel(p: int) -> EmbeddedMap:
    """Rim ``0..2p-1``, hub ``2p`` on even rim vertices, hub ``2p+1`` on odd ones."""
    if p < 3:
        raise ValueError("pseudo-double wheels need p >= 3")
    n = 2 * p
    top, bottom = n, n + 1
    rot = []
    for i in range(n):
        hub = top if i % 2 == 0 else bottom
        # the rim runs counter-clockwise seen from the top hub
        rot.append([(i + 1) % n, top, (i - 1) % n] if hub == top else [(i - 1) % n, bottom, (i + 1) % n])
    rot.append(list(range(0, n, 2)))
    rot.append(list(range(n - 1, 0, -2)))
    return build_map(rot)


# -- expansions ---------------------------------------------------------------


def _insert_after(lst: list, anchor, item) -> None:
    lst.insert(lst.index(anchor) + 1, item)


def expansion_sites(m: EmbeddedMap, kind: str) -> list:
    """Every legal site for ``kind`` (see :func:`apply_expansion`)."""
    if kind == "face_vertex":
        return [(f, k) for f in range(m.num_faces) for k in (0, 1)]
    if kind == "inset_square":
        return list(range(m.num_faces))
    if kind == "split_vertex":
        return [(v, i, j) for v in range(m.num_vertices)
                for i in range(m.vertex_degree(v)) for j in range(m.vertex_degree(v)) if i != j]
    raise ExpansionError(f"unknown expansion {kind!r}")


def apply_expansion(m: EmbeddedMap, kind: str, site) -> EmbeddedMap:
    """Grow a quadrangulation locally.

    * ``face_vertex``, site ``(f, k)``: a new degree-2 vertex inside face ``f``
      joined to its corners ``k`` and ``k+2`` (one face becomes two).
    * ``split_vertex``, site ``(v, i, j)``: vertex ``v`` with neighbours
      ``a``, ``b`` at rotation positions ``i`` and ``j`` is cut into two
      vertices, one keeping the neighbours from ``a`` to ``b`` and the other
      those from ``b`` round to ``a``; the new face is ``a v b v'``.
    * ``inset_square``, site ``f``: a smaller square is placed inside ``f``
      and each of its corners is joined to the matching corner of ``f``
      (one face becomes five).
    """
    if any(len(w) != 4 for w in m.faces):
        raise ExpansionError("expansions apply to quadrangulations only")
    rot = m.rotations()
    n = len(rot)
    if kind == "face_vertex":
        f, k = site
        if not 0 <= f < m.num_faces or k not in (0, 1):
            raise ExpansionError(f"illegal face_vertex site {site!r}")
        w = m.face_vertices(f)
        a, b = w[k], w[k + 2]
        # corner of f at a lies after w[k-1], at b after w[k+1]
        _insert_after(rot[a], w[k - 1], n)
        _insert_after(rot[b], w[k + 1], n)
        rot.append([a, b])
    elif kind == "split_vertex":
        v, i, j = site
        if not 0 <= v < n:
            raise ExpansionError(f"no vertex {v}")
        d = len(rot[v])
        if not (0 <= i < d and 0 <= j < d) or i == j:
            raise ExpansionError(f"illegal split_vertex site {site!r}")
        r = rot[v]
        a, b = r[i], r[j]
        keep = [r[(i + t) % d] for t in range((j - i) % d + 1)]
        move = [r[(j + t) % d] for t in range((i - j) % d + 1)]
        rot[v] = keep
        rot.append(move)
        for x in move[1:-1]:
            rot[x][rot[x].index(v)] = n
        _insert_after(rot[a], v, n)
        rot[b].insert(rot[b].index(v), n)
    elif kind == "inset_square":
        f = site
        if not 0 <= f < m.num_faces:
            raise ExpansionError(f"no face {f}")
        w = m.face_vertices(f)
        for k in range(4):
            _insert_after(rot[w[k]], w[k - 1], n + k)
        for k in range(4):
            rot.append([w[k], n + (k - 1) % 4, n + (k + 1) % 4])
    else:
        raise ExpansionError(f"unknown expansion {kind!r}")
    try:
        out = build_map(rot)
    except MapError as exc:
        raise ExpansionError(str(exc)) from None
    if out.euler_characteristic() != 2 or any(len(w) != 4 for w in out.faces):
        raise ExpansionError("expansion did not produce a sphere quadrangulation")
    return out


def expansion_closure(
    seeds: Iterable[EmbeddedMap],
    kinds: Iterable[str],
    max_faces: int,
    keep=None,
) -> list[EmbeddedMap]:
    """All maps reachable from ``seeds`` by expansions within ``max_faces``.

    ``keep`` (optional predicate) decides which results are expanded further
    and reported.  Sorted by canonical code.
    """
    kinds = tuple(kinds)
    found = {}
    frontier = []
    for s in seeds:
        if s.num_faces <= max_faces and (keep is None or keep(s)):
            c = canonical_code(s)
            if c not in found:
                found[c] = s
                frontier.append(s)
    while frontier:
        nxt = []
        for m in frontier:
            for kind in kinds:
                for site in expansion_sites(m, kind):
                    grow = {"face_vertex": 1, "split_vertex": 1, "inset_square": 4}[kind]
                    if m.num_faces + grow > max_faces:
                        continue
                    q = apply_expansion(m, kind, site)
                    if keep is not None and not keep(q):
                        continue
                    c = canonical_code(q)
                    if c not in found:
                        found[c] = q
                        nxt.append(q)
        frontier = nxt
    return [found[c] for c in sorted(found)]


# -- exhaustive generator -------------------------------------------------------


def _dominated(patterns):
    """Monotone test: can corners with these lower-bound degrees still fit a pattern?"""
    pats = sorted(patterns)

    def ok(k, degs):
        cur = sorted(degs)
        return any(all(c <= p for c, p in zip(cur, pat)) for pat in pats)

    return ok


def generate_quadrangulations(constraints: QuadConstraints) -> list[EmbeddedMap]:
    """Every simple sphere quadrangulation meeting ``constraints``, one per class.

    Mirror images count as the same class.  Sorted by canonical code.
    """
    c = constraints
    pats = c.allowed_face_patterns
    if pats is not None and not pats:
        return []
    kw = dict(face_sizes=(4,), max_faces=c.max_faces, max_vertices=c.max_faces + 2,
              bipartite=True)
    if pats is None:
        kw.update(min_degree=2)
    else:
        kw.update(min_degree=max(2, min(p[0] for p in pats)),
                  max_degree=max(p[3] for p in pats),
                  face_ok=_dominated(pats))
    found = {}
    for m in grow_maps(GrowthConstraints(**kw)):
        if pats is not None and any(face_pattern(m, f) not in pats for f in range(m.num_faces)):
            continue
        code = canonical_code(m)
        if code in found:
            continue
        if c.require_two_connected and connectivity(m, cap=2) < 2:
            continue
        found[code] = m
    return [found[k] for k in sorted(found)]
