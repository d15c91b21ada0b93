"""Sphere tessellations with positive curvature at every corner."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..canonical import canonical_code
from ..curvature import CORNER_VERTEX_PATTERNS, positive_corner, vertex_pattern
from ..maps import EmbeddedMap, connectivity
from ..tessellation import is_tessellation
from .combos import degree_combination_solutions, filter_combinations
from .growth import GrowthConstraints, grow_maps

__all__ = ["CornerConstraints", "corner_signatures", "generate_corner_candidates"]


@dataclass(frozen=True)
class CornerConstraints:
    min_vertices: int = 4
    max_vertices: int = 12
    vertex_degrees: frozenset = frozenset({3, 4, 5})
    face_degrees: frozenset = frozenset({3, 4, 5})
    allowed_vertex_patterns: frozenset = field(default=CORNER_VERTEX_PATTERNS)
    require_v_le_f: bool = True


def corner_signatures(c: CornerConstraints) -> list[tuple[dict, dict]]:
    """Possible (vertex degree counts, face size counts), from the integer system."""
    sigs = set()
    for sol in filter_combinations(degree_combination_solutions(c.min_vertices, c.max_vertices)):
        vd = {d: k for d, k in sol.vertex_counts.items() if k}
        fd = {d: k for d, k in sol.face_counts.items() if k}
        if set(vd) <= c.vertex_degrees and set(fd) <= c.face_degrees:
            sigs.add((tuple(sorted(vd.items())), tuple(sorted(fd.items()))))
    return [(dict(v), dict(f)) for v, f in sorted(sigs)]


def _admissible(m: EmbeddedMap, c: CornerConstraints) -> bool:
    if c.require_v_le_f and m.num_vertices > m.num_faces:
        return False
    if any(vertex_pattern(m, v) not in c.allowed_vertex_patterns for v in range(m.num_vertices)):
        return False
    return is_tessellation(m).passed


def generate_corner_candidates(c: CornerConstraints = CornerConstraints()) -> list[EmbeddedMap]:
    """Every simple 2-connected sphere tessellation with the allowed patterns.

    One search is run per degree signature; results are deduplicated with
    mirror images identified and sorted by canonical code.
    """
    found = {}
    for vd, fd in corner_signatures(c):
        nv = sum(vd.values())
        g = GrowthConstraints(
            face_sizes=tuple(sorted(fd)),
            max_faces=sum(fd.values()),
            min_degree=min(vd),
            max_degree=max(vd),
            max_vertices=nv,
            face_size_counts=fd,
            vertex_degree_counts=vd,
            corner_ok=positive_corner,
        )
        for m in grow_maps(g):
            if m.num_vertices != nv or not _admissible(m, c):
                continue
            code = canonical_code(m)
            if code not in found and connectivity(m, cap=2) >= 2:
                found[code] = m
    return [found[k] for k in sorted(found)]
