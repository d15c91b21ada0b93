"""The two classification pipelines, catalog records, naming and persistence."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .canonical import CanonicalCode, Mode, canonical_code
from .codecs import from_planar_code, to_planar_code
from .curvature import curvature_report, forman_definitional, forman_formula, positive_corner
from .generate.corner import CornerConstraints, generate_corner_candidates
from .generate.quadrangulations import QuadConstraints, generate_quadrangulations
from .maps import EmbeddedMap, connectivity
from .projective import QuotientMap, classify_rp2
from .tessellation import is_tessellation
from .transforms import dual, face_two_coloring, inverse_medial, medial

__all__ = [
    "PipelineAssertion",
    "ClassRecord",
    "Catalog",
    "classify_forman",
    "classify_corner",
    "report",
    "save_catalog",
    "load_catalog",
    "worker_count",
    "TOOL_VERSION",
]

TOOL_VERSION = "0.1.0"


class PipelineAssertion(AssertionError):
    """A fact the pipeline relies on did not hold; this is a bug, not data."""


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise PipelineAssertion(what)


def worker_count() -> int:
    """Workers requested through ``CURVATESS_THREADS``; the pipelines run serially."""
    try:
        return max(1, int(os.environ.get("CURVATESS_THREADS", "1")))
    except ValueError:
        return 1


def _frac(x):
    return None if x is None else {"num": x.numerator, "den": x.denominator}


@dataclass
class ClassRecord:
    name: str
    map: EmbeddedMap
    surface: str
    dual_name: str
    self_dual: bool
    connectivity: int
    code: CanonicalCode
    summary: dict = field(default_factory=dict)
    quotient: Optional[QuotientMap] = None

    @property
    def num_vertices(self) -> int:
        return self.quotient.num_vertices if self.quotient else self.map.num_vertices

    @property
    def num_edges(self) -> int:
        return self.quotient.num_edges if self.quotient else self.map.num_edges

    @property
    def num_faces(self) -> int:
        return self.quotient.num_faces if self.quotient else self.map.num_faces

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "surface": self.surface,
            "dual_name": self.dual_name,
            "self_dual": self.self_dual,
            "connectivity": self.connectivity,
            "counts": {"V": self.num_vertices, "E": self.num_edges, "F": self.num_faces},
            "code": self.code.hex(),
            "summary": self.summary,
        }
        if self.quotient is not None:
            out["quotient"] = self.quotient.to_json()
        else:
            out["planar_code"] = to_planar_code(self.map, header=False).hex()
        return out


@dataclass
class Catalog:
    positivity: str
    records: list[ClassRecord]
    rp2: list[ClassRecord]
    provenance: dict
    stats: dict = field(default_factory=dict)

    def by_name(self, name: str) -> ClassRecord:
        for r in self.records + self.rp2:
            if r.name == name:
                return r
        raise KeyError(name)

    def edge_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for r in self.records:
            hist[r.num_edges] = hist.get(r.num_edges, 0) + 1
        return dict(sorted(hist.items()))

    def self_dual_records(self) -> list[ClassRecord]:
        return [r for r in self.records if r.self_dual]

    def to_json(self) -> dict:
        return {
            "positivity": self.positivity,
            "provenance": self.provenance,
            "stats": self.stats,
            "records": [r.to_json() for r in self.records],
            "rp2": [r.to_json() for r in self.rp2],
        }


def _summary(m: EmbeddedMap) -> dict:
    rep = curvature_report(m)
    return {
        "min_phi": _frac(rep.min_phi),
        "min_forman": rep.min_forman,
        "min_corner": _frac(rep.min_corner),
        "total_phi": _frac(rep.total_phi),
    }


def _quotient_summary(q: QuotientMap) -> dict:
    phis = q.combinatorial_curvatures()
    return {"min_phi": _frac(min(phis)), "total_phi": _frac(sum(phis, Fraction(0)))}


def _name_pairs(prefix: str, pairs) -> dict:
    """Names for dual pairs ``(primal, dual, self_dual)``, keyed by canonical code.

    Pairs are numbered from 1 within each edge count in order of the
    primal's canonical code.  ``V`` is each member's own vertex count.
    """
    by_edges: dict[int, list] = {}
    for p in pairs:
        by_edges.setdefault(p[0].num_edges, []).append(p)
    names = {}
    for e, group in by_edges.items():
        group.sort(key=lambda p: canonical_code(p[0]))
        for j, (g, h, sd) in enumerate(group, 1):
            base = f"{prefix}-E{e}-{j}"
            primal = f"{base}V{g.num_vertices}"
            if sd:
                names[canonical_code(g)] = (primal, primal, g)
            else:
                twin = f"{base}V{h.num_vertices}Dual"
                names[canonical_code(g)] = (primal, twin, g)
                names[canonical_code(h)] = (twin, primal, h)
    return names


def _records(prefix: str, pairs, surface: str = "S2") -> list[ClassRecord]:
    names = _name_pairs(prefix, pairs)
    out = []
    for code in sorted(names):
        name, twin, m = names[code]
        out.append(ClassRecord(name, m, surface, twin, name == twin,
                               connectivity(m, cap=4), code, _summary(m)))
    return out


def _rp2_records(prefix: str, sphere: list[ClassRecord], positivity: str) -> list[ClassRecord]:
    quotients = classify_rp2([r.map for r in sphere], positivity)
    for q in quotients:
        _require(is_tessellation(q.cover).passed, "a quotient tessellation has a non-tessellation cover")
        _require(q.euler_characteristic() == 1, "quotient Euler characteristic is not 1")
    by_cover = {canonical_code(q.cover): q for q in quotients}
    code_of = {id(q): c for c, q in by_cover.items()}
    # pair each quotient with the quotient of the dual cover
    dual_name_of = {r.code: r.dual_name for r in sphere}
    name_code = {r.name: r.code for r in sphere}
    pairs = []
    done = set()
    for c in sorted(by_cover):
        if c in done:
            continue
        twin = name_code.get(dual_name_of.get(c))
        done.add(c)
        if twin in by_cover and twin != c:
            done.add(twin)
            a, b = sorted([c, twin])
            pairs.append((by_cover[a], by_cover[b], False))
        else:
            pairs.append((by_cover[c], by_cover[c], twin == c))
    by_edges: dict[int, list] = {}
    for p in pairs:
        by_edges.setdefault(p[0].num_edges, []).append(p)
    out = []
    for e, group in sorted(by_edges.items()):
        for j, (q1, q2, sd) in enumerate(group, 1):
            n1 = f"{prefix}-RP2-E{e}-{j}V{q1.num_vertices}"
            n2 = n1 if q1 is q2 else f"{prefix}-RP2-E{e}-{j}V{q2.num_vertices}Dual"
            for q, name, twin in ((q1, n1, n2), (q2, n2, n1)) if q1 is not q2 else ((q1, n1, n1),):
                out.append(ClassRecord(name, q.cover, "RP2", twin, sd, connectivity(q.cover, cap=4),
                                       code_of[id(q)], _quotient_summary(q), q))
    return out


def _check_forman_member(g: EmbeddedMap) -> bool:
    """Tessellation with positive Forman curvature on every edge (formula checked against the definition)."""
    if not is_tessellation(g).passed:
        return False
    ok = True
    for e in range(g.num_edges):
        f = forman_formula(g, e)
        _require(f == forman_definitional(g, e), f"Forman formula and definition disagree on edge {e}")
        ok = ok and f > 0
    return ok


def classify_forman(constraints: QuadConstraints = QuadConstraints()) -> Catalog:
    """Sphere and projective-plane tessellations with positive Forman curvature.

    Each candidate quadrangulation is dualized to a 4-regular map, which is
    split back into the dual pair it is the medial graph of.
    """
    quads = generate_quadrangulations(constraints)
    pairs = []
    seen = set()
    medials = set()
    for q in quads:
        h = dual(q)
        _require(h.is_regular(4), "dual of a quadrangulation is not 4-regular")
        _require(is_tessellation(h).passed, "dual of a candidate quadrangulation is not a tessellation")
        face_two_coloring(h)
        pair = inverse_medial(h)
        if not (_check_forman_member(pair.primal) and _check_forman_member(pair.dual)):
            continue
        c = canonical_code(pair.primal)
        if c in seen:
            continue
        seen.add(c)
        seen.add(canonical_code(pair.dual))
        medials.add(canonical_code(h))
        pairs.append((pair.primal, pair.dual, pair.self_dual))
    records = _records("FC-S2", pairs)
    names = [r.name[len("FC-S2"):] for r in records]
    _require(len(set(names)) == len(names), "duplicate record names")
    rp2 = _rp2_records("FC", records, "forman")
    stats = {
        "quadrangulations": len(quads),
        "medial_graphs": len(medials),
        "self_dual_pairs": sum(1 for p in pairs if p[2]),
        "sphere_classes": len(records),
        "rp2_classes": len(rp2),
    }
    prov = {"tool_version": TOOL_VERSION, "positivity": "forman",
            "constraints": {"max_faces": constraints.max_faces,
                            "face_patterns": sorted(map(list, constraints.allowed_face_patterns or []))}}
    return Catalog("forman", records, rp2, prov, stats)


def _all_corners_positive(m: EmbeddedMap) -> bool:
    return all(positive_corner(len(m.vertices[m.vertex_of[d]]), len(m.faces[m.face_of[d]]))
               for d in range(m.dart_count))


def classify_corner(constraints: CornerConstraints = CornerConstraints()) -> Catalog:
    """Sphere and projective-plane tessellations with positive corner curvature."""
    generated = generate_corner_candidates(constraints)
    pairs = []
    seen = set()
    for g in generated:
        _require(_all_corners_positive(g), "a generated candidate has a non-positive corner")
        h = dual(g)
        _require(_all_corners_positive(h) and is_tessellation(h).passed,
                 "the dual of a corner candidate leaves the class")
        cg, ch = canonical_code(g), canonical_code(h)
        if cg in seen:
            continue
        seen.update((cg, ch))
        if ch < cg:
            g, h = h, g
        pairs.append((g, h, cg == ch))
    records = _records("CC-S2", pairs)
    rp2 = _rp2_records("CC", records, "corner")
    stats = {
        "generated": len(generated),
        "self_dual": sum(1 for p in pairs if p[2]),
        "sphere_classes": len(records),
        "rp2_classes": len(rp2),
    }
    prov = {"tool_version": TOOL_VERSION, "positivity": "corner",
            "constraints": {"vertices": [constraints.min_vertices, constraints.max_vertices],
                            "vertex_degrees": sorted(constraints.vertex_degrees),
                            "face_degrees": sorted(constraints.face_degrees)}}
    return Catalog("corner", records, rp2, prov, stats)


def report(m: EmbeddedMap, with_dual: bool = False, with_medial: bool = False) -> dict:
    """Curvature and tessellation report, optionally for the dual and medial too."""
    def one(x):
        return {
            "counts": {"V": x.num_vertices, "E": x.num_edges, "F": x.num_faces},
            "curvature": curvature_report(x).to_json(),
            "tessellation": is_tessellation(x).to_json(),
        }

    out = {"map": one(m)}
    if with_dual:
        out["dual"] = one(dual(m))
    if with_medial:
        out["medial"] = one(medial(m))
    return out


def save_catalog(catalog: Catalog, directory, stem: Optional[str] = None) -> tuple[Path, Path]:
    """Write ``<stem>.json`` and the planar_code sidecar ``<stem>.pc``."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    stem = stem or f"{catalog.positivity}_catalog"
    jp = d / f"{stem}.json"
    pp = d / f"{stem}.pc"
    jp.write_text(json.dumps(catalog.to_json(), indent=1, sort_keys=True) + "\n")
    pp.write_bytes(to_planar_code([r.map for r in catalog.records]))
    return jp, pp


def load_catalog(path) -> list[tuple[str, EmbeddedMap]]:
    """Names and sphere maps stored in a catalog JSON file."""
    data = json.loads(Path(path).read_text())
    out = []
    for r in data["records"]:
        (m,) = from_planar_code(bytes.fromhex(r["planar_code"]))
        out.append((r["name"], m))
    return out
