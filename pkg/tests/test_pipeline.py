import json
from fractions import Fraction as Q

import pytest

from catalogs import corner, forman
from curvatess.canonical import canonical_code
from curvatess.curvature import positive_corner, vertex_pattern
from curvatess.generate.quadrangulations import QuadConstraints, generate_quadrangulations
from curvatess.maps import connectivity
from curvatess.pipeline import load_catalog, report, save_catalog, worker_count
from curvatess.polyhedra import antiprism, cube, cycle, dodecahedron, icosahedron, prism, pyramid, tetrahedron
from curvatess.tessellation import is_tessellation
from curvatess.transforms import dual, medial


def test_forman_counts():
    c = forman()
    assert c.stats["sphere_classes"] == len(c.records) == 116
    assert c.stats["medial_graphs"] == 73
    assert c.stats["self_dual_pairs"] == 30
    assert c.rp2 == []


def test_forman_names_and_duals():
    c = forman()
    names = [r.name for r in c.records]
    assert len(set(names)) == 116
    for r in c.records:
        twin = c.by_name(r.dual_name)
        assert canonical_code(twin.map) == canonical_code(dual(r.map))
        assert (r.dual_name == r.name) == r.self_dual
        assert r.name.startswith(f"FC-S2-E{r.num_edges}-")
        assert f"V{r.num_vertices}" in r.name
    codes = [r.code for r in c.records]
    assert codes == sorted(codes)


def test_forman_membership():
    c = forman()
    quads = {canonical_code(q) for q in generate_quadrangulations(QuadConstraints())}
    for r in c.records:
        m = r.map
        assert is_tessellation(m).passed
        assert r.summary["min_forman"] > 0
        assert r.summary["total_phi"] == {"num": 2, "den": 1}
        h = medial(m)
        assert h.num_vertices <= 24
        assert canonical_code(dual(h)) in quads


def test_connectivity_two():
    two = sorted((r.num_edges, r.num_vertices) for r in forman().records if r.connectivity == 2)
    assert two == [(10, 6), (12, 7), (12, 7), (13, 7), (13, 8)]


def test_named_members():
    got = {canonical_code(r.map) for r in forman().records}
    for m in (tetrahedron(), cube(), dual(cube()), prism(3), pyramid(6), antiprism(4), dual(antiprism(4))):
        assert canonical_code(m) in got
    for m in (antiprism(5), dodecahedron(), prism(6)):
        assert canonical_code(m) not in got


def test_corner_catalog():
    c = corner()
    assert c.stats["generated"] == 13
    sd = sorted((r.num_edges, r.num_vertices) for r in c.self_dual_records())
    assert sd == [(6, 4), (8, 5), (10, 6)]
    for r in c.records:
        m = r.map
        assert is_tessellation(m).passed
        assert set(m.vertex_degrees()) <= {3, 4, 5} and set(m.face_degrees()) <= {3, 4, 5}
        assert all(positive_corner(m.vertex_degree(m.vertex_of[d]), m.face_degree(m.face_of[d]))
                   for d in range(m.dart_count))
    assert sorted(canonical_code(r.quotient.cover) for r in c.rp2) == \
        sorted([canonical_code(icosahedron()), canonical_code(dodecahedron())])
    assert {(r.num_vertices, r.num_edges, r.num_faces) for r in c.rp2} == {(6, 15, 10), (10, 15, 6)}
    assert {r.dual_name for r in c.rp2} == {r.name for r in c.rp2}


def test_closure_under_duals_gives_even_excess():
    """Self-dual members count once and the rest pair up, so the total has the parity of the self-dual count."""
    c = corner()
    assert (len(c.records) - len(c.self_dual_records())) % 2 == 0


def test_catalog_deterministic():
    from curvatess.pipeline import classify_forman

    a = json.dumps(forman().to_json(), sort_keys=True)
    b = json.dumps(classify_forman().to_json(), sort_keys=True)
    assert a == b


def test_save_and_load(tmp_path):
    jp, pp = save_catalog(corner(), tmp_path)
    assert jp.name == "corner_catalog.json" and pp.read_bytes().startswith(b">>planar_code<<")
    back = load_catalog(jp)
    assert [n for n, _ in back] == [r.name for r in corner().records]
    assert [canonical_code(m) for _, m in back] == [r.code for r in corner().records]
    data = json.loads(jp.read_text())
    assert data["rp2"][0]["quotient"]["orientation"] == "reversing"


def test_report_examples():
    r = report(cube())
    assert r["map"]["tessellation"]["passed"]
    assert r["map"]["curvature"]["min_forman"] == 2
    assert r["map"]["curvature"]["total_phi"] == {"num": 2, "den": 1}
    p = report(prism(7), with_dual=True)
    assert Q(p["map"]["curvature"]["min_phi"]["num"], p["map"]["curvature"]["min_phi"]["den"]) > 0
    assert p["dual"]["curvature"]["min_phi"] == {"num": -1, "den": 6}
    c4 = report(cycle(4), with_medial=True)
    assert not c4["map"]["tessellation"]["passed"]
    assert c4["map"]["curvature"]["forman_definitional"] == [3, 3, 3, 3]
    assert "medial" in c4


def test_worker_count(monkeypatch):
    monkeypatch.setenv("CURVATESS_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("CURVATESS_THREADS", "many")
    assert worker_count() == 1
