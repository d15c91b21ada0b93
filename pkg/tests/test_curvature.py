from fractions import Fraction as Q

import pytest
from hypothesis import given, settings

from curvatess.curvature import (
    VP_PATTERNS, combinatorial_curvature, corner_curvature, curvature_report, edge_mean_curvature, face_pattern,
    forman_definitional, forman_formula, gauss_bonnet_total, positive_corner, vertex_pattern,
)
from curvatess.polyhedra import antiprism, bipyramid, cube, cycle, icosahedron, prism, star
from curvatess.transforms import medial
from oracles import forman_from_incidences, incidences_from_face_list
from strategies import sphere_maps


def test_patterns():
    assert vertex_pattern(cube(), 0) == (4, 4, 4)
    assert vertex_pattern(antiprism(4), 0) == (3, 3, 3, 4)
    assert face_pattern(cube(), 0) == (3, 3, 3, 3)


def test_medial_vertex_pattern_lists_edge_degrees():
    m = prism(5)
    h = medial(m)
    for x in range(m.dart_count):
        e = m.edge_of[x]
        u, w = m.edge_ends(e)
        f, g = m.edge_faces(e)
        want = tuple(sorted((m.vertex_degree(u), m.vertex_degree(w), m.face_degree(f), m.face_degree(g))))
        assert vertex_pattern(h, h.vertex_of[2 * x]) == want


def test_combinatorial_curvature_values():
    assert combinatorial_curvature(icosahedron(), 0) == Q(1, 6)
    bp = bipyramid(7)
    apexes = [v for v in range(bp.num_vertices) if bp.vertex_degree(v) == 7]
    assert len(apexes) == 2
    assert all(combinatorial_curvature(bp, v) == Q(-1, 6) for v in apexes)


def _phi_of_pattern(p):
    return 1 - Q(len(p), 2) + sum(Q(1, k) for k in p)


def test_pattern_minima():
    assert _phi_of_pattern((3, 4, 4, 4)) == Q(1, 12)
    assert min(_phi_of_pattern(p) for p in VP_PATTERNS) == Q(1, 12)
    assert _phi_of_pattern((3, 3, 5, 5)) == Q(1, 15)


@pytest.mark.parametrize("v, f, want", [(3, 3, Q(1, 6)), (4, 4, Q(0)), (3, 5, Q(1, 30))])
def test_corner_values(v, f, want):
    assert Q(1, v) + Q(1, f) - Q(1, 2) == want
    assert positive_corner(v, f) == (want > 0)


def test_corner_curvature_on_map():
    m = cube()
    v = 0
    f = m.face_of[m.vertices[v][0]]
    assert corner_curvature(m, v, f) == Q(1, 12)
    far = next(g for g in range(m.num_faces) if v not in m.face_vertices(g))
    with pytest.raises(ValueError):
        corner_curvature(m, v, far)


def test_positive_corner_rule():
    for v in range(3, 9):
        for f in range(3, 9):
            assert positive_corner(v, f) == (min(v, f) == 3 and max(v, f) <= 5)


def test_forman_on_non_tessellations():
    m = cycle(4)
    assert [forman_definitional(m, e) for e in range(m.num_edges)] == [3] * 4
    for n in range(1, 6):
        s = star(n)
        assert [forman_definitional(s, e) for e in range(s.num_edges)] == [3] * n


def test_cube_forman_both_routes():
    m = cube()
    assert [forman_definitional(m, e) for e in range(12)] == [2] * 12
    assert [forman_formula(m, e) for e in range(12)] == [2] * 12
    # independent count from the face list alone
    faces = [(3, 2, 1, 0), (4, 5, 6, 7)] + [(i, (i + 1) % 4, 4 + (i + 1) % 4, 4 + i) for i in range(4)]
    verts, fs = incidences_from_face_list(faces)
    assert forman_from_incidences(verts, fs) == [2] * 12


def test_forman_formula_values():
    m = antiprism(5)
    vals = {forman_formula(m, e) for e in range(m.num_edges)}
    pent = [e for e in range(m.num_edges) if 5 in (m.face_degree(f) for f in m.edge_faces(e))]
    assert {forman_formula(m, e) for e in pent} == {0}
    assert vals == {0, 2}
    assert min(forman_formula(antiprism(6), e) for e in range(24)) == -1
    assert forman_formula(icosahedron(), 0) == 16 - 5 - 5 - 3 - 3
    tri = bipyramid(3)
    assert {forman_formula(tri, e) for e in range(tri.num_edges)} == {16 - 3 - 4 - 3 - 3, 16 - 4 - 4 - 3 - 3}


def test_forman_formula_rejects_non_tessellation():
    with pytest.raises(ValueError):
        forman_formula(cycle(4), 0)
    assert forman_formula(cycle(4), 0, validate=False) == 16 - 2 - 2 - 4 - 4


def test_edge_mean_curvature():
    assert edge_mean_curvature(cube(), 0) == Q(1, 6)
    assert edge_mean_curvature(icosahedron(), 0) == Q(1, 5) * 2 + Q(2, 3) - 1


def test_psi_of_all_threes():
    from curvatess.polyhedra import tetrahedron

    m = tetrahedron()
    assert {edge_mean_curvature(m, e) for e in range(6)} == {Q(1, 3)}


def test_gauss_bonnet_cube():
    assert gauss_bonnet_total(cube()) == 2


def test_report_cube():
    r = curvature_report(cube())
    assert r.min_phi == Q(1, 4) and r.min_forman == 2 and r.min_corner == Q(1, 12)
    assert r.total_phi == 2 and r.tessellation
    js = r.to_json()
    assert js["min_corner"] == {"num": 1, "den": 12}
    assert js["total_phi"] == {"num": 2, "den": 1}


def test_report_c4():
    r = curvature_report(cycle(4))
    assert not r.tessellation
    assert r.forman == [3] * 4 and r.forman_def == [3] * 4


def test_report_prism7():
    assert curvature_report(prism(7)).min_phi > 0
    assert curvature_report(bipyramid(7)).min_phi == Q(-1, 6)


@settings(max_examples=60, deadline=None)
@given(sphere_maps())
def test_phi_is_sum_of_corners_and_totals_two(m):
    assert gauss_bonnet_total(m) == 2
    for v in range(m.num_vertices):
        total = sum((Q(1, m.vertex_degree(v)) + Q(1, m.face_degree(m.face_of[d])) - Q(1, 2)
                     for d in m.vertices[v]), Q(0))
        assert total == combinatorial_curvature(m, v)
    r = curvature_report(m)
    assert r.corners[m.vertices[0][0]] == corner_curvature(m, 0, m.face_of[m.vertices[0][0]])


@settings(max_examples=60, deadline=None)
@given(sphere_maps(simple=True))
def test_forman_routes_agree_on_tessellations(m):
    from curvatess.tessellation import is_tessellation

    if not is_tessellation(m).passed:
        return
    h = medial(m)
    for e in range(m.num_edges):
        assert forman_definitional(m, e) == forman_formula(m, e)
        x = m.edges[e][0]
        assert edge_mean_curvature(m, e) == combinatorial_curvature(h, h.vertex_of[2 * x])
