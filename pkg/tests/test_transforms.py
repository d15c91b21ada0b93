import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalogs import forman, sphere_members
from curvatess.canonical import Isomorphism, Mode, are_isomorphic, canonical_code
from curvatess.polyhedra import (
    bipyramid, cube, cuboctahedron, cycle, dodecahedron, icosahedron, octahedron, prism, pyramid, star, tetrahedron,
)
from curvatess.transforms import TransformError, dual, face_two_coloring, inverse_medial, is_self_dual, medial
from strategies import sphere_maps


def iso(a, b):
    return are_isomorphic(a, b) is not Isomorphism.NONE


def test_duals():
    assert iso(dual(octahedron()), cube())
    assert iso(dual(tetrahedron()), tetrahedron())
    assert iso(dual(bipyramid(3)), prism(3))
    assert iso(dual(icosahedron()), dodecahedron())


def test_double_dual_is_op_isomorphic():
    m = prism(5)
    assert are_isomorphic(dual(dual(m)), m) is Isomorphism.OP


def test_medials():
    assert iso(medial(tetrahedron()), octahedron())
    assert iso(medial(cube()), cuboctahedron())
    assert iso(medial(octahedron()), cuboctahedron())


def test_medial_needs_degree_two():
    with pytest.raises(TransformError):
        medial(star(3))
    assert medial(cycle(4)).is_regular(4)


def test_two_coloring():
    parts = face_two_coloring(cuboctahedron())
    h = cuboctahedron()
    sizes = sorted((len(parts.first), len(parts.second)))
    assert sizes == [6, 8]
    degs = [{h.face_degree(f) for f in part} for part in (parts.first, parts.second)]
    assert sorted(map(sorted, degs)) == [[3], [4]]
    assert 0 in parts.first
    o = face_two_coloring(octahedron())
    assert (len(o.first), len(o.second)) == (4, 4)
    with pytest.raises(TransformError):
        face_two_coloring(cube())


def test_inverse_medial():
    pair = inverse_medial(cuboctahedron())
    got = {canonical_code(pair.primal), canonical_code(pair.dual)}
    assert got == {canonical_code(cube()), canonical_code(octahedron())}
    assert not pair.self_dual
    assert pair.source == canonical_code(cuboctahedron())
    t = inverse_medial(octahedron())
    assert t.self_dual
    assert canonical_code(t.primal) == canonical_code(t.dual) == canonical_code(tetrahedron())
    assert canonical_code(pair.primal) < canonical_code(pair.dual)


def test_self_duality():
    assert is_self_dual(tetrahedron())
    assert not is_self_dual(cube())
    assert is_self_dual(pyramid(6))


def _chiral(ms):
    return [m for m in ms if canonical_code(m, Mode.OP) != canonical_code(m.mirror(), Mode.OP)]


def test_chiral_members_keep_orientation():
    chiral = _chiral(sphere_members())
    assert chiral
    for m in chiral:
        pair = inverse_medial(medial(m))
        codes = {canonical_code(pair.primal, Mode.OP), canonical_code(pair.dual, Mode.OP)}
        assert canonical_code(m, Mode.OP) in codes
        assert canonical_code(dual(m), Mode.OP) in codes


def test_thirty_self_dual_pairs():
    assert forman().stats["self_dual_pairs"] == 30


@settings(max_examples=60, deadline=None)
@given(sphere_maps(simple=True))
def test_random_properties(m):
    d = dual(m)
    assert (d.num_vertices, d.num_edges, d.num_faces) == (m.num_faces, m.num_edges, m.num_vertices)
    assert are_isomorphic(dual(d), m) is Isomorphism.OP
    if min(m.vertex_degrees()) >= 2:
        h = medial(m)
        assert h.is_regular(4) and h.num_vertices == m.num_edges
        assert h.num_faces == m.num_vertices + m.num_faces


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(range(200)))
def test_catalog_roundtrip(i):
    ms = sphere_members()
    m = ms[i % len(ms)]
    h = medial(m)
    pair = inverse_medial(h)
    assert {canonical_code(pair.primal), canonical_code(pair.dual)} == {canonical_code(m), canonical_code(dual(m))}
    assert canonical_code(medial(pair.primal)) == canonical_code(h)
    assert pair.self_dual == is_self_dual(m)
