from fractions import Fraction as Q

import pytest

from catalogs import corner, forman
from curvatess.canonical import MapAutomorphism, automorphism_group, canonical_code
from curvatess.curvature import combinatorial_curvature, forman_formula
from curvatess.polyhedra import cube, dodecahedron, icosahedron, octahedron, tetrahedron
from curvatess.projective import (
    QuotientError, QuotientMap, antipodal_involutions, classify_rp2, quotient, quotient_is_tessellation,
)
from curvatess.tessellation import is_tessellation


def _brute_antipodal(m):
    """Orientation-reversing involutions moving every vertex, edge and face, checked on orbits."""
    out = []
    for g in automorphism_group(m):
        p = g.perm
        if g.orientation != -1 or any(p[p[d]] != d for d in range(m.dart_count)):
            continue
        vs = {m.vertex_of[d]: m.vertex_of[p[d]] for d in range(m.dart_count)}
        es = {m.edge_of[d]: m.edge_of[p[d]] for d in range(m.dart_count)}
        # image of a face: the set of its vertices mapped must be another face's vertex set
        fsets = [frozenset(m.face_vertices(f)) for f in range(m.num_faces)]
        fs = {f: fsets.index(frozenset(vs[v] for v in fsets[f])) for f in range(m.num_faces)}
        if all(a != b for a, b in vs.items()) and all(a != b for a, b in es.items()) \
                and all(a != b for a, b in fs.items()):
            out.append(p)
    return out


@pytest.mark.parametrize("make, count", [(icosahedron, 1), (dodecahedron, 1), (cube, 1), (octahedron, 1),
                                         (tetrahedron, 0)])
def test_antipodal_involutions(make, count):
    m = make()
    got = antipodal_involutions(m)
    assert len(got) == count
    assert sorted(g.perm for g in got) == sorted(_brute_antipodal(m))


def test_hemi_icosahedron():
    q = quotient(icosahedron(), antipodal_involutions(icosahedron())[0])
    assert (q.num_vertices, q.num_edges, q.num_faces) == (6, 15, 10)
    assert q.euler_characteristic() == 1
    assert quotient_is_tessellation(q).passed
    assert sum(q.combinatorial_curvatures(), Q(0)) == 1
    assert q.adjacency() == [sorted(set(range(6)) - {v}) for v in range(6)]


def test_hemi_dodecahedron():
    m = dodecahedron()
    q = quotient(m, antipodal_involutions(m)[0])
    assert (q.num_vertices, q.num_edges, q.num_faces) == (10, 15, 6)
    assert quotient_is_tessellation(q).passed
    assert q.face_degrees() == [5] * 6 and q.vertex_degrees() == [3] * 10


def test_hemi_cube_fails():
    m = cube()
    q = quotient(m, antipodal_involutions(m)[0])
    assert (q.num_vertices, q.num_edges, q.num_faces) == (4, 6, 3)
    assert all(sorted(set(fv)) == [0, 1, 2, 3] for fv in q.face_vertices())
    rep = quotient_is_tessellation(q)
    assert "intersection" in rep.axioms_failed()


def test_quotient_rejects_bad_decks():
    m = cube()
    n = m.dart_count
    group = automorphism_group(m)
    ident = next(g for g in group if g.is_identity())
    with pytest.raises(QuotientError, match="reverse"):
        QuotientMap(m, ident)
    antipodal = {a.perm for a in antipodal_involutions(m)}
    refl = next(g for g in group if g.orientation == -1 and g.perm not in antipodal
                and all(g.perm[g.perm[d]] == d for d in range(n)))
    with pytest.raises(QuotientError, match="fixes"):
        quotient(m, refl)
    spin = next(g for g in group if g.orientation == -1 and any(g.perm[g.perm[d]] != d for d in range(n)))
    with pytest.raises(QuotientError, match="involution"):
        quotient(m, spin)


def test_curvature_values_lift():
    m = icosahedron()
    t = antipodal_involutions(m)[0]
    q = quotient(m, t)
    for d in range(m.dart_count):
        e = t.perm[d]
        assert combinatorial_curvature(m, m.vertex_of[d]) == combinatorial_curvature(m, m.vertex_of[e])
        assert forman_formula(m, m.edge_of[d]) == forman_formula(m, m.edge_of[e])
    assert len(set(q.combinatorial_curvatures())) == 1


def test_json():
    m = icosahedron()
    js = quotient(m, antipodal_involutions(m)[0]).to_json()
    assert js["orientation"] == "reversing" and len(js["deck"]) == 60
    assert js["counts"] == {"V": 6, "E": 15, "F": 10}


def test_classify_rp2():
    assert classify_rp2([]) == []
    assert classify_rp2([r.map for r in forman().records], "forman") == []
    got = classify_rp2([r.map for r in corner().records], "corner")
    covers = sorted(canonical_code(q.cover) for q in got)
    assert covers == sorted([canonical_code(icosahedron()), canonical_code(dodecahedron())])
    for q in got:
        assert is_tessellation(q.cover).passed
    with pytest.raises(ValueError):
        classify_rp2([], "ricci")


def test_classify_rp2_invariant_under_relabeling():
    m = icosahedron()
    perm = [(d * 7 + 1) % 60 for d in range(60)]
    a = classify_rp2([m], "corner")
    b = classify_rp2([m.relabel(perm)], "corner")
    assert len(a) == len(b) == 1
    assert canonical_code(a[0].cover) == canonical_code(b[0].cover)
