from curvatess.canonical import canonical_code
from curvatess.curvature import CORNER_VERTEX_PATTERNS, positive_corner, vertex_pattern
from curvatess.generate.corner import CornerConstraints, corner_signatures, generate_corner_candidates
from curvatess.generate.growth import GrowthConstraints, grow_maps
from curvatess.maps import connectivity
from curvatess.polyhedra import bipyramid, icosahedron, octahedron, pyramid, tetrahedron
from curvatess.tessellation import is_tessellation


def test_thirteen_candidates():
    out = generate_corner_candidates()
    assert len(out) == 13
    got = {canonical_code(m) for m in out}
    for m in (tetrahedron(), pyramid(4), pyramid(5), octahedron(), bipyramid(3), icosahedron()):
        assert canonical_code(m) in got
    for m in out:
        assert is_tessellation(m).passed and m.num_vertices <= m.num_faces <= 20
        assert all(positive_corner(m.vertex_degree(m.vertex_of[d]), m.face_degree(m.face_of[d]))
                   for d in range(m.dart_count))
        assert all(vertex_pattern(m, v) in CORNER_VERTEX_PATTERNS for v in range(m.num_vertices))
        assert connectivity(m) >= 3


def test_signatures_come_from_filtered_system():
    sigs = corner_signatures(CornerConstraints())
    assert ({5: 12}, {3: 20}) in sigs
    assert all(set(v) <= {3, 4, 5} and set(f) <= {3, 4, 5} for v, f in sigs)


def test_signature_free_search_agrees():
    """One search over all degree choices, filtered afterwards, finds the same graphs."""
    c = CornerConstraints()
    g = GrowthConstraints(face_sizes=(3, 4, 5), max_faces=20, min_degree=3, max_degree=5,
                          max_vertices=12, corner_ok=positive_corner)
    found = {}
    for m in grow_maps(g):
        if m.num_vertices < 4 or m.num_vertices > m.num_faces:
            continue
        if any(vertex_pattern(m, v) not in c.allowed_vertex_patterns for v in range(m.num_vertices)):
            continue
        if not is_tessellation(m).passed:
            continue
        found.setdefault(canonical_code(m), m)
    assert sorted(found) == [canonical_code(m) for m in generate_corner_candidates()]
