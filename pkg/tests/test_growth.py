import pytest

from curvatess.canonical import canonical_code
from curvatess.generate.growth import GrowthConstraints, grow_maps
from curvatess.tessellation import is_tessellation

# simplicial polyhedra with 4..8 vertices (OEIS A000109)
TRIANGULATIONS = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14}


def test_triangulation_counts():
    counts = {}
    seen = set()
    for m in grow_maps(GrowthConstraints(face_sizes=(3,), max_faces=12, min_degree=3)):
        c = canonical_code(m)
        if c in seen or not is_tessellation(m, strict=True).passed:
            continue
        seen.add(c)
        counts[m.num_vertices] = counts.get(m.num_vertices, 0) + 1
    assert counts == TRIANGULATIONS


def test_every_output_is_a_sphere_map():
    g = GrowthConstraints(face_sizes=(3, 4), max_faces=6, min_degree=3)
    n = 0
    for m in grow_maps(g):
        n += 1
        assert m.euler_characteristic() == 2
        assert set(m.face_degrees()) <= {3, 4} and min(m.vertex_degrees()) >= 3
    assert n > 0


def test_exact_counts_respected():
    g = GrowthConstraints(face_sizes=(3, 4), max_faces=5, face_size_counts={3: 4, 4: 1},
                          vertex_degree_counts={3: 4, 4: 1}, max_vertices=5)
    ms = list(grow_maps(g))
    assert ms and all(sorted(m.face_degrees()) == [3, 3, 3, 3, 4] for m in ms)
    assert len({canonical_code(m) for m in ms}) == 1


@pytest.mark.parametrize("bip", [False, True])
def test_bipartite_flag_only_prunes(bip):
    g = GrowthConstraints(face_sizes=(4,), max_faces=6, bipartite=bip)
    assert len({canonical_code(m) for m in grow_maps(g)}) == 16
