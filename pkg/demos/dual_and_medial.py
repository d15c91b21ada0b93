"""Duals, medial graphs, and recovering a dual pair from its medial graph.

The medial graph of a map has one vertex per edge; it is 4-regular and its
faces split into two classes, one for the vertices and one for the faces of
the original.  Reading either class back gives the map or its dual.
"""

from curvatess.canonical import canonical_code
from curvatess.curvature import combinatorial_curvature, edge_mean_curvature
from curvatess.polyhedra import cube, cuboctahedron, octahedron, prism, tetrahedron
from curvatess.transforms import dual, face_two_coloring, inverse_medial, is_self_dual, medial


def same(a, b):
    return canonical_code(a) == canonical_code(b)


print("medial(tetrahedron) is the octahedron:", same(medial(tetrahedron()), octahedron()))
print("medial(cube) and medial(octahedron) are both the cuboctahedron:",
      same(medial(cube()), cuboctahedron()), same(medial(octahedron()), cuboctahedron()))

h = cuboctahedron()
split = face_two_coloring(h)
print(f"\nThe cuboctahedron's faces split {len(split.first)} + {len(split.second)}.")
pair = inverse_medial(h)
print("Reading back each class gives the cube and the octahedron:",
      {same(pair.primal, cube()) or same(pair.primal, octahedron()),
       same(pair.dual, cube()) or same(pair.dual, octahedron())} == {True}, "| self-dual:", pair.self_dual)

print("\nThe tetrahedron is its own dual:", is_self_dual(tetrahedron()))
print("The cube is not:", is_self_dual(cube()), "| dual(dual(cube)) is the cube:", same(dual(dual(cube())), cube()))

m = prism(5)
h = medial(m)
print("\nEdge mean curvature equals the curvature of the matching medial vertex (5-prism):")
for x in (0, 1, 2):
    e = m.edge_of[x]
    print(f"  edge {e}: {edge_mean_curvature(m, e)} vs {combinatorial_curvature(h, h.vertex_of[2 * x])}")
