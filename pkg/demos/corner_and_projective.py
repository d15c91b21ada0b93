"""Positive corner curvature on the sphere and the projective plane.

A corner is positive when 1/deg(vertex) + 1/deg(face) > 1/2, which allows
only degrees 3, 4 and 5.  An integer system bounds the vertex count; the
generator then enumerates the candidates, and the dual closure completes
the sphere list.  Antipodal quotients give the projective-plane members.
"""

from curvatess.generate.combos import degree_combination_solutions, filter_combinations
from curvatess.pipeline import classify_corner

combos = degree_combination_solutions(13, 16)
print(f"{len(combos)} degree combinations with 13 to 16 vertices, for example")
print("  " + combos[0].as_line())
print(f"after the structural facts: {len(filter_combinations(combos))} remain\n")

cat = classify_corner()
print("generator outputs:", cat.stats["generated"])
print("after adding duals:", len(cat.records), "of which self-dual:", len(cat.self_dual_records()))
for r in sorted(cat.records, key=lambda r: (r.num_edges, r.name)):
    mark = "self-dual" if r.self_dual else f"dual {r.dual_name}"
    print(f"  {r.name:<22} V={r.num_vertices:<3} F={r.num_faces:<3} connectivity {r.connectivity}  {mark}")

print("\nProjective plane:")
for r in cat.rp2:
    q = r.quotient
    print(f"  {r.name}: V={q.num_vertices} E={q.num_edges} F={q.num_faces},"
          f" Euler characteristic {q.euler_characteristic()},"
          f" total curvature {sum(q.combinatorial_curvatures())}")
