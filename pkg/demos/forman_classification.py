"""Classifying sphere tessellations with positive Forman curvature.

Positive Forman curvature forces every medial vertex pattern into a short
list, so the dual of the medial graph is a quadrangulation with restricted
face patterns and at most 24 faces.  Generating those, reading off the dual
pairs and keeping the positively curved ones gives the full list.
"""

import time

from curvatess.pipeline import classify_forman

t0 = time.perf_counter()
cat = classify_forman()
print(f"classified in {time.perf_counter() - t0:.1f}s")
for key, value in cat.stats.items():
    print(f"  {key}: {value}")

print("\nClasses by edge count:")
for e, n in cat.edge_histogram().items():
    print(f"  E{e:<3}{'#' * n} {n}")

print("\nThe members that are only 2-connected:")
for r in cat.records:
    if r.connectivity == 2:
        print(f"  {r.name:<22} V={r.num_vertices} E={r.num_edges} F={r.num_faces} dual {r.dual_name}")

print("\nProjective-plane quotients:", len(cat.rp2) or "none")
