"""
Conwell heptads as 7-cliques
============================

Join two off-quadric points when their line is external; the 7-cliques of
this graph are the Conwell heptads.  Under the bijection to G_2(8) each
heptad becomes the seven pairs sharing one mark.
"""

from kleingrass import (
    QuadraticForm,
    build_collinearity_graph,
    external_lines,
    find_heptads,
    heptad_pair_intersections,
    heptads_vs_marks,
    off_quadric_points,
)
from kleingrass.fixtures import published_certificate
from kleingrass.fixtures import row_points

f = QuadraticForm.canonical()
graph = build_collinearity_graph(off_quadric_points(f), external_lines(f))
print(f"{len(graph.vertices)} vertices, {len(graph.edges)} edges, degree {graph.degree(graph.vertices[0])}")

heptads = find_heptads(graph)
report = heptad_pair_intersections(heptads, graph.vertices)
print(f"{len(heptads)} heptads; every pair shares one point; every point is in",
      set(report.coverage.values()).pop(), "heptads")

rows = {p: i for i, p in row_points().items()}
marks = heptads_vs_marks(heptads, published_certificate())
for h in sorted(heptads, key=marks.get):
    print(f"mark {marks[h]}: table rows {sorted(rows[p] for p in h)}")
