"""Links of non-trivial elements of the 3-colorable subgroup are 3-colorable.

Builds the blue/green/red edge-coloring for one element, then sweeps
random words in both generating sets.

    python demos/05_theorem_sweep.py [samples]
"""

import sys

from thompsonlinks import coloring, group, jones, theorem

g = group.word_to_element("w0 w1'")
graph = jones.build_graph(g)
ec = coloring.edge_coloring(graph)
link = jones.to_link_diagram(graph)
arc_colors = coloring.induced_3coloring(link, graph, ec)
names = [coloring.COLOR_NAMES[c] for c in arc_colors.colors]
print("w0 w1': arc colors", names)
print("violated crossings:", coloring.bad_crossings(link, arc_colors.colors))

# x0 is not in the subgroup; the edge-coloring breaks at two leaves
print("x0 leaf conflicts:", coloring.edge_coloring(jones.build_graph(group.generator_x(0))).conflicts)

samples = int(sys.argv[1]) if len(sys.argv) > 1 else 300
print()
print(theorem.sweep(samples, 12, "w", seed=42).to_text())
print()
print(theorem.sweep(samples, 12, "x", seed=42, bound=5).to_text())
