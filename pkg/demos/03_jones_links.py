"""Jones' construction: from a tree pair to a link diagram.

    python demos/03_jones_links.py [outdir]
"""

import os
import sys
from dataclasses import replace

from thompsonlinks import group, jones, render

out = sys.argv[1] if len(sys.argv) > 1 else "demo_output"
os.makedirs(out, exist_ok=True)

for name in ("x0", "w0", "w1 w2'"):
    g = group.word_to_element(name)
    graph = jones.build_graph(g)
    link = jones.link_of(g)
    print(f"{name}: {g.n_leaves} leaves, {len(graph.vertices)} vertices, "
          f"{len(graph.edges)} edges, {link.n_crossings} crossings, {link.n_components()} components")
    print("  PD:", link.pd_code())

# a non-reduced diagram gives the same link plus one unlinked circle
g = group.word_to_element("w0")
d = group.insert_caret(g.diagram, 3)
peeled = jones.link_of_diagram(d).without_split_loops()
print("caret insertion adds one split circle:",
      peeled.is_isomorphic(replace(jones.link_of(g), free_loops=1)))

for what, fn in render.RENDERERS.items():
    path = os.path.join(out, f"w0_{what}.svg")
    with open(path, "w") as fh:
        fh.write(fn(g))
    print("wrote", path)
