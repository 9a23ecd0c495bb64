"""Fox p-colorings by linear algebra and by brute force.

    python demos/04_fox_colorings.py
"""

from thompsonlinks import coloring, group, jones
from thompsonlinks.diagram import parse_pd, unknot

knots = {
    "trefoil": parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"),
    "figure-eight": parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"),
    "unknot": unknot(),
    "link of x0": jones.link_of(group.generator_x(0)),
    "link of w2": jones.link_of(group.generator_w(2)),
}
for name, link in knots.items():
    dim = coloring.kernel_dimension(link, 3)
    line = f"{name:14} arcs={len(link.arcs()):2}  3-kernel dim={dim}  3-colorable={dim >= 2}"
    if len(link.arcs()) <= coloring.BRUTE_FORCE_ARCS:
        total, nonconst = coloring.count_colorings_bruteforce(link, 3)
        line += f"  colorings={total} ({nonconst} non-constant)"
    line += f"  coloring number<=11: {coloring.coloring_number(link, 11)}"
    print(line)
