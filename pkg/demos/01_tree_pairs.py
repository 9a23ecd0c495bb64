"""Tree pairs, reduction and the product in Thompson's group F.

    python demos/01_tree_pairs.py
"""

from thompsonlinks import group
from thompsonlinks.plmap import pl_map

x0, x1 = group.generator_x(0), group.generator_x(1)
print("x0 =", x0)
print("x1 =", x1)

# products are computed on tree pairs and reduced automatically
g = x0.inverse() * x1 * x0
print("x0^-1 x1 x0 =", g)
print("equals x2:", g == group.generator_x(2))

# inserting a caret and reducing gives back the same pair
bigger = group.insert_caret(x1.diagram, 2)
print("after caret insertion:", bigger.n_leaves, "leaves;",
      "reduces back:", group.reduce(bigger) == x1.diagram)

# the same elements as piecewise-linear maps of [0, 1]
f = pl_map(x0)
print("x0 breakpoints:", [(str(a), str(b)) for a, b in f.points])
print("x0 slopes:", [str(s) for s in f.slopes()])
