"""Strip colorings and the 3-colorable subgroup.

    python demos/02_colorable_subgroup.py
"""

import random

from thompsonlinks import group, strip

for name in ("x0", "x1", "w0", "w1", "w2", "w3"):
    g = group.word_to_element(name)
    top = strip.format_gaps(strip.frontier_gaps(g.plus))
    bottom = strip.format_gaps(strip.frontier_gaps(g.minus))
    print(f"{name}: member={strip.is_member(g)!s:5}  plus gaps {top}  minus gaps {bottom}")

# the generators come from F(4) by replacing each 4-ary caret with a balanced binary tree
w0_rep = group.embed_f4_diagram(group.quaternary_generator(0))
print("w0 before reduction has", w0_rep.n_leaves, "leaves; reduced:", group.generator_w(0).n_leaves)

# exhaustive enumeration agrees with the forced-gap test
rng = random.Random(0)
agree = 0
for _ in range(200):
    d = group.random_diagram(rng.randint(1, 12), rng)
    found = strip.enumerate_strip_colorings(d)
    agree += len(found) == (1 if strip.is_member(d) else 0)
print(f"enumeration agrees with membership on {agree}/200 random pairs")
