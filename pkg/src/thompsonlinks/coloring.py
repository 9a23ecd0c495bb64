"""Fox colorings of link diagrams and the edge-coloring of Jones' graph.

Colors are residues; the three named colors map as blue 0, green 1,
red 2.  A p-coloring labels arcs so that ``x + z == 2*y (mod p)`` at every
crossing, with ``y`` the over-arc; for p = 3 this is the same as "all
three equal or all three different".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .diagram import LinkDiagram
from .jones import TangleGraph
from .modp import is_prime, rank_mod_p

BLUE, GREEN, RED = 0, 1, 2
COLOR_NAMES = {BLUE: "blue", GREEN: "green", RED: "red"}

BRUTE_FORCE_ARCS = 16


class UnsupportedModulusError(ValueError):
    pass


class LeafConflictError(ValueError):
    """The edge-coloring disagrees across these leaves."""

    def __init__(self, leaves):
        self.leaves = tuple(leaves)
        super().__init__(f"edge colors disagree at leaves {list(self.leaves)}")


# -- linear algebra ----------------------------------------------------------

def crossing_arcs(l: LinkDiagram) -> list[tuple[int, int, int]]:
    """(under, over, under) arc indices per crossing."""
    idx = l.arc_index()
    return [(idx[c[0]], idx[c[1]], idx[c[2]]) for c in l.crossings]


def coloring_matrix(l: LinkDiagram) -> np.ndarray:
    m = np.zeros((l.n_crossings, len(l.arcs())), dtype=np.int64)
    for r, (x, y, z) in enumerate(crossing_arcs(l)):
        m[r, x] += 1
        m[r, z] += 1
        m[r, y] -= 2
    return m


def kernel_dimension(l: LinkDiagram, p: int) -> int:
    m = coloring_matrix(l)
    return m.shape[1] - rank_mod_p(m, p)


def is_p_colorable(l: LinkDiagram, p: int) -> bool:
    """Whether a non-constant p-coloring exists.

    Prime p uses the kernel dimension; composite p falls back to
    :func:`count_colorings_bruteforce` within its size guard.
    """
    if p < 2:
        raise ValueError("modulus must be at least 2")
    if is_prime(p):
        return kernel_dimension(l, p) >= 2
    if len(l.arcs()) > BRUTE_FORCE_ARCS:
        raise UnsupportedModulusError(
            f"composite modulus {p} on {len(l.arcs())} arcs exceeds the brute-force guard")
    return count_colorings_bruteforce(l, p).nonconstant > 0


class ColoringCount(NamedTuple):
    total: int
    nonconstant: int


def count_colorings_bruteforce(l: LinkDiagram, p: int, rule: str = "congruence",
                               limit: int = BRUTE_FORCE_ARCS) -> ColoringCount:
    """Count arc labelings by exhaustive search.

    ``rule="set"`` (p = 3 only) checks that the three colors at a crossing
    are all equal or all distinct; ``"congruence"`` checks x + z = 2y mod p.
    """
    if rule == "set" and p != 3:
        raise ValueError("the set rule is defined for three colors")
    if rule not in ("set", "congruence"):
        raise ValueError(f"unknown rule {rule!r}")
    n_arcs = len(l.arcs())
    if n_arcs > limit:
        raise ValueError(f"{n_arcs} arcs exceeds the brute-force limit of {limit}")
    triples = crossing_arcs(l)
    # each crossing is checked as soon as its last arc is assigned
    due: list[list[tuple[int, int, int]]] = [[] for _ in range(n_arcs)]
    for t in triples:
        due[max(t)].append(t)
    colors = [0] * n_arcs

    if rule == "set":
        def ok(x, y, z):
            return len({colors[x], colors[y], colors[z]}) != 2
    else:
        def ok(x, y, z):
            return (colors[x] + colors[z] - 2 * colors[y]) % p == 0

    def search(k: int) -> int:
        if k == n_arcs:
            return 1
        total = 0
        for c in range(p):
            colors[k] = c
            if all(ok(*t) for t in due[k]):
                total += search(k + 1)
        return total

    total = search(0)
    return ColoringCount(total, total - p)


def coloring_number(l: LinkDiagram, bound: int) -> int | None:
    """Smallest p in 3..bound with a non-constant p-coloring, else ``None``."""
    if bound < 3:
        raise ValueError("bound must be at least 3")
    for p in range(3, bound + 1):
        if is_p_colorable(l, p):
            return p
    return None


# -- edge-coloring of the Jones graph ----------------------------------------

def depth_color(depth: int) -> int:
    """Color of a tree edge whose lower end sits at ``depth``."""
    return RED if depth % 2 else GREEN


@dataclass(frozen=True)
class EdgeColoring:
    colors: dict  # edge id -> color, for every edge with a well-defined color
    leaf_halves: dict  # leaf edge id -> (plus-side color, minus-side color)
    conflicts: tuple[int, ...]  # leaves whose two halves disagree

    def color_of(self, edge: int) -> int | None:
        return self.colors.get(edge)


def edge_coloring(g: TangleGraph) -> EdgeColoring:
    colors: dict[int, int] = {}
    halves: dict[int, tuple[int, int]] = {}
    conflicts = []
    for k, e in enumerate(g.edges):
        if e.kind == "region":
            colors[k] = BLUE
        elif e.kind == "unbounded":
            colors[k] = GREEN
        elif e.kind == "tree":
            colors[k] = depth_color(e.depths[0])
        else:
            top, bottom = depth_color(e.depths[0]), depth_color(e.depths[1])
            halves[k] = (top, bottom)
            if top == bottom:
                colors[k] = top
            else:
                conflicts.append(e.index)
    return EdgeColoring(colors, halves, tuple(sorted(conflicts)))


@dataclass(frozen=True)
class ArcColoring:
    colors: tuple[int, ...]  # one entry per arc of the diagram, in ``arcs()`` order

    def n_colors(self) -> int:
        return len(set(self.colors))


def bad_crossings(l: LinkDiagram, colors, p: int = 3) -> list[int]:
    """Crossings violating the p-coloring condition under ``colors``."""
    return [k for k, (x, y, z) in enumerate(crossing_arcs(l))
            if (colors[x] + colors[z] - 2 * colors[y]) % p]


def induced_3coloring(l: LinkDiagram, g: TangleGraph, ec: EdgeColoring | None = None) -> ArcColoring:
    """Arc colors inherited from a conflict-free edge-coloring.

    ``l`` must be ``to_link_diagram(g)``, so label ``e + 1`` is edge ``e``.
    """
    ec = ec if ec is not None else edge_coloring(g)
    if ec.conflicts:
        raise LeafConflictError(ec.conflicts)
    out = []
    for arc in l.arcs():
        seen = {ec.colors[label - 1] for label in arc}
        if len(seen) != 1:
            raise ValueError(f"arc {arc} carries colors {sorted(seen)}")
        out.append(seen.pop())
    return ArcColoring(tuple(out))
