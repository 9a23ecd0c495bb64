"""Strip colorings and membership in the 3-colorable subgroup.

The strip of a diagram with n leaves has n + 1 regions, one per gap of
the leaf line: region 0 is the left infinite region, region n the right
one, and region k (0 < k < n) lies between leaves k and k+1.  An edge of
either tree whose lower end spans leaves p..q separates regions p-1 and
q; the two root stubs separate regions 0 and n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .trees import leaf_depths

MAX_REGIONS = 40


class RegionLimitError(ValueError):
    pass


def frontier_gaps(t) -> tuple[int, ...]:
    """Forced colors of the n+1 gaps below one binary tree, outer colors 0 and 1.

    The three regions around a caret are pairwise adjacent, so its middle
    region must take the third color.
    """
    gaps = [0] * (t.n_leaves + 1)
    gaps[-1] = 1
    todo = [(t, 0, 0, 1)]
    while todo:
        node, first, a, b = todo.pop()
        if node.is_leaf:
            continue
        c = (3 - a - b) % 3
        split = first + node.left.n_leaves
        gaps[split] = c
        todo.append((node.left, first, a, c))
        todo.append((node.right, split, c, b))
    return tuple(gaps)


def format_gaps(gaps) -> str:
    return ",".join(str(c) for c in gaps)


def _diagram(g):
    return getattr(g, "diagram", g)


@dataclass(frozen=True)
class StripColoring:
    """Colors of the strip regions, indexed by gap (0 = left, n = right)."""

    colors: tuple[int, ...]

    @property
    def n_regions(self) -> int:
        return len(self.colors)


def strip_coloring(d) -> StripColoring | None:
    """The unique strip coloring, or ``None`` if the diagram is not 3-strip-colorable."""
    d = _diagram(d)
    top, bottom = frontier_gaps(d.plus), frontier_gaps(d.minus)
    if top != bottom:
        return None
    return StripColoring(top)


def is_member(g) -> bool:
    """Whether ``g`` (element or diagram) lies in the 3-colorable subgroup."""
    d = _diagram(g)
    return frontier_gaps(d.plus) == frontier_gaps(d.minus)


def leaf_parity_ok(g) -> bool:
    d = _diagram(g)
    return all((a - b) % 2 == 0 for a, b in zip(leaf_depths(d.plus), leaf_depths(d.minus)))


def parity_violations(g) -> list[int]:
    d = _diagram(g)
    pairs = zip(leaf_depths(d.plus), leaf_depths(d.minus))
    return [i for i, (a, b) in enumerate(pairs, start=1) if (a - b) % 2]


# -- exhaustive oracle -------------------------------------------------------

def _edge_spans(t):
    """(first, last) leaf span below every edge of ``t`` including leaf edges."""
    spans = []
    todo = [(t, 1)]
    while todo:
        node, first = todo.pop()
        if node.is_leaf:
            continue
        for c in node.children:
            spans.append((first, first + c.n_leaves - 1))
            todo.append((c, first))
            first += c.n_leaves
    return spans


def region_adjacency(d) -> tuple[int, set[tuple[int, int]]]:
    """Number of strip regions and the set of adjacent region pairs."""
    d = _diagram(d)
    n = d.n_leaves
    adj = {(0, n)}
    for t in (d.plus, d.minus):
        for p, q in _edge_spans(t):
            adj.add((p - 1, q))
    if n == 1:
        adj = {(0, 1)}
    return n + 1, adj


def enumerate_strip_colorings(d, limit: int = MAX_REGIONS) -> list[tuple[int, ...]]:
    """All proper {0,1,2}-colorings of the strip with the outer regions 0 and 1.

    Plain backtracking on the region adjacency graph; the next region is
    always one with the most already-colored neighbours.
    """
    n_regions, adj = region_adjacency(d)
    if n_regions > limit:
        raise RegionLimitError(f"{n_regions} regions exceeds the limit of {limit}")
    nbrs: list[set[int]] = [set() for _ in range(n_regions)]
    for a, b in adj:
        nbrs[a].add(b)
        nbrs[b].add(a)
    colors: list[int | None] = [None] * n_regions
    solutions: list[tuple[int, ...]] = []

    def fits(r: int, c: int) -> bool:
        return all(colors[s] != c for s in nbrs[r])

    def search() -> None:
        free = [r for r in range(n_regions) if colors[r] is None]
        if not free:
            solutions.append(tuple(colors))
            return
        r = max(free, key=lambda r: (sum(colors[s] is not None for s in nbrs[r]), -r))
        for c in range(3):
            if fits(r, c):
                colors[r] = c
                search()
                colors[r] = None

    last = n_regions - 1
    if fits(0, 0):
        colors[0] = 0
        if fits(last, 1):
            colors[last] = 1
            search()
    return solutions
