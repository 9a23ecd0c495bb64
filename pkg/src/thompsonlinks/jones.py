"""Jones' construction of a link diagram from a tree diagram.

Vertices of the plane graph are the carets of both trees.  A caret is
named by its side (``"+"`` or ``"-"``) and the gap it splits: the caret
whose left subtree ends at leaf m is ``(side, m)``, so every gap
1..n-1 has exactly one caret per tree and the root of each tree is the
caret of its middle gap.

Edges come in four kinds:

* ``tree``: caret to child caret inside one tree,
* ``leaf``: parent of leaf i in the plus tree to parent of leaf i in the
  minus tree, passing through the leaf,
* ``region``: the two carets of gap k, drawn inside that region,
* ``unbounded``: root to root, drawn around the left of the diagram.

Clockwise rotation at a plus caret is (parent, right, region, left) and
at a minus caret (parent, left, region, right); the roots put the
unbounded edge in the parent slot.  Crossings put the two child edges
over.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import LinkDiagram, unknot

Vertex = tuple[str, int]

ROTATION = {
    "+": ("parent", "right", "region", "left"),
    "-": ("parent", "left", "region", "right"),
}


@dataclass(frozen=True)
class Edge:
    kind: str
    tail: Vertex
    head: Vertex
    index: int  # leaf index, gap index, child gap, or 0 for the unbounded edge
    depths: tuple[int, ...]  # (child depth,) for tree edges; (plus, minus) for leaf edges


@dataclass(frozen=True)
class CaretInfo:
    gap: int
    depth: int
    parent: int | None
    left: tuple[str, int]
    right: tuple[str, int]


def caret_table(t) -> dict[int, CaretInfo]:
    """Carets of a binary tree keyed by the gap they split.

    Children are ``("caret", gap)`` or ``("leaf", i)``.
    """
    table: dict[int, CaretInfo] = {}

    def walk(node, first, depth, parent):
        if node.is_leaf:
            return ("leaf", first)
        gap = first + node.left.n_leaves - 1
        left = walk(node.left, first, depth + 1, gap)
        right = walk(node.right, gap + 1, depth + 1, gap)
        table[gap] = CaretInfo(gap, depth, parent, left, right)
        return ("caret", gap)

    walk(t, 1, 0, None)
    return dict(sorted(table.items()))


def root_gap(t) -> int:
    return t.left.n_leaves


@dataclass(frozen=True)
class TangleGraph:
    n_leaves: int
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    slots: dict  # vertex -> {role: edge id}

    def rotation(self, v: Vertex) -> tuple[int, ...]:
        """Edge ids around ``v`` in clockwise order, starting at the parent slot."""
        return tuple(self.slots[v][role] for role in ROTATION[v[0]])

    def degree(self, v: Vertex) -> int:
        return sum((e.tail == v) + (e.head == v) for e in self.edges)

    def edges_of_kind(self, kind: str) -> list[int]:
        return [k for k, e in enumerate(self.edges) if e.kind == kind]


def build_graph(d) -> TangleGraph:
    """The 4-valent plane graph of a tree diagram with at least two leaves."""
    d = getattr(d, "diagram", d)
    n = d.n_leaves
    if n < 2:
        raise ValueError("the construction needs at least two leaves")
    tables = {"+": caret_table(d.plus), "-": caret_table(d.minus)}
    vertices = tuple((side, m) for side in "+-" for m in tables[side])
    slots: dict[Vertex, dict[str, int]] = {v: {} for v in vertices}
    edges: list[Edge] = []

    def add(kind, tail, tail_role, head, head_role, index, depths=()):
        slots[tail][tail_role] = len(edges)
        slots[head][head_role] = len(edges)
        edges.append(Edge(kind, tail, head, index, depths))

    leaf_parent: dict[str, dict[int, tuple[int, str, int]]] = {"+": {}, "-": {}}
    for side in "+-":
        for m, info in tables[side].items():
            for role in ("left", "right"):
                kind, k = getattr(info, role)
                if kind == "caret":
                    add("tree", (side, m), role, (side, k), "parent", k, (info.depth + 1,))
                else:
                    leaf_parent[side][k] = (m, role, info.depth + 1)
    for i in range(1, n + 1):
        pm, prole, pdepth = leaf_parent["+"][i]
        qm, qrole, qdepth = leaf_parent["-"][i]
        add("leaf", ("+", pm), prole, ("-", qm), qrole, i, (pdepth, qdepth))
    for k in range(1, n):
        add("region", ("+", k), "region", ("-", k), "region", k)
    add("unbounded", ("+", root_gap(d.plus)), "parent", ("-", root_gap(d.minus)), "parent", 0)
    return TangleGraph(n, vertices, tuple(edges), slots)


def vertex_name(v: Vertex) -> str:
    return f"{v[0]}{v[1]}"


def to_link_diagram(g: TangleGraph, mirror: bool = False) -> LinkDiagram:
    """Resolve every vertex into a crossing with the child edges over.

    Edge id ``e`` becomes label ``e + 1``.  ``mirror`` puts the child
    edges under instead.
    """
    crossings = []
    for v in g.vertices:
        cw = g.rotation(v)
        ccw = (cw[0], cw[3], cw[2], cw[1])
        if mirror:
            ccw = ccw[1:] + ccw[:1]
        crossings.append(tuple(e + 1 for e in ccw))
    return LinkDiagram(tuple(crossings), 0, tuple(vertex_name(v) for v in g.vertices))


def link_of_diagram(d, mirror: bool = False) -> LinkDiagram:
    """Apply the construction verbatim, reduced or not."""
    return to_link_diagram(build_graph(d), mirror)


def link_of(g, mirror: bool = False) -> LinkDiagram:
    """Link diagram of a group element from its reduced diagram; identity gives the unknot."""
    if g.is_identity():
        return unknot()
    return link_of_diagram(g.diagram, mirror)
