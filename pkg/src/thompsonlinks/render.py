"""Static SVG pictures of tree diagrams, strips and Jones links.

Layout: leaf i sits at (i, 0); the caret of gap m sits at x = m + 1/2,
at height ``H - depth`` above the leaf line for the plus tree and the
mirror image below for the minus tree, H being the tree's largest leaf
depth.  Output depends only on the input, so reruns are byte-identical.
"""

from __future__ import annotations

import math
from html import escape

from .coloring import BLUE, GREEN, RED, edge_coloring
from .jones import build_graph, caret_table, root_gap
from .strip import format_gaps, frontier_gaps, strip_coloring
from .trees import leaf_depths

UNIT = 48
MARGIN = 24
REGION_FILL = {0: "#9ecae1", 1: "#a1d99b", 2: "#fcae91"}
STROKE = {BLUE: "#1f77b4", GREEN: "#2ca02c", RED: "#d62728"}
GAP = 0.2


class _Canvas:
    def __init__(self, xmin, xmax, ymin, ymax, extra_height=0):
        self.xmin, self.ymax = xmin, ymax
        self.width = (xmax - xmin) * UNIT + 2 * MARGIN
        self.height = (ymax - ymin) * UNIT + 2 * MARGIN + extra_height
        self.items: list[str] = []

    def pt(self, p) -> str:
        x = MARGIN + (p[0] - self.xmin) * UNIT
        y = MARGIN + (self.ymax - p[1]) * UNIT
        return f"{x:.2f},{y:.2f}"

    def polyline(self, points, stroke="#000", width=2.0, dash=None):
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        pts = " ".join(self.pt(p) for p in points)
        self.items.append(f'<polyline points="{pts}" fill="none" stroke="{stroke}" '
                          f'stroke-width="{width}" stroke-linecap="round"{extra}/>')

    def polygon(self, points, fill):
        pts = " ".join(self.pt(p) for p in points)
        self.items.append(f'<polygon points="{pts}" fill="{fill}" stroke="none"/>')

    def dot(self, p, r=3.0, fill="#000"):
        x, y = self.pt(p).split(",")
        self.items.append(f'<circle cx="{x}" cy="{y}" r="{r}" fill="{fill}"/>')

    def text(self, p, s, size=14, anchor="middle", fill="#000"):
        x, y = self.pt(p).split(",")
        self.items.append(f'<text x="{x}" y="{y}" font-family="sans-serif" font-size="{size}" '
                          f'text-anchor="{anchor}" fill="{fill}">{escape(s)}</text>')

    def banner(self, s, fill="#b00"):
        self.items.append(f'<text x="{MARGIN}" y="{self.height - 8:.2f}" font-family="sans-serif" '
                          f'font-size="16" fill="{fill}">{escape(s)}</text>')

    def svg(self) -> str:
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width:.0f}" '
                f'height="{self.height:.0f}" viewBox="0 0 {self.width:.0f} {self.height:.0f}">')
        return "\n".join([head, '<rect width="100%" height="100%" fill="#fff"/>',
                          *self.items, "</svg>"]) + "\n"


class _Layout:
    def __init__(self, d):
        self.d = d
        self.n = d.n_leaves
        self.h = {"+": max(leaf_depths(d.plus)), "-": max(leaf_depths(d.minus))}
        self.tables = {"+": caret_table(d.plus), "-": caret_table(d.minus)}
        self.top = self.h["+"] + 1
        self.bottom = -(self.h["-"] + 1)

    def caret(self, side, m):
        depth = self.tables[side][m].depth
        y = self.h[side] - depth
        return (m + 0.5, y if side == "+" else -y)

    def node(self, side, child):
        kind, k = child
        return (k, 0.0) if kind == "leaf" else self.caret(side, k)

    def root(self, side):
        tree = self.d.plus if side == "+" else self.d.minus
        if tree.is_leaf:
            return (1, 0.0)
        return self.caret(side, root_gap(tree))

    def spine(self, side, direction):
        """Points from the root down the extreme ``direction`` path to the outer leaf."""
        tree = self.d.plus if side == "+" else self.d.minus
        if tree.is_leaf:
            return [(1, 0.0)]
        child = ("caret", root_gap(tree))
        pts = []
        while child[0] == "caret":
            pts.append(self.caret(side, child[1]))
            child = getattr(self.tables[side][child[1]], direction)
        return pts + [self.node(side, child)]

    def gap_path(self, side, k):
        """Caret of gap k down to leaf k, and down to leaf k+1."""
        info = self.tables[side][k]
        paths = []
        for first, then in (("left", "right"), ("right", "left")):
            pts = [self.caret(side, k)]
            child = getattr(info, first)
            while child[0] == "caret":
                pts.append(self.caret(side, child[1]))
                child = getattr(self.tables[side][child[1]], then)
            paths.append(pts + [self.node(side, child)])
        return paths

    def tree_edges(self, side):
        for m, info in self.tables[side].items():
            for child in (info.left, info.right):
                yield [self.caret(side, m), self.node(side, child)]


def _diagram(g):
    return getattr(g, "diagram", g)


def _draw_trees(c: _Canvas, lay: _Layout, stroke="#000"):
    for side in "+-":
        for seg in lay.tree_edges(side):
            c.polyline(seg, stroke=stroke)
    for i in range(1, lay.n + 1):
        c.dot((i, 0.0))


def render_tree(g) -> str:
    d = _diagram(g)
    lay = _Layout(d)
    c = _Canvas(0, lay.n + 1, lay.bottom, lay.top)
    c.polyline([(0.3, 0.0), (lay.n + 0.7, 0.0)], stroke="#bbb", width=1.0, dash="4 4")
    _draw_trees(c, lay)
    for i in range(1, lay.n + 1):
        c.text((i, -0.35), str(i), size=11, fill="#555")
    return c.svg()


def render_strip(g) -> str:
    d = _diagram(g)
    lay = _Layout(d)
    n = lay.n
    c = _Canvas(0, n + 1, lay.bottom, lay.top, extra_height=28)
    coloring = strip_coloring(d)
    if coloring is not None:
        colors = coloring.colors
        for k in range(1, n):
            up_left, up_right = lay.gap_path("+", k)
            down_left, down_right = lay.gap_path("-", k)
            poly = up_left[::-1] + up_right[1:] + down_right[::-1][1:] + down_left[1:-1]
            c.polygon(poly, REGION_FILL[colors[k]])
        rp, rm = lay.root("+"), lay.root("-")
        left = ([(0, lay.top), (rp[0], lay.top)] + lay.spine("+", "left")
                + lay.spine("-", "left")[::-1][1:] + [(rm[0], lay.bottom), (0, lay.bottom)])
        right = ([(n + 1, lay.top), (rp[0], lay.top)] + lay.spine("+", "right")
                 + lay.spine("-", "right")[::-1][1:] + [(rm[0], lay.bottom), (n + 1, lay.bottom)])
        c.polygon(left, REGION_FILL[colors[0]])
        c.polygon(right, REGION_FILL[colors[n]])
        for k in range(n + 1):
            x = 0.4 if k == 0 else (n + 0.6 if k == n else k + 0.5)
            c.text((x, -0.1), str(colors[k]), size=16, fill="#b00")
    rp, rm = lay.root("+"), lay.root("-")
    c.polyline([rp, (rp[0], lay.top)])
    c.polyline([rm, (rm[0], lay.bottom)])
    _draw_trees(c, lay)
    if coloring is None:
        c.banner("not 3-strip-colorable: gaps %s / %s"
                 % (format_gaps(frontier_gaps(d.plus)), format_gaps(frontier_gaps(d.minus))))
    else:
        c.banner("3-strip-colorable: gaps " + format_gaps(coloring.colors), fill="#333")
    return c.svg()


def _trim(points, r, at_start):
    pts = list(points) if at_start else list(points)[::-1]
    while len(pts) > 1:
        (x0, y0), (x1, y1) = pts[0], pts[1]
        seg = math.hypot(x1 - x0, y1 - y0)
        if seg > r:
            t = r / seg
            pts[0] = (x0 + t * (x1 - x0), y0 + t * (y1 - y0))
            break
        r -= seg
        pts.pop(0)
    return pts if at_start else pts[::-1]


def render_link(g) -> str:
    """The plane graph with under-strand gaps, tinted by the induced 3-coloring if there is one."""
    d = _diagram(g)
    if d.n_leaves == 1:
        c = _Canvas(-1.5, 1.5, -1.5, 1.5)
        c.items.append(f'<circle cx="{c.width / 2:.2f}" cy="{c.height / 2:.2f}" r="{UNIT:.2f}" '
                       f'fill="none" stroke="#000" stroke-width="2"/>')
        return c.svg()
    lay = _Layout(d)
    graph = build_graph(d)
    ec = edge_coloring(graph)
    c = _Canvas(-0.5, lay.n + 1, lay.bottom - 0.5, lay.top + 0.5, extra_height=28)
    role = {(v, e): r for v, roles in graph.slots.items() for r, e in roles.items()}
    for k, e in enumerate(graph.edges):
        a = lay.caret(*e.tail)
        b = lay.caret(*e.head)
        if e.kind == "leaf":
            pts = [a, (e.index, 0.0), b]
        elif e.kind == "unbounded":
            pts = [a, (a[0], lay.top + 0.3), (-0.2, lay.top + 0.3),
                   (-0.2, lay.bottom - 0.3), (b[0], lay.bottom - 0.3), b]
        else:
            pts = [a, b]
        if role[(e.tail, k)] in ("parent", "region"):
            pts = _trim(pts, GAP, True)
        if role[(e.head, k)] in ("parent", "region"):
            pts = _trim(pts, GAP, False)
        stroke = STROKE[ec.colors[k]] if not ec.conflicts else "#000"
        c.polyline(pts, stroke=stroke, width=2.5)
    if ec.conflicts:
        c.banner("edge-coloring conflicts at leaves " + ",".join(map(str, ec.conflicts)))
    else:
        c.banner("induced 3-coloring", fill="#333")
    return c.svg()


RENDERERS = {"tree": render_tree, "strip": render_strip, "link": render_link}
