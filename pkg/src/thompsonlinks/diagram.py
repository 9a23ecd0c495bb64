"""Unoriented link diagrams as labelled crossings.

Each crossing is a 4-tuple of edge labels listed counterclockwise with the
under-strand in positions 0 and 2 and the over-strand in 1 and 3.  Every
label occurs in exactly two slots.  ``free_loops`` counts components
without crossings.  This is planar-diagram (PD) notation with the
orientation forgotten; :meth:`LinkDiagram.pd_code` chooses one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

Slot = tuple[int, int]


class PDParseError(ValueError):
    pass


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def groups(self) -> list[list]:
        out: dict = {}
        for x in sorted(self.parent):
            out.setdefault(self.find(x), []).append(x)
        return sorted(out.values())


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[tuple[int, int, int, int], ...] = ()
    free_loops: int = 0
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(c) for c in self.crossings))
        counts: dict[int, int] = {}
        for c in self.crossings:
            if len(c) != 4:
                raise PDParseError(f"crossing {c} does not have four labels")
            for label in c:
                counts[label] = counts.get(label, 0) + 1
        bad = sorted(k for k, v in counts.items() if v != 2)
        if bad:
            raise PDParseError(f"labels {bad} do not occur exactly twice")

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def labels(self) -> list[int]:
        return sorted({x for c in self.crossings for x in c})

    def ends(self) -> dict[int, list[Slot]]:
        out: dict[int, list[Slot]] = {}
        for k, c in enumerate(self.crossings):
            for s, label in enumerate(c):
                out.setdefault(label, []).append((k, s))
        return out

    def _other_end(self, ends, label, slot: Slot) -> Slot:
        a, b = ends[label]
        return b if a == slot else a

    # -- arcs and components -------------------------------------------------

    def arcs(self) -> list[tuple[int, ...]]:
        """Label sets of the arcs; crossing-free loops come last as ``()``."""
        uf = _UnionFind(self.labels())
        for c in self.crossings:
            uf.union(c[1], c[3])
        return [tuple(g) for g in uf.groups()] + [()] * self.free_loops

    def arc_index(self) -> dict[int, int]:
        return {label: k for k, arc in enumerate(self.arcs()) for label in arc}

    def closed_arcs(self) -> int:
        """Arcs with no under-end: crossing-free loops and over-only loops."""
        under = {c[s] for c in self.crossings for s in (0, 2)}
        return sum(1 for arc in self.arcs() if not under.intersection(arc))

    def component_labels(self) -> list[list[int]]:
        uf = _UnionFind(self.labels())
        for c in self.crossings:
            uf.union(c[0], c[2])
            uf.union(c[1], c[3])
        return uf.groups()

    def n_components(self) -> int:
        return len(self.component_labels()) + self.free_loops

    # -- orientation and codes ----------------------------------------------

    def _walks(self):
        """Traverse every component once.

        A component starts at its smallest label, heading into that label's
        first slot (in crossing order), so well-formed PD input keeps its
        orientation.  Yields lists of ``(label, crossing,
        entry_slot)`` steps.
        """
        ends = self.ends()
        seen: set[int] = set()
        for label in self.labels():
            if label in seen:
                continue
            walk = []
            cur, tail = label, ends[label][1]
            while cur not in seen:
                seen.add(cur)
                head = self._other_end(ends, cur, tail)
                walk.append((cur, head[0], head[1]))
                exit_slot = (head[0], (head[1] + 2) % 4)
                cur, tail = self.crossings[head[0]][exit_slot[1]], exit_slot
            yield walk

    def _oriented(self):
        relabel: dict[int, int] = {}
        under_in: dict[int, int] = {}
        over_in: dict[int, int] = {}
        walks = list(self._walks())
        for walk in walks:
            for label, k, s in walk:
                relabel[label] = len(relabel) + 1
                (under_in if s % 2 == 0 else over_in)[k] = s
        return walks, relabel, under_in, over_in

    def crossing_signs(self) -> list[int]:
        """Writhe signs under the orientation used by :meth:`pd_code`."""
        _, _, under_in, over_in = self._oriented()
        return [1 if (over_in[k] - under_in[k]) % 4 == 3 else -1
                for k in range(self.n_crossings)]

    def pd_code(self) -> str:
        """PD text: one ``X[a,b,c,d]`` per crossing starting at the incoming under-edge."""
        _, relabel, under_in, _ = self._oriented()
        terms = []
        for k, c in enumerate(self.crossings):
            s = under_in[k]
            terms.append("X[%s]" % ",".join(str(relabel[c[(s + j) % 4]]) for j in range(4)))
        if self.free_loops:
            terms.append(f"L {self.free_loops}")
        return " ".join(terms)

    def gauss_code(self) -> str:
        """One line per component, e.g. ``O1+ U2- ...``; crossing-free loops as ``L k``."""
        walks, _, under_in, over_in = self._oriented()
        signs = {k: "+" if (over_in[k] - under_in[k]) % 4 == 3 else "-"
                 for k in range(self.n_crossings)}
        lines = [" ".join(f"{'U' if s % 2 == 0 else 'O'}{k + 1}{signs[k]}" for _, k, s in walk)
                 for walk in walks]
        if self.free_loops:
            lines.append(f"L {self.free_loops}")
        return "\n".join(lines)

    def mirror(self) -> LinkDiagram:
        """Swap over and under at every crossing."""
        return LinkDiagram(tuple(c[1:] + c[:1] for c in self.crossings),
                           self.free_loops, self.names)

    # -- split loops ---------------------------------------------------------

    def without_split_loops(self) -> LinkDiagram:
        """Peel off components that pass over at every one of their crossings.

        Each such component is deleted together with its crossings, the
        strands it passed over are rejoined, and it is counted as a
        crossing-free loop instead.  Repeats until nothing changes.
        """
        crossings = [list(c) for c in self.crossings]
        names = list(self.names) if self.names else [""] * len(crossings)
        free = self.free_loops
        while True:
            current = LinkDiagram(tuple(map(tuple, crossings)))
            under = {c[s] for c in crossings for s in (0, 2)}
            target = next((set(comp) for comp in current.component_labels()
                           if not under.intersection(comp)), None)
            if target is None:
                names_out = tuple(names) if self.names else ()
                return LinkDiagram(tuple(map(tuple, crossings)), free, names_out)
            free += 1
            k = 0
            while k < len(crossings):
                c = crossings[k]
                if c[1] not in target:
                    k += 1
                    continue
                a, b = c[0], c[2]
                del crossings[k]
                del names[k]
                if a == b:
                    free += 1
                else:
                    for other in crossings:
                        for s in range(4):
                            if other[s] == b:
                                other[s] = a

    # -- isomorphism ---------------------------------------------------------

    def _pieces(self) -> list[list[int]]:
        uf = _UnionFind(range(self.n_crossings))
        for spots in self.ends().values():
            uf.union(spots[0][0], spots[1][0])
        return uf.groups()

    def _rooted_code(self, ends, root: int, start: int) -> tuple[int, ...]:
        order = {root: 0}
        frame = {root: start}
        queue = [root]
        code: list[int] = []
        for k in queue:
            f = frame[k]
            code.append(f % 2)
            for j in range(4):
                s = (f + j) % 4
                k2, s2 = self._other_end(ends, self.crossings[k][s], (k, s))
                if k2 not in order:
                    order[k2] = len(order)
                    frame[k2] = s2
                    queue.append(k2)
                code.append(order[k2])
                code.append((s2 - frame[k2]) % 4)
        return tuple(code)

    def canonical_key(self) -> tuple:
        """Complete invariant of the diagram up to relabelling and planar isotopy."""
        ends = self.ends()
        pieces = []
        for piece in self._pieces():
            pieces.append(min(self._rooted_code(ends, k, s) for k in piece for s in range(4)))
        return tuple(sorted(pieces)), self.free_loops

    def is_isomorphic(self, other: LinkDiagram) -> bool:
        if (self.n_crossings, self.free_loops) != (other.n_crossings, other.free_loops):
            return False
        return self.canonical_key() == other.canonical_key()

    def __str__(self) -> str:
        return self.pd_code()


_TERM = re.compile(r"X\[([^\]]*)\]|L\s+(\d+)|(\S+)")


def parse_pd(text: str) -> LinkDiagram:
    """Inverse of :meth:`LinkDiagram.pd_code` up to isomorphism."""
    crossings = []
    free = 0
    for m in _TERM.finditer(text):
        if m.group(3) is not None:
            raise PDParseError(f"malformed PD term {m.group(3)!r}")
        if m.group(2) is not None:
            free += int(m.group(2))
            continue
        fields = [f.strip() for f in m.group(1).split(",")]
        if len(fields) != 4:
            raise PDParseError(f"X[{m.group(1)}] must have four labels")
        try:
            crossings.append(tuple(int(f) for f in fields))
        except ValueError:
            raise PDParseError(f"non-integer label in X[{m.group(1)}]") from None
    return LinkDiagram(tuple(crossings), free)


def unknot() -> LinkDiagram:
    return LinkDiagram((), 1)


def arcs_of(l: LinkDiagram) -> list[tuple[int, ...]]:
    return l.arcs()


def components_of(l: LinkDiagram) -> int:
    return l.n_components()


def pd_code(l: LinkDiagram) -> str:
    return l.pd_code()


def gauss_code(l: LinkDiagram) -> str:
    return l.gauss_code()
