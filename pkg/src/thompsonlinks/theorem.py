"""Checking that links of non-trivial 3-colorable elements are 3-colorable."""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import asdict, dataclass, field

from .coloring import (
    UnsupportedModulusError,
    bad_crossings,
    coloring_number,
    coloring_matrix,
    edge_coloring,
    induced_3coloring,
)
from .group import Element, random_word, word_to_element
from .jones import build_graph, link_of, to_link_diagram
from .modp import rank_mod_p
from .strip import is_member, parity_violations


@dataclass
class TheoremReport:
    element: str
    nontrivial: bool
    member: bool
    parity_ok: bool
    conflicts: list[int]
    conflict_free: bool
    induced_valid: bool
    colors_used: int
    three_colorable: bool
    rank: int
    arcs: int
    crossings: int
    components: int
    problems: list[str] = field(default_factory=list)

    @property
    def checks(self) -> dict[str, bool]:
        return {
            "parity_ok": self.parity_ok,
            "conflict_free": self.conflict_free,
            "induced_valid": self.induced_valid,
            "two_colors": self.colors_used >= 2,
            "three_colorable": self.three_colorable,
        }

    @property
    def passed(self) -> bool:
        return self.nontrivial and self.member and all(self.checks.values())

    def to_text(self) -> str:
        rows = [("element", self.element), ("nontrivial", self.nontrivial),
                ("member", self.member), ("parity_ok", self.parity_ok),
                ("conflicts", ",".join(map(str, self.conflicts)) or "none"),
                ("conflict_free", self.conflict_free), ("induced_valid", self.induced_valid),
                ("colors_used", self.colors_used), ("three_colorable", self.three_colorable),
                ("rank", self.rank), ("arcs", self.arcs), ("crossings", self.crossings),
                ("components", self.components), ("passed", self.passed)]
        rows += [("problem", p) for p in self.problems]
        return "\n".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in rows)

    def to_json(self) -> str:
        keys = ("member", "parity_ok", "conflicts", "three_colorable", "rank", "colors_used")
        data = asdict(self)
        return json.dumps({k: data[k] for k in keys} | {"passed": self.passed}, sort_keys=True)


def verify_main_theorem(g: Element) -> TheoremReport:
    """Run the five checks on ``g``; precondition failures are reported, not raised."""
    problems = []
    nontrivial = not g.is_identity()
    member = is_member(g)
    if not nontrivial:
        problems.append("identity element")
    if not member:
        problems.append("not in the 3-colorable subgroup")
    violations = parity_violations(g)
    link = link_of(g)
    conflicts: list[int] = []
    induced_valid = False
    colors_used = 0
    if nontrivial:
        graph = build_graph(g)
        ec = edge_coloring(graph)
        conflicts = list(ec.conflicts)
        if not conflicts:
            arc_colors = induced_3coloring(to_link_diagram(graph), graph, ec)
            induced_valid = not bad_crossings(link, arc_colors.colors)
            colors_used = arc_colors.n_colors()
    m = coloring_matrix(link)
    rank = rank_mod_p(m, 3)
    return TheoremReport(
        element=str(g),
        nontrivial=nontrivial,
        member=member,
        parity_ok=not violations,
        conflicts=conflicts,
        conflict_free=nontrivial and not conflicts,
        induced_valid=induced_valid,
        colors_used=colors_used,
        three_colorable=m.shape[1] - rank >= 2,
        rank=rank,
        arcs=m.shape[1],
        crossings=link.n_crossings,
        components=link.n_components(),
        problems=problems,
    )


@dataclass
class SweepSummary:
    alphabet: str
    samples: int
    members: int = 0
    non_members: int = 0
    passed: int = 0
    failures: list[str] = field(default_factory=list)
    crossing_counts: Counter = field(default_factory=Counter)
    component_counts: Counter = field(default_factory=Counter)
    uncolorable_non_members: list[str] = field(default_factory=list)
    coloring_numbers: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_text(self) -> str:
        lines = [f"alphabet: {self.alphabet}", f"samples: {self.samples}",
                 f"members: {self.members}", f"non_members: {self.non_members}",
                 f"passed: {self.passed}", f"failures: {len(self.failures)}"]
        lines += [f"failure: {w}" for w in self.failures]
        lines.append("crossings: " + _histogram(self.crossing_counts))
        lines.append("components: " + _histogram(self.component_counts))
        if self.coloring_numbers:
            lines.append("coloring_numbers: " + _histogram(self.coloring_numbers))
        if self.alphabet == "x":
            lines.append(f"uncolorable_non_members: {len(self.uncolorable_non_members)}")
            lines += [f"example: {w}" for w in self.uncolorable_non_members[:5]]
        return "\n".join(lines)

    def to_json(self) -> str:
        data = {
            "alphabet": self.alphabet, "samples": self.samples, "members": self.members,
            "non_members": self.non_members, "passed": self.passed, "failures": self.failures,
            "crossings": _str_keys(self.crossing_counts),
            "components": _str_keys(self.component_counts),
            "uncolorable_non_members": self.uncolorable_non_members,
            "coloring_numbers": _str_keys(self.coloring_numbers),
        }
        return json.dumps(data, sort_keys=True)


def _order(k):
    return (0, k, "") if isinstance(k, int) else (1, 0, str(k))


def _histogram(c: Counter) -> str:
    return " ".join(f"{k}:{c[k]}" for k in sorted(c, key=_order)) or "none"


def _str_keys(c: Counter) -> dict[str, int]:
    return {str(k): c[k] for k in sorted(c, key=_order)}


def sample_words(samples: int, max_len: int, alphabet: str, seed: int):
    """Non-trivial random words, resampling any word that multiplies to the identity."""
    rng = random.Random(seed)
    for _ in range(samples):
        while True:
            word = random_word(rng.randint(1, max_len), alphabet, rng)
            g = word_to_element(word)
            if not g.is_identity():
                yield " ".join(word), g
                break


def sweep(samples: int, max_len: int = 12, alphabet: str = "w", seed: int = 42,
          bound: int = 0) -> SweepSummary:
    """Run :func:`verify_main_theorem` on random words.

    For the ``w`` alphabet every sample must pass.  For ``x`` only the
    members are held to that; non-members whose link has no non-constant
    3-coloring are collected as examples.  With ``bound >= 3`` the
    coloring number of every sampled link is tallied as well.
    """
    summary = SweepSummary(alphabet, samples)
    for word, g in sample_words(samples, max_len, alphabet, seed):
        report = verify_main_theorem(g)
        if bound >= 3:
            try:
                number = coloring_number(link_of(g), bound)
            except UnsupportedModulusError:
                number = "unsupported"
            summary.coloring_numbers["none" if number is None else number] += 1
        summary.crossing_counts[report.crossings] += 1
        summary.component_counts[report.components] += 1
        if report.member:
            summary.members += 1
            if report.passed:
                summary.passed += 1
            else:
                summary.failures.append(word)
        else:
            summary.non_members += 1
            if alphabet == "w":
                summary.failures.append(word)
            elif not report.three_colorable:
                summary.uncolorable_non_members.append(word)
    return summary
