"""Tree diagrams and Thompson's group F.

A :class:`TreeDiagram` is a pair ``(plus, minus)`` of trees with equal
leaf counts.  An :class:`Element` of F is the class of a diagram under
caret insertion/reduction and always stores the unique reduced one, so
structural equality of elements is group equality.

Products act left to right: ``a * b`` applies ``a`` first, matching the
piecewise-linear picture in :mod:`thompsonlinks.plmap`.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable

from .trees import (
    LEAF,
    LEAF4,
    BinaryTree,
    QuaternaryTree,
    TreeParseError,
    carets_at_leaves,
    collapse_caret,
    common_refinement,
    expand_leaf,
    graft,
    parse_tree,
    random_tree,
    subdivisions,
    to_text,
)


class WordParseError(ValueError):
    pass


@dataclass(frozen=True)
class TreeDiagram:
    plus: BinaryTree | QuaternaryTree
    minus: BinaryTree | QuaternaryTree

    def __post_init__(self):
        if self.plus.n_leaves != self.minus.n_leaves:
            raise ValueError(
                f"leaf counts differ: {self.plus.n_leaves} vs {self.minus.n_leaves}"
            )
        if self.plus.ARITY != self.minus.ARITY:
            raise ValueError("trees of different arity")

    @property
    def n_leaves(self) -> int:
        return self.plus.n_leaves

    def reducible_positions(self) -> list[int]:
        return sorted(carets_at_leaves(self.plus) & carets_at_leaves(self.minus))

    def is_reduced(self) -> bool:
        return not self.reducible_positions()

    def inverse(self) -> TreeDiagram:
        return TreeDiagram(self.minus, self.plus)

    def __str__(self) -> str:
        return f"pair {to_text(self.plus)} {to_text(self.minus)}"


def reduce(d: TreeDiagram, rng: random.Random | None = None) -> TreeDiagram:
    """Remove common carets until none is left.

    With ``rng`` the reducible caret is picked at random each round; the
    result does not depend on the order.
    """
    plus, minus = d.plus, d.minus
    while True:
        common = sorted(carets_at_leaves(plus) & carets_at_leaves(minus))
        if not common:
            return TreeDiagram(plus, minus)
        i = rng.choice(common) if rng is not None else common[0]
        plus = collapse_caret(plus, i)
        minus = collapse_caret(minus, i)


def insert_caret(d: TreeDiagram, i: int) -> TreeDiagram:
    return TreeDiagram(expand_leaf(d.plus, i), expand_leaf(d.minus, i))


def multiply_diagrams(a: TreeDiagram, b: TreeDiagram) -> TreeDiagram:
    """Reduced product diagram, any arity."""
    u = common_refinement(a.minus, b.plus)
    plus = graft(a.plus, subdivisions(a.minus, u))
    minus = graft(b.minus, subdivisions(b.plus, u))
    return reduce(TreeDiagram(plus, minus))


@dataclass(frozen=True)
class Element:
    """Element of Thompson's group F, held as its reduced binary diagram."""

    diagram: TreeDiagram

    def __post_init__(self):
        if self.diagram.plus.ARITY != 2:
            raise ValueError("elements of F use binary trees")
        if not self.diagram.is_reduced():
            object.__setattr__(self, "diagram", reduce(self.diagram))

    @classmethod
    def from_trees(cls, plus, minus) -> Element:
        if isinstance(plus, str):
            plus = parse_tree(plus)
        if isinstance(minus, str):
            minus = parse_tree(minus)
        return cls(TreeDiagram(plus, minus))

    @property
    def plus(self) -> BinaryTree:
        return self.diagram.plus

    @property
    def minus(self) -> BinaryTree:
        return self.diagram.minus

    @property
    def n_leaves(self) -> int:
        return self.diagram.n_leaves

    def is_identity(self) -> bool:
        return self.diagram.n_leaves == 1

    def inverse(self) -> Element:
        return Element(self.diagram.inverse())

    def __mul__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        return Element(multiply_diagrams(self.diagram, other.diagram))

    def __pow__(self, k: int) -> Element:
        base = self if k >= 0 else self.inverse()
        out = identity()
        for _ in range(abs(k)):
            out = out * base
        return out

    def __str__(self) -> str:
        return str(self.diagram)


def identity() -> Element:
    return Element(TreeDiagram(LEAF, LEAF))


def multiply(a: Element, b: Element) -> Element:
    return a * b


def inverse(g: Element) -> Element:
    return g.inverse()


def product(elements: Iterable[Element]) -> Element:
    out = identity()
    for g in elements:
        out = out * g
    return out


# -- generators --------------------------------------------------------------

def _right_spine(t, depth: int, leaf):
    for _ in range(depth):
        if leaf is LEAF:
            t = BinaryTree(LEAF, t)
        else:
            t = QuaternaryTree((leaf, leaf, leaf, t))
    return t


def generator_x(i: int) -> Element:
    """Standard generator x_i of F."""
    if i < 0:
        raise ValueError("generator index must be nonnegative")
    a = BinaryTree(BinaryTree(LEAF, LEAF), LEAF)
    b = BinaryTree(LEAF, BinaryTree(LEAF, LEAF))
    return Element(TreeDiagram(_right_spine(a, i, LEAF), _right_spine(b, i, LEAF)))


def quaternary_generator(i: int) -> TreeDiagram:
    """Generator y_i of F(4) as a quaternary tree pair."""
    if not 0 <= i <= 3:
        raise ValueError("F(4) generators are y_0..y_3")
    q = QuaternaryTree((LEAF4,) * 4)
    a = QuaternaryTree((q, LEAF4, LEAF4, LEAF4))
    b = QuaternaryTree((LEAF4, LEAF4, LEAF4, q))
    return TreeDiagram(_right_spine(a, i, LEAF4), _right_spine(b, i, LEAF4))


def balanced_replacement(children):
    left, right = BinaryTree(children[0], children[1]), BinaryTree(children[2], children[3])
    return BinaryTree(left, right)


def comb_replacement(children):
    return BinaryTree(children[0], BinaryTree(children[1], BinaryTree(children[2], children[3])))


def binary_of(q: QuaternaryTree, replacement=balanced_replacement) -> BinaryTree:
    """Replace every quaternary caret by a 4-leaf binary tree."""
    if q.is_leaf:
        return LEAF
    return replacement([binary_of(c, replacement) for c in q.children])


def embed_f4_diagram(d: TreeDiagram, replacement=balanced_replacement) -> TreeDiagram:
    """Caret-replaced binary diagram, not reduced."""
    if d.plus.ARITY != 4:
        raise ValueError("expected a quaternary tree pair")
    return TreeDiagram(binary_of(d.plus, replacement), binary_of(d.minus, replacement))


def embed_f4(d: TreeDiagram, replacement=balanced_replacement) -> Element:
    return Element(embed_f4_diagram(d, replacement))


def generator_w(i: int) -> Element:
    """Generator w_i of the 3-colorable subgroup, the image of y_i."""
    return embed_f4(quaternary_generator(i))


# -- words -------------------------------------------------------------------

ALPHABETS = {
    "x": ("x0", "x1"),
    "w": ("w0", "w1", "w2", "w3"),
}

_TOKEN = re.compile(r"^([xw])(\d+)(\^-1|')?$")


def _generator(name: str, index: int) -> Element:
    if name == "x" and index <= 1:
        return generator_x(index)
    if name == "w" and index <= 3:
        return generator_w(index)
    raise WordParseError(f"unknown generator {name}{index}")


def parse_word(word: str | Iterable[str]) -> list[tuple[str, int, int]]:
    """Tokens as ``(letter, index, exponent)`` with exponent +1 or -1."""
    tokens = word.split() if isinstance(word, str) else list(word)
    out = []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if not m:
            raise WordParseError(f"unknown token {tok!r}")
        letter, index = m.group(1), int(m.group(2))
        _generator(letter, index)
        out.append((letter, index, -1 if m.group(3) else 1))
    return out


def word_to_element(word: str | Iterable[str]) -> Element:
    out = identity()
    for letter, index, exp in parse_word(word):
        g = _generator(letter, index)
        out = out * (g if exp > 0 else g.inverse())
    return out


def parse_element(text: str) -> Element:
    """Either ``pair <plus> <minus>`` or a generator word."""
    parts = text.split(None, 1)
    if parts and parts[0] == "pair":
        rest = parts[1] if len(parts) > 1 else ""
        plus_text, minus_text = _split_two_trees(rest)
        return Element.from_trees(parse_tree(plus_text), parse_tree(minus_text))
    return word_to_element(text)


def _split_two_trees(text: str) -> tuple[str, str]:
    stripped = "".join(text.split())
    depth = 0
    for k, ch in enumerate(stripped):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch != ".":
            raise TreeParseError(f"unexpected character {ch!r}", k)
        if depth == 0:
            return stripped[: k + 1], stripped[k + 1:]
    raise TreeParseError("unexpected end of input", len(stripped))


def random_word(length: int, alphabet: str, rng: random.Random) -> list[str]:
    gens = ALPHABETS[alphabet]
    return [rng.choice(gens) + rng.choice(("", "^-1")) for _ in range(length)]


def random_element(length: int, alphabet: str = "w", seed: int | random.Random = 0) -> Element:
    """Product of ``length`` uniform generator-or-inverse tokens."""
    if length < 1:
        raise ValueError("word length must be positive")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return word_to_element(random_word(length, alphabet, rng))


def random_diagram(n_leaves: int, rng: random.Random) -> TreeDiagram:
    """Two independent random binary trees; generally not reduced."""
    return TreeDiagram(random_tree(n_leaves, rng), random_tree(n_leaves, rng))
