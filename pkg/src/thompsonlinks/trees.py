"""Rooted ordered trees of fixed arity.

Two concrete tree types share one set of algorithms: :class:`BinaryTree`
for Thompson's group F and :class:`QuaternaryTree` for the Brown-Thompson
group F(4).  Every function here is arity-generic and only looks at
``children``, ``n_leaves`` and the class attribute ``ARITY``.

Leaves are numbered 1..n left to right throughout the package.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence, TypeVar


class TreeParseError(ValueError):
    """Malformed tree notation; ``position`` is the offending offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True, slots=True)
class BinaryTree:
    """Leaf (no children) or caret with a left and a right subtree."""

    left: BinaryTree | None = None
    right: BinaryTree | None = None
    n_leaves: int = field(init=False, compare=False, repr=False)

    ARITY = 2

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise ValueError("a caret needs both children")
        n = 1 if self.left is None else self.left.n_leaves + self.right.n_leaves
        object.__setattr__(self, "n_leaves", n)

    @property
    def children(self) -> tuple[BinaryTree, ...]:
        return () if self.left is None else (self.left, self.right)

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @classmethod
    def from_children(cls, children: Sequence[BinaryTree]) -> BinaryTree:
        if not children:
            return LEAF
        left, right = children
        return cls(left, right)

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"BinaryTree({to_text(self)!r})"


@dataclass(frozen=True, slots=True)
class QuaternaryTree:
    """Leaf (empty ``children``) or caret with exactly four subtrees."""

    children: tuple[QuaternaryTree, ...] = ()
    n_leaves: int = field(init=False, compare=False, repr=False)

    ARITY = 4

    def __post_init__(self):
        if len(self.children) not in (0, 4):
            raise ValueError("a quaternary caret needs four children")
        n = 1 if not self.children else sum(c.n_leaves for c in self.children)
        object.__setattr__(self, "n_leaves", n)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @classmethod
    def from_children(cls, children: Sequence[QuaternaryTree]) -> QuaternaryTree:
        return cls(tuple(children)) if children else LEAF4

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"QuaternaryTree({to_text(self)!r})"


LEAF = BinaryTree()
LEAF4 = QuaternaryTree()

Tree = TypeVar("Tree", BinaryTree, QuaternaryTree)


def caret(*children):
    """Build a caret of the arity implied by the number of children."""
    if len(children) == 2:
        return BinaryTree(*children)
    return QuaternaryTree(tuple(children))


def leaf_of(t: Tree) -> Tree:
    return LEAF if t.ARITY == 2 else LEAF4


# -- text notation -----------------------------------------------------------

def parse_tree(text: str, arity: int = 2):
    """Parse ``T ::= "." | "(" T^arity ")"``; whitespace is ignored."""
    cls = BinaryTree if arity == 2 else QuaternaryTree
    leaf = LEAF if arity == 2 else LEAF4
    stack: list[list] = []
    result = None
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if result is not None:
            raise TreeParseError("trailing characters", pos)
        if ch == "(":
            stack.append([])
            continue
        if ch == ".":
            node = leaf
        elif ch == ")":
            if not stack:
                raise TreeParseError("unmatched ')'", pos)
            kids = stack.pop()
            if len(kids) != arity:
                raise TreeParseError(f"caret with {len(kids)} children, expected {arity}", pos)
            node = cls.from_children(kids)
        else:
            raise TreeParseError(f"unexpected character {ch!r}", pos)
        if stack:
            if len(stack[-1]) == arity:
                raise TreeParseError(f"caret with more than {arity} children", pos)
            stack[-1].append(node)
        else:
            result = node
    if stack or result is None:
        raise TreeParseError("unexpected end of input", len(text))
    return result


def to_text(t) -> str:
    parts: list[str] = []
    todo = [t]
    while todo:
        node = todo.pop()
        if isinstance(node, str):
            parts.append(node)
        elif node.is_leaf:
            parts.append(".")
        else:
            parts.append("(")
            todo.append(")")
            todo.extend(reversed(node.children))
    return "".join(parts)


# -- structure ---------------------------------------------------------------

def leaf_depths(t) -> list[int]:
    """Edge distance from each leaf to the root, leaves left to right."""
    depths: list[int] = []
    todo = [(t, 0)]
    while todo:
        node, d = todo.pop()
        if node.is_leaf:
            depths.append(d)
        else:
            todo.extend((c, d + 1) for c in reversed(node.children))
    return depths


def n_carets(t) -> int:
    return (t.n_leaves - 1) // (t.ARITY - 1)


def from_depths(depths: Sequence[int]) -> BinaryTree:
    """Inverse of :func:`leaf_depths` for binary trees."""
    pos = 0

    def build(d: int) -> BinaryTree:
        nonlocal pos
        if pos >= len(depths):
            raise ValueError("depth sequence is not a complete prefix code")
        if depths[pos] == d:
            pos += 1
            return LEAF
        if depths[pos] < d:
            raise ValueError("depth sequence is not a complete prefix code")
        left = build(d + 1)
        return BinaryTree(left, build(d + 1))

    tree = build(0)
    if pos != len(depths):
        raise ValueError("depth sequence is not a complete prefix code")
    return tree


def carets_at_leaves(t) -> set[int]:
    """Indices i such that leaves i..i+arity-1 are all children of one caret."""
    found: set[int] = set()

    def walk(node, first: int) -> None:
        if node.is_leaf:
            return
        if all(c.is_leaf for c in node.children):
            found.add(first)
            return
        for c in node.children:
            walk(c, first)
            first += c.n_leaves

    walk(t, 1)
    return found


def expand_leaf(t: Tree, i: int) -> Tree:
    """Replace leaf ``i`` by a caret of leaves."""
    if not 1 <= i <= t.n_leaves:
        raise IndexError(f"leaf index {i} out of range 1..{t.n_leaves}")
    leaf = leaf_of(t)
    return graft(t, {i: type(t).from_children([leaf] * t.ARITY)})


def collapse_caret(t: Tree, i: int) -> Tree:
    """Undo :func:`expand_leaf`: the caret over leaves i..i+arity-1 becomes a leaf."""

    def walk(node, first):
        if node.is_leaf:
            return node
        if first == i and all(c.is_leaf for c in node.children):
            return leaf_of(t)
        kids = []
        for c in node.children:
            if first <= i < first + c.n_leaves:
                kids.append(walk(c, first))
            else:
                kids.append(c)
            first += c.n_leaves
        return type(node).from_children(kids)

    out = walk(t, 1)
    if out.n_leaves == t.n_leaves:
        raise ValueError(f"no caret over leaves starting at {i}")
    return out


def graft(t: Tree, subtrees) -> Tree:
    """Replace leaves of ``t`` by subtrees.

    ``subtrees`` is either a sequence with one entry per leaf, or a mapping
    from 1-based leaf index to replacement; unmapped leaves are kept.
    """
    if isinstance(subtrees, dict):
        lookup = subtrees.get
    else:
        if len(subtrees) != t.n_leaves:
            raise ValueError("need exactly one subtree per leaf")
        lookup = lambda k: subtrees[k - 1]  # noqa: E731

    def walk(node, first):
        if node.is_leaf:
            sub = lookup(first)
            return node if sub is None else sub
        kids = []
        for c in node.children:
            kids.append(walk(c, first))
            first += c.n_leaves
        return type(node).from_children(kids)

    return walk(t, 1)


def common_refinement(s: Tree, t: Tree) -> Tree:
    """Smallest tree having both ``s`` and ``t`` as rooted subtrees."""
    if s.is_leaf:
        return t
    if t.is_leaf:
        return s
    return type(s).from_children(
        [common_refinement(a, b) for a, b in zip(s.children, t.children)]
    )


def subdivisions(t: Tree, u: Tree) -> list[Tree]:
    """Subtrees of ``u`` hanging below each leaf of ``t``; ``u`` must refine ``t``."""
    out: list[Tree] = []

    def walk(a, b):
        if a.is_leaf:
            out.append(b)
        elif b.is_leaf:
            raise ValueError("second tree does not refine the first")
        else:
            for x, y in zip(a.children, b.children):
                walk(x, y)

    walk(t, u)
    return out


def iter_carets(t) -> Iterator[tuple[object, int, int]]:
    """Yield ``(caret, first_leaf, depth)`` in preorder."""
    todo = [(t, 1, 0)]
    while todo:
        node, first, d = todo.pop()
        if node.is_leaf:
            continue
        yield node, first, d
        kids = []
        for c in node.children:
            kids.append((c, first, d + 1))
            first += c.n_leaves
        todo.extend(reversed(kids))


def random_tree(n_leaves: int, rng: random.Random, arity: int = 2):
    """Grow a tree by splitting a uniformly chosen leaf until it has ``n_leaves``."""
    if (n_leaves - 1) % (arity - 1):
        raise ValueError(f"{n_leaves} leaves impossible in arity {arity}")
    t = LEAF if arity == 2 else LEAF4
    while t.n_leaves < n_leaves:
        t = expand_leaf(t, rng.randint(1, t.n_leaves))
    return t
