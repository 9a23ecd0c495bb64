"""Dyadic piecewise-linear maps of [0, 1], used as an oracle for F."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate

from .trees import leaf_depths


@dataclass(frozen=True)
class PLMap:
    """Increasing homeomorphism of [0, 1] given by breakpoints ``(x, y)``."""

    points: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if self.points[0] != (0, 0) or self.points[-1] != (1, 1):
            raise ValueError("map must fix 0 and 1")
        for (x0, y0), (x1, y1) in zip(self.points, self.points[1:]):
            if not (x1 > x0 and y1 > y0):
                raise ValueError("breakpoints must be strictly increasing")

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        if not 0 <= x <= 1:
            raise ValueError("argument outside [0, 1]")
        xs = [p[0] for p in self.points]
        k = min(bisect_right(xs, x), len(xs) - 1)
        (x0, y0), (x1, y1) = self.points[k - 1], self.points[k]
        return y0 + (x - x0) * (y1 - y0) / (x1 - x0)

    def scaled(self, bits: int):
        """Exact integer evaluator for a dyadic map.

        Returns ``f`` with ``f(X) = self(X / 2**bits) * 2**bits`` for integer
        ``X``.  Raises ``ValueError`` if a breakpoint, slope or value is not
        representable at this precision.
        """
        scale = 1 << bits
        xs, ys, shifts = [], [], []
        for (x0, y0), s in zip(self.points, self.slopes()):
            if (x0 * scale).denominator != 1 or (y0 * scale).denominator != 1:
                raise ValueError(f"breakpoint not representable with {bits} bits")
            num, den = s.numerator, s.denominator
            if num & (num - 1) or den & (den - 1):
                raise ValueError(f"slope {s} is not a power of two")
            xs.append(int(x0 * scale))
            ys.append(int(y0 * scale))
            shifts.append(num.bit_length() - den.bit_length())

        def evaluate(x: int) -> int:
            if not 0 <= x <= scale:
                raise ValueError("argument outside [0, 1]")
            k = bisect_right(xs, x) - 1
            if k == len(xs):
                k -= 1
            dx, e = x - xs[k], shifts[k]
            if e >= 0:
                return ys[k] + (dx << e)
            if dx & ((1 << -e) - 1):
                raise ValueError(f"value not representable with {bits} bits")
            return ys[k] + (dx >> -e)

        return evaluate

    def slopes(self) -> list[Fraction]:
        return [(y1 - y0) / (x1 - x0)
                for (x0, y0), (x1, y1) in zip(self.points, self.points[1:])]

    def simplified(self) -> PLMap:
        """Drop breakpoints where the slope does not change."""
        pts = [self.points[0]]
        for p, q in zip(self.points[1:], self.points[2:]):
            (x0, y0) = pts[-1]
            if (p[1] - y0) * (q[0] - p[0]) != (q[1] - p[1]) * (p[0] - x0):
                pts.append(p)
        pts.append(self.points[-1])
        return PLMap(tuple(pts))

    def inverse(self) -> PLMap:
        return PLMap(tuple((y, x) for x, y in self.points))

    def then(self, other: PLMap) -> PLMap:
        """``x -> other(self(x))``."""
        xs = {x for x, _ in self.points}
        xs |= {self.inverse()(x) for x, _ in other.points}
        return PLMap(tuple((x, other(self(x))) for x in sorted(xs)))


def _partition(tree) -> list[Fraction]:
    widths = [Fraction(1, 2 ** d) for d in leaf_depths(tree)]
    return [Fraction(0)] + list(accumulate(widths))


def pl_map(g) -> PLMap:
    """Map sending the plus-tree's dyadic partition onto the minus-tree's.

    Accepts an :class:`~thompsonlinks.group.Element` or any tree diagram.
    """
    d = getattr(g, "diagram", g)
    return PLMap(tuple(zip(_partition(d.plus), _partition(d.minus))))


def dyadic_grid(level: int = 10) -> list[Fraction]:
    return [Fraction(k, 2 ** level) for k in range(2 ** level + 1)]
