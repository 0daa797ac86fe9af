"""The poset of pairs of positive integers under the product order."""
from __future__ import annotations

import enum
import re
from typing import NamedTuple


class Point(NamedTuple):
    """A point ``(x, y)`` of N x N.

    Tuple comparison (``<``, ``sorted``) is lexicographic and only used as a
    storage order. Use :func:`leq` for the poset order.
    """

    x: int
    y: int

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


def make_point(x: int, y: int) -> Point:
    if isinstance(x, bool) or isinstance(y, bool) or not isinstance(x, int) or not isinstance(y, int):
        raise TypeError(f"point coordinates must be integers, got ({x!r},{y!r})")
    if x < 1 or y < 1:
        raise ValueError(f"point coordinates must be >= 1, got ({x},{y})")
    return Point(x, y)


_POINT_RE = re.compile(r"\((-?\d+),(-?\d+)\)")


def parse_point(text: str) -> Point:
    """Parse the ``(i,j)`` syntax (no interior spaces)."""
    m = _POINT_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"malformed point {text!r}; expected '(i,j)'")
    return make_point(int(m.group(1)), int(m.group(2)))


def leq(p: tuple[int, int], q: tuple[int, int]) -> bool:
    return p[0] <= q[0] and p[1] <= q[1]


def strictly_less(p: tuple[int, int], q: tuple[int, int]) -> bool:
    return leq(p, q) and tuple(p) != tuple(q)


def flip_point(p: tuple[int, int]) -> Point:
    return Point(p[1], p[0])


def flip_set(points) -> frozenset[Point]:
    return frozenset(flip_point(p) for p in points)


class Band(enum.Enum):
    IN_V_N = "in_V_n"
    IN_H_N = "in_H_n"
    NEITHER = "neither"
    BOTH = "both"


def band_membership(p: tuple[int, int], n: int) -> Band:
    """Locate ``p`` relative to column band ``V^n`` (x == n) and row band ``H^n`` (y == n)."""
    in_v = p[0] == n
    in_h = p[1] == n
    if in_v and in_h:
        return Band.BOTH
    if in_v:
        return Band.IN_V_N
    if in_h:
        return Band.IN_H_N
    return Band.NEITHER
