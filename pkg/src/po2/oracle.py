"""Brute-force checks on truncated grids and seeded random elements.

Nothing here relies on the region structure that :func:`po2.element.validate`
reasons about: maps are tabulated point by point on ``[1, M]^2`` and checked
directly.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .element import CanonicalElement, RawElement, evaluate
from .ops import alpha_h, alpha_v, compose, identity, varpi
from .poset import Point
from .semilattice import from_holes

DEFAULT_SEED = 20240229


@dataclass
class GridMap:
    size: int
    table: dict = field(default_factory=dict)

    def points(self):
        m = self.size
        return (Point(i, j) for i in range(1, m + 1) for j in range(1, m + 1))


def grid_project(a: CanonicalElement, m: int) -> GridMap:
    if m < 1:
        raise ValueError("grid size must be >= 1")
    table = {}
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            q = evaluate(a, (i, j))
            if q is not None and q[0] <= m and q[1] <= m:
                table[Point(i, j)] = q
    return GridMap(m, table)


def monotone_violation(g: GridMap):
    """First pair ``p <= q`` (both tabulated) with images out of order, else ``None``.

    Sweeps the grid once, carrying the componentwise maxima of images over
    each point's down-set along the two covering steps. Untabulated points
    still pass the maxima on, so comparable pairs separated by holes are seen.
    """
    m = g.size
    t = g.table
    bx: dict = {}
    by: dict = {}
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            cx = [bx[q] for q in ((i - 1, j), (i, j - 1)) if q in bx]
            cy = [by[q] for q in ((i - 1, j), (i, j - 1)) if q in by]
            mx = max(cx) if cx else None
            my = max(cy) if cy else None
            img = t.get((i, j))
            if img is not None:
                if mx is not None and img[0] < mx[0]:
                    return mx[1], Point(i, j)
                if my is not None and img[1] < my[0]:
                    return my[1], Point(i, j)
                here = Point(i, j)
                mx = max(mx, (img[0], here)) if mx else (img[0], here)
                my = max(my, (img[1], here)) if my else (img[1], here)
            if mx is not None:
                bx[(i, j)] = mx
                by[(i, j)] = my
    return None


def grid_monotone_check(g: GridMap) -> bool:
    return monotone_violation(g) is None


def grid_injective_check(g: GridMap) -> bool:
    return len(set(g.table.values())) == len(g.table)


def pointwise_compose(g1: GridMap, g2: GridMap) -> GridMap:
    """Apply ``g1`` then ``g2`` wherever both legs are tabulated."""
    if g1.size != g2.size:
        raise ValueError("grid sizes differ")
    t2 = g2.table
    return GridMap(g1.size, {p: t2[q] for p, q in g1.table.items() if q in t2})


def random_element(seed, word_len: int) -> CanonicalElement:
    """Fold a seeded random word over varpi, alpha_V^l, alpha_H^l (l <= 5) and small idempotents."""
    if word_len < 0:
        raise ValueError("word_len must be >= 0")
    rng = random.Random(seed)
    out = identity()
    for _ in range(word_len):
        out = compose(out, random_primitive(rng))
    return out


def random_primitive(rng: random.Random) -> CanonicalElement:
    kind = rng.randrange(4)
    if kind == 0:
        return varpi()
    if kind == 1:
        return alpha_v(rng.randint(1, 5))
    if kind == 2:
        return alpha_h(rng.randint(1, 5))
    square = [(i, j) for i in range(1, 7) for j in range(1, 7)]
    return from_holes(rng.sample(square, rng.randint(0, 3)))


def random_idempotent(rng: random.Random, side: int = 6, max_holes: int = 4) -> CanonicalElement:
    square = [(i, j) for i in range(1, side + 1) for j in range(1, side + 1)]
    return from_holes(rng.sample(square, rng.randint(0, max_holes)))


# Raw (unvalidated) elements -------------------------------------------------

def raw_apply(r: RawElement, i: int, j: int):
    """Region dispatch on raw data, with no sanity checks on the result."""
    b = r.bound
    if i >= b and j >= b:
        q = (i, j)
    elif i >= b:
        q = (i - r.row_shifts[j - 1], j)
    elif j >= b:
        q = (i, j - r.col_shifts[i - 1])
    else:
        q = r.window.get((i, j))
        if q is None:
            return None
    return (q[1], q[0]) if r.flipped else (q[0], q[1])


def raw_verdict_grid_size(r: RawElement) -> int:
    s = max((abs(v) for v in tuple(r.row_shifts) + tuple(r.col_shifts)), default=0)
    return 2 * r.bound + 2 * s


def raw_grid_verdict(r: RawElement, m: int | None = None) -> tuple[bool, str]:
    """Judge a raw element by tabulating it on ``[1, m]^2``.

    Fails on an image outside N x N (tail descriptor inconsistent), on a
    collision, or on a comparable pair whose images are out of order.
    """
    if m is None:
        m = raw_verdict_grid_size(r)
    table = {}
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            q = raw_apply(r, i, j)
            if q is None:
                continue
            if q[0] < 1 or q[1] < 1:
                return False, f"tail: ({i},{j}) -> {q} leaves N x N"
            table[Point(i, j)] = Point(*q)
    g = GridMap(m, table)
    if not grid_injective_check(g):
        return False, "injectivity"
    bad = monotone_violation(g)
    if bad is not None:
        return False, f"monotonicity: {bad[0]} <= {bad[1]}"
    return True, "ok"


def mutate(a: CanonicalElement, rng: random.Random) -> tuple[RawElement, str]:
    """Corrupt one shift entry, one window image, or the flag of ``a``."""
    c = a.core
    b = c.bound
    d, e = list(c.row_shifts), list(c.col_shifts)
    window = dict(c.entries)
    kinds = ["flag"]
    if b > 1:
        kinds += ["row_shift", "col_shift"]
    if window:
        kinds.append("window")
    kind = rng.choice(kinds)
    flipped = a.flipped
    if kind == "flag":
        flipped = not flipped
    elif kind == "row_shift":
        d[rng.randrange(b - 1)] = rng.randint(-1, b)
    elif kind == "col_shift":
        e[rng.randrange(b - 1)] = rng.randint(-1, b)
    else:
        key = rng.choice(sorted(window))
        window[key] = (rng.randint(1, b), rng.randint(1, b))
    return RawElement(b, tuple(d), tuple(e), window, flipped), kind
