"""Finite representation of monotone injective cofinite partial selfmaps of N x N.

Every element is stored as a *preserving core* plus an orientation flag.
A core with bound ``B`` acts by region:

* ``i, j >= B``: identity;
* row tail ``j < B <= i``: ``(i, j) -> (i - d_j, j)``;
* column tail ``i < B <= j``: ``(i, j) -> (i, j - e_i)``;
* window ``i, j < B``: an explicit finite table; absent points are domain holes.

A flipped element applies the core and then swaps the coordinates of the
result, so its domain equals the domain of its core.

Why every element has such a form: on each row band the map eventually maps
the band into itself, is order preserving and misses only finitely many band
points, so it is eventually a translation; past the stabilisation index of the
finitely many bands below ``n_alpha`` and past ``n_alpha`` itself the map is the
identity (or the swap). Any bound beyond all of these works.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Optional

from .poset import Point, flip_point, leq

# Fixed order in which validate() runs its checks; the first failure is reported.
CHECK_ORDER = (
    ("shape", "representation shape"),
    ("a", "window injective"),
    ("b", "window monotone"),
    ("c", "window below row tails"),
    ("d", "window below column tails"),
    ("e", "window below identity region"),
    ("f", "shift vectors non-increasing and in range"),
    ("g", "row and column tails disjoint"),
    ("h", "window images disjoint from tail images"),
)
CHECK_NAMES = dict(CHECK_ORDER)


class ValidationError(ValueError):
    """A raw element does not denote a member of the monoid.

    ``check`` is the code of the first failing check (see ``CHECK_ORDER``) and
    ``witness`` a pair of points exhibiting the failure.
    """

    def __init__(self, check: str, message: str, witness: tuple = ()):
        self.check = check
        self.witness = tuple(witness)
        super().__init__(f"[{check}] {CHECK_NAMES[check]}: {message}")


class CompositionInvariantError(RuntimeError):
    """A library-computed element failed validation; this is a bug, not bad input."""


@dataclass
class RawElement:
    """Unvalidated candidate; the input of :func:`validate`."""

    bound: int
    row_shifts: tuple
    col_shifts: tuple
    window: Mapping = field(default_factory=dict)
    flipped: bool = False


@dataclass(frozen=True)
class PreservingCore:
    bound: int
    row_shifts: tuple[int, ...]
    col_shifts: tuple[int, ...]
    # sorted (preimage, image) pairs
    entries: tuple[tuple[Point, Point], ...]

    @cached_property
    def window(self) -> dict[Point, Point]:
        return dict(self.entries)

    def apply(self, i: int, j: int) -> Optional[Point]:
        b = self.bound
        if i >= b:
            if j >= b:
                return Point(i, j)
            return Point(i - self.row_shifts[j - 1], j)
        if j >= b:
            return Point(i, j - self.col_shifts[i - 1])
        return self.window.get((i, j))

    @property
    def max_shift(self) -> int:
        return max(self.row_shifts + self.col_shifts, default=0)


@dataclass(frozen=True)
class CanonicalElement:
    """A validated element: ``core`` followed by the coordinate swap when ``flipped``.

    Build instances with :func:`validate` or the constructors in :mod:`po2.ops`.
    Dataclass equality compares representations; use :func:`semantic_eq` (or
    compare :func:`normalize` results) for equality of maps.
    """

    core: PreservingCore
    flipped: bool = False

    @property
    def bound(self) -> int:
        return self.core.bound

    def __call__(self, p) -> Optional[Point]:
        return evaluate(self, p)


def _make_core(bound, row_shifts, col_shifts, window) -> PreservingCore:
    entries = tuple(sorted((Point(*k), Point(*v)) for k, v in window.items()))
    return PreservingCore(bound, tuple(row_shifts), tuple(col_shifts), entries)


def _check_shape(r: RawElement) -> None:
    b = r.bound
    if isinstance(b, bool) or not isinstance(b, int) or b < 1:
        raise ValidationError("shape", f"bound must be a positive integer, got {b!r}")
    for name, vec in (("row_shifts", r.row_shifts), ("col_shifts", r.col_shifts)):
        if len(vec) != b - 1:
            raise ValidationError("shape", f"{name} has {len(vec)} entries, bound {b} needs {b - 1}")
        if any(isinstance(v, bool) or not isinstance(v, int) for v in vec):
            raise ValidationError("shape", f"{name} entries must be integers")
    for k, v in r.window.items():
        if not (1 <= k[0] < b and 1 <= k[1] < b):
            raise ValidationError("shape", f"window key {k} outside [1,{b})^2", (Point(*k),))
        if v[0] < 1 or v[1] < 1:
            raise ValidationError("shape", f"window image {tuple(v)} has a coordinate < 1", (Point(*k),))


def _check_window_monotone(b: int, w: Mapping) -> None:
    # Running maxima of image coordinates over the down-set of each window
    # point, propagated along covering steps; holes propagate too.
    best_x: dict = {}
    best_y: dict = {}
    for i in range(1, b):
        for j in range(1, b):
            bx = max((best_x[q] for q in ((i - 1, j), (i, j - 1)) if q in best_x), default=None)
            by = max((best_y[q] for q in ((i - 1, j), (i, j - 1)) if q in best_y), default=None)
            img = w.get((i, j))
            if img is not None:
                if bx is not None and img[0] < bx[0]:
                    raise ValidationError("b", f"{bx[1]} <= {(i, j)} but images not ordered",
                                          (bx[1], Point(i, j)))
                if by is not None and img[1] < by[0]:
                    raise ValidationError("b", f"{by[1]} <= {(i, j)} but images not ordered",
                                          (by[1], Point(i, j)))
                me = Point(i, j)
                bx = max(bx, (img[0], me)) if bx is not None else (img[0], me)
                by = max(by, (img[1], me)) if by is not None else (img[1], me)
            if bx is not None:
                best_x[(i, j)] = bx
                best_y[(i, j)] = by


def validate(r: RawElement) -> CanonicalElement:
    """Check that ``r`` denotes a monotone injective cofinite partial map.

    The finite check list is complete for the region form: every comparable
    pair of domain points falls in one of the checked region combinations, and
    for tail regions the binding comparison is at the first tail point.
    Raises :class:`ValidationError` at the first failing check.
    """
    _check_shape(r)
    b = r.bound
    d = tuple(r.row_shifts)
    e = tuple(r.col_shifts)
    w = {Point(*k): Point(*v) for k, v in r.window.items()}

    # (a)
    seen: dict = {}
    for k in sorted(w):
        v = w[k]
        if v in seen:
            raise ValidationError("a", f"{seen[v]} and {k} both map to {v}", (seen[v], k))
        seen[v] = k

    # (b)
    _check_window_monotone(b, w)

    # (c), (d), (e)
    for p in sorted(w):
        i, j = p
        q = w[p]
        for jj in range(j, b):
            tail = Point(b - d[jj - 1], jj)
            if not leq(q, tail):
                raise ValidationError("c", f"{p} -> {q} not below tail image {tail} of {(b, jj)}",
                                      (p, Point(b, jj)))
    for p in sorted(w):
        i, j = p
        q = w[p]
        for ii in range(i, b):
            tail = Point(ii, b - e[ii - 1])
            if not leq(q, tail):
                raise ValidationError("d", f"{p} -> {q} not below tail image {tail} of {(ii, b)}",
                                      (p, Point(ii, b)))
    # (e) is implied by (c) and (d) once the window is non-empty; kept as a guard.
    for p in sorted(w):
        if not leq(w[p], (b, b)):
            raise ValidationError("e", f"{p} -> {w[p]} not below {(b, b)}", (p, Point(b, b)))

    # (f)
    for name, vec, axis in (("row_shifts", d, "row"), ("col_shifts", e, "col")):
        for k, s in enumerate(vec, start=1):
            if s < 0 or s >= b:
                first = Point(b, k) if axis == "row" else Point(k, b)
                img = Point(b - s, k) if axis == "row" else Point(k, b - s)
                raise ValidationError("f", f"{name}[{k}] = {s} outside [0,{b})", (first, img))
        for k in range(1, len(vec)):
            if vec[k - 1] < vec[k]:
                if axis == "row":
                    wit = (Point(b, k), Point(b, k + 1))
                else:
                    wit = (Point(k, b), Point(k + 1, b))
                raise ValidationError("f", f"{name} increases at position {k}", wit)

    # (g)
    for i in range(1, b):
        for j in range(1, b):
            if i >= b - d[j - 1] and j >= b - e[i - 1]:
                raise ValidationError(
                    "g", f"row {j} tail and column {i} tail both reach {(i, j)}",
                    (Point(i + d[j - 1], j), Point(i, j + e[i - 1])))

    # (h)
    for p in sorted(w):
        x, y = w[p]
        other = None
        if x >= b and y >= b:
            other = Point(x, y)
        elif y < b and x >= b - d[y - 1]:
            other = Point(x + d[y - 1], y)
        elif x < b and y >= b - e[x - 1]:
            other = Point(x, y + e[x - 1])
        if other is not None:
            raise ValidationError("h", f"{p} and {other} both map to {(x, y)}", (p, other))

    return CanonicalElement(_make_core(b, d, e, w), bool(r.flipped))


def to_raw(a: CanonicalElement) -> RawElement:
    c = a.core
    return RawElement(c.bound, c.row_shifts, c.col_shifts, dict(c.entries), a.flipped)


def evaluate(a: CanonicalElement, p) -> Optional[Point]:
    """Image of ``p`` under ``a``, or ``None`` when ``p`` is not in the domain."""
    q = a.core.apply(p[0], p[1])
    if q is None or not a.flipped:
        return q
    return Point(q[1], q[0])


def window_square(b: int):
    return [Point(i, j) for i in range(1, b) for j in range(1, b)]


def dom_holes(a: CanonicalElement) -> frozenset[Point]:
    w = a.core.window
    return frozenset(p for p in window_square(a.bound) if p not in w)


def core_ran_holes(c: PreservingCore) -> frozenset[Point]:
    b = c.bound
    images = set(c.window.values())
    holes = set()
    for x, y in window_square(b):
        if (x, y) in images:
            continue
        if x >= b - c.row_shifts[y - 1]:
            continue
        if y >= b - c.col_shifts[x - 1]:
            continue
        holes.add(Point(x, y))
    return frozenset(holes)


def ran_holes(a: CanonicalElement) -> frozenset[Point]:
    holes = core_ran_holes(a.core)
    if a.flipped:
        return frozenset(flip_point(p) for p in holes)
    return holes


def pad_core(c: PreservingCore, new_bound: int) -> PreservingCore:
    """Re-express ``c`` with a larger bound; the denoted map is unchanged."""
    if new_bound < c.bound:
        raise ValueError(f"cannot pad bound {c.bound} down to {new_bound}")
    if new_bound == c.bound:
        return c
    extra = new_bound - c.bound
    w = dict(c.entries)
    for p in window_square(new_bound):
        if p[0] >= c.bound or p[1] >= c.bound:
            w[p] = c.apply(*p)
    return _make_core(new_bound, c.row_shifts + (0,) * extra, c.col_shifts + (0,) * extra, w)


def semantic_eq(a: CanonicalElement, b: CanonicalElement) -> bool:
    if a.flipped != b.flipped:
        return False
    top = max(a.bound, b.bound)
    return pad_core(a.core, top) == pad_core(b.core, top)


def _trimmable(c: PreservingCore) -> bool:
    b = c.bound
    if b == 1:
        return False
    k = b - 1
    d, e, w = c.row_shifts, c.col_shifts, c.window
    if d[k - 1] != 0 or e[k - 1] != 0:
        return False
    if w.get((k, k)) != (k, k):
        return False
    for i in range(1, k):
        if w.get((i, k)) != (i, k - e[i - 1]):
            return False
    for j in range(1, k):
        if w.get((k, j)) != (k - d[j - 1], j):
            return False
    return True


def normalize_core(c: PreservingCore) -> PreservingCore:
    while _trimmable(c):
        k = c.bound - 1
        entries = tuple(item for item in c.entries if item[0][0] < k and item[0][1] < k)
        c = PreservingCore(k, c.row_shifts[:-1], c.col_shifts[:-1], entries)
    return c


def normalize(a: CanonicalElement) -> CanonicalElement:
    """Smallest-bound representation of ``a``; it is unique per map."""
    core = normalize_core(a.core)
    if core is a.core:
        return a
    return CanonicalElement(core, a.flipped)


def n_alpha(a: CanonicalElement) -> int:
    """Least ``n`` with ``a`` equal to its eventual action (identity or swap) on the domain above ``(n, n)``."""
    c = a.core
    n = 1
    for j, s in enumerate(c.row_shifts, start=1):
        if s > 0:
            n = max(n, j + 1)
    for i, s in enumerate(c.col_shifts, start=1):
        if s > 0:
            n = max(n, i + 1)
    for p, q in c.entries:
        if p != q:
            n = max(n, min(p) + 1)
    return n


def orientation(a: CanonicalElement) -> str:
    return "flip" if a.flipped else "preserve"
