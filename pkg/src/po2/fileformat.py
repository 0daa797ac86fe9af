"""Text serialization of elements.

Layout (LF line endings)::

    PO2 v1
    orientation = preserve
    bound = 3
    row_shifts = 0,0
    col_shifts = 1,1
    map:
    1 2 -> 1 1
    2 2 -> 2 1
    end

Map lines are sorted by preimage; window points without a line are domain holes.
"""
from __future__ import annotations

import re

from .element import CanonicalElement, RawElement, normalize

HEADER = "PO2 v1"


class ParseError(ValueError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


_ORIENT_RE = re.compile(r"orientation = (preserve|flip)")
_BOUND_RE = re.compile(r"bound = (\d+)")
_MAP_RE = re.compile(r"(-?\d+) (-?\d+) -> (-?\d+) (-?\d+)")


def _shifts(line: str, lineno: int, name: str, count: int) -> tuple[int, ...]:
    prefix = f"{name} ="
    if line == prefix:
        items = []
    elif line.startswith(prefix + " "):
        items = line[len(prefix) + 1:].split(",")
    else:
        raise ParseError(lineno, f"expected '{prefix} d1,d2,...'")
    if len(items) != count:
        raise ParseError(lineno, f"{name} needs exactly {count} entries, got {len(items)}")
    out = []
    for item in items:
        if not item.isdigit():
            raise ParseError(lineno, f"{name} entry {item!r} is not a non-negative integer")
        out.append(int(item))
    return tuple(out)


def parse(text: str) -> RawElement:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for k, line in enumerate(lines, start=1):
        if "\r" in line:
            raise ParseError(k, "carriage return in input; lines must end with LF")

    def need(k: int) -> str:
        if k > len(lines):
            raise ParseError(k, "unexpected end of input")
        return lines[k - 1]

    if need(1) != HEADER:
        raise ParseError(1, f"expected header {HEADER!r}")
    m = _ORIENT_RE.fullmatch(need(2))
    if m is None:
        raise ParseError(2, "expected 'orientation = preserve|flip'")
    flipped = m.group(1) == "flip"
    m = _BOUND_RE.fullmatch(need(3))
    if m is None or int(m.group(1)) < 1:
        raise ParseError(3, "expected 'bound = B' with B >= 1")
    bound = int(m.group(1))
    row = _shifts(need(4), 4, "row_shifts", bound - 1)
    col = _shifts(need(5), 5, "col_shifts", bound - 1)
    if need(6) != "map:":
        raise ParseError(6, "expected 'map:'")

    window = {}
    prev = None
    k = 7
    while True:
        line = need(k)
        if line == "end":
            break
        m = _MAP_RE.fullmatch(line)
        if m is None:
            raise ParseError(k, "expected 'i j -> p q' or 'end'")
        i, j, p, q = (int(g) for g in m.groups())
        if min(i, j, p, q) < 1:
            raise ParseError(k, "coordinates must be >= 1")
        if not (i < bound and j < bound):
            raise ParseError(k, f"preimage ({i},{j}) outside the window [1,{bound})^2")
        key = (i, j)
        if key in window:
            raise ParseError(k, f"duplicate preimage ({i},{j})")
        if prev is not None and key < prev:
            raise ParseError(k, "map lines not sorted by preimage")
        window[key] = (p, q)
        prev = key
        k += 1
    if k != len(lines):
        raise ParseError(k + 1, "content after 'end'")
    return RawElement(bound, row, col, window, flipped)


def format_element(a: CanonicalElement) -> str:
    """Serialize the normalized form of ``a``."""
    a = normalize(a)
    c = a.core

    def vec(name, v):
        return f"{name} =" + (" " + ",".join(map(str, v)) if v else "")

    out = [
        HEADER,
        f"orientation = {'flip' if a.flipped else 'preserve'}",
        f"bound = {c.bound}",
        vec("row_shifts", c.row_shifts),
        vec("col_shifts", c.col_shifts),
        "map:",
    ]
    out += [f"{p.x} {p.y} -> {q.x} {q.y}" for p, q in c.entries]
    out.append("end")
    return "\n".join(out) + "\n"
