"""Monoid structure: generators, composition, units and idempotents."""
from __future__ import annotations

from .element import (
    CanonicalElement,
    CompositionInvariantError,
    PreservingCore,
    RawElement,
    ValidationError,
    _make_core,
    dom_holes,
    evaluate,
    normalize,
    normalize_core,
    ran_holes,
    semantic_eq,
    validate,
    window_square,
)
from .poset import Point

_IDENTITY_CORE = PreservingCore(1, (), (), ())


def identity() -> CanonicalElement:
    return CanonicalElement(_IDENTITY_CORE, False)


def varpi() -> CanonicalElement:
    """The coordinate swap ``(i, j) -> (j, i)``."""
    return CanonicalElement(_IDENTITY_CORE, True)


def alpha_v(l: int) -> CanonicalElement:
    """Shift the first ``l`` columns down by one; ``(1,1)..(l,1)`` leave the domain."""
    if l < 1:
        raise ValueError(f"alpha_v needs l >= 1, got {l}")
    window = {(i, j): (i, j - 1) for i in range(1, l + 1) for j in range(2, l + 1)}
    return validate(RawElement(l + 1, (0,) * l, (1,) * l, window, False))


def alpha_h(l: int) -> CanonicalElement:
    return transpose_conjugate(alpha_v(l))


def transpose_core(c: PreservingCore) -> PreservingCore:
    w = {Point(p[1], p[0]): Point(q[1], q[0]) for p, q in c.entries}
    return _make_core(c.bound, c.col_shifts, c.row_shifts, w)


def transpose_conjugate(a: CanonicalElement) -> CanonicalElement:
    """``varpi * a * varpi``."""
    return CanonicalElement(transpose_core(a.core), a.flipped)


def compose_cores(c1: PreservingCore, c2: PreservingCore) -> PreservingCore:
    """Core of ``c1`` followed by ``c2``, validated and normalized."""
    if c2.bound == 1:
        return normalize_core(c1)
    if c1.bound == 1:
        return normalize_core(c2)
    b = max(c1.bound, c2.bound + c1.max_shift)
    n = b - 1
    d1 = c1.row_shifts + (0,) * (n - len(c1.row_shifts))
    d2 = c2.row_shifts + (0,) * (n - len(c2.row_shifts))
    e1 = c1.col_shifts + (0,) * (n - len(c1.col_shifts))
    e2 = c2.col_shifts + (0,) * (n - len(c2.col_shifts))
    window = {}
    for p in window_square(b):
        q = c1.apply(*p)
        if q is None:
            continue
        r = c2.apply(*q)
        if r is not None:
            window[p] = r
    raw = RawElement(
        b,
        tuple(x + y for x, y in zip(d1, d2)),
        tuple(x + y for x, y in zip(e1, e2)),
        window,
    )
    try:
        out = validate(raw)
    except ValidationError as exc:
        raise CompositionInvariantError(f"composite failed validation: {exc}") from exc
    return normalize(out).core


def compose(a: CanonicalElement, b: CanonicalElement) -> CanonicalElement:
    """``a * b``: apply ``a`` first, then ``b``."""
    second = transpose_core(b.core) if a.flipped else b.core
    return CanonicalElement(compose_cores(a.core, second), a.flipped != b.flipped)


def power(a: CanonicalElement, k: int) -> CanonicalElement:
    if k < 0:
        raise ValueError("negative powers are undefined; the monoid is not inverse")
    out = identity()
    for _ in range(k):
        out = compose(out, a)
    return out


def compose_all(*elements: CanonicalElement) -> CanonicalElement:
    out = identity()
    for el in elements:
        out = compose(out, el)
    return out


def is_unit(a: CanonicalElement) -> bool:
    unit = not dom_holes(a)
    if unit:
        assert semantic_eq(a, identity()) or semantic_eq(a, varpi()), "unit outside {I, varpi}"
    return unit


def is_idempotent(a: CanonicalElement) -> bool:
    """Idempotents are exactly the identity maps on cofinite domains."""
    c = a.core
    if a.flipped or any(c.row_shifts) or any(c.col_shifts):
        return False
    return all(p == q for p, q in c.entries)


def _witness_range(a: CanonicalElement) -> range:
    # Past the bound the tail image of (n, 1) is (n - d_1, 1) for preserving
    # elements and (1, n - d_1) for flipped ones; only n <= B can land in H^1
    # in the flipped case, and n = B already represents the preserving case.
    return range(2, max(a.bound, 2) + 1)


def _dom_equals_ran(a: CanonicalElement) -> bool:
    return dom_holes(a) == ran_holes(a)


def idempotent_criterion_row(a: CanonicalElement) -> bool:
    """dom = ran and some ``(n, 1)`` with ``n > 1`` maps into the first row."""
    if not _dom_equals_ran(a):
        return False
    for n in _witness_range(a):
        q = evaluate(a, (n, 1))
        if q is not None and q[1] == 1:
            return True
    return False


def idempotent_criterion_column(a: CanonicalElement) -> bool:
    """dom = ran and some ``(1, m)`` with ``m > 1`` maps into the first column."""
    if not _dom_equals_ran(a):
        return False
    for m in _witness_range(a):
        q = evaluate(a, (1, m))
        if q is not None and q[0] == 1:
            return True
    return False


def is_idempotent_by_witness(a: CanonicalElement) -> bool:
    """Idempotency decided from domain/range equality plus a first-row witness.

    Independent of :func:`is_idempotent`; the row and column forms of the
    criterion are both evaluated and must agree.
    """
    row = idempotent_criterion_row(a)
    col = idempotent_criterion_column(a)
    assert row == col, "row and column idempotency criteria disagree"
    return row
