"""Idempotents as a semilattice, keyed by their finite sets of domain holes."""
from __future__ import annotations

from typing import Iterable

from .element import CanonicalElement, RawElement, dom_holes, validate, window_square
from .ops import compose, is_idempotent
from .poset import make_point


class NotIdempotentError(ValueError):
    pass


def from_holes(holes: Iterable) -> CanonicalElement:
    """The identity map on the complement of ``holes``."""
    pts = {make_point(*p) for p in holes}
    bound = max((max(p) for p in pts), default=0) + 1
    window = {p: p for p in window_square(bound) if p not in pts}
    return validate(RawElement(bound, (0,) * (bound - 1), (0,) * (bound - 1), window))


def holes_of(e: CanonicalElement) -> frozenset:
    """Complement of the domain; an isomorphism onto finite subsets under union."""
    return dom_holes(e)


def _require_idempotent(*es: CanonicalElement) -> None:
    for e in es:
        if not is_idempotent(e):
            raise NotIdempotentError("semilattice operations need idempotent arguments")


def meet(e1: CanonicalElement, e2: CanonicalElement) -> CanonicalElement:
    _require_idempotent(e1, e2)
    return compose(e1, e2)


def natural_leq(e1: CanonicalElement, e2: CanonicalElement) -> bool:
    """``e1 <= e2`` iff ``e1 e2 = e2 e1 = e1``, i.e. dom e1 is inside dom e2."""
    _require_idempotent(e1, e2)
    return holes_of(meet(e1, e2)) == holes_of(e1)
