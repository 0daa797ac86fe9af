"""Green's relations.

The unit group is ``{I, varpi}``, and L/R/H/D reduce to comparisons against
the at most four elements ``a``, ``varpi a``, ``a varpi``, ``varpi a varpi``.
J coincides with D in this monoid, so ``j_related`` is the D decider.
"""
from __future__ import annotations

from dataclasses import dataclass

from .fileformat import format_element
from .element import CanonicalElement, n_alpha, normalize, orientation, semantic_eq
from .ops import compose, is_idempotent, is_unit, transpose_conjugate, varpi


@dataclass(frozen=True)
class GreenReport:
    orientation: str
    n_alpha: int
    is_unit: bool
    is_idempotent: bool
    h_class_size: int
    d_class_size: int
    d_class: tuple[CanonicalElement, ...]

    def summary(self) -> str:
        return (
            f"orientation={self.orientation} n_alpha={self.n_alpha} "
            f"unit={str(self.is_unit).lower()} idempotent={str(self.is_idempotent).lower()} "
            f"h_class_size={self.h_class_size} d_class_size={self.d_class_size}"
        )


def left_by_varpi(a: CanonicalElement) -> CanonicalElement:
    return compose(varpi(), a)


def right_by_varpi(a: CanonicalElement) -> CanonicalElement:
    return compose(a, varpi())


def l_related(a: CanonicalElement, b: CanonicalElement) -> bool:
    return semantic_eq(a, b) or semantic_eq(a, left_by_varpi(b))


def r_related(a: CanonicalElement, b: CanonicalElement) -> bool:
    return semantic_eq(a, b) or semantic_eq(a, right_by_varpi(b))


def h_related(a: CanonicalElement, b: CanonicalElement) -> bool:
    if semantic_eq(a, b):
        return True
    return semantic_eq(a, left_by_varpi(b)) and semantic_eq(a, right_by_varpi(b))


def d_related(a: CanonicalElement, b: CanonicalElement) -> bool:
    return any(semantic_eq(a, c) for c in _unit_orbit(b))


# D = J in this monoid; no search over two-sided ideals is needed.
j_related = d_related

RELATIONS = {"l": l_related, "r": r_related, "h": h_related, "d": d_related, "j": j_related}


def _unit_orbit(b: CanonicalElement) -> list[CanonicalElement]:
    wb = left_by_varpi(b)
    return [b, wb, right_by_varpi(b), right_by_varpi(wb)]


def h_class_size(a: CanonicalElement) -> int:
    return 2 if semantic_eq(a, transpose_conjugate(a)) else 1


def d_class(a: CanonicalElement) -> tuple[CanonicalElement, ...]:
    """Distinct members of the D-class of ``a``, normalized and in serialization order."""
    members = {normalize(c) for c in _unit_orbit(a)}
    return tuple(sorted(members, key=format_element))


def classify(a: CanonicalElement) -> GreenReport:
    members = d_class(a)
    return GreenReport(
        orientation=orientation(a),
        n_alpha=n_alpha(a),
        is_unit=is_unit(a),
        is_idempotent=is_idempotent(a),
        h_class_size=h_class_size(a),
        d_class_size=len(members),
        d_class=members,
    )
