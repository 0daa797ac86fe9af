"""Exact computations in the monoid of monotone injective partial selfmaps of
N x N (product order) with cofinite domain and image."""
from .element import (
    CanonicalElement,
    CompositionInvariantError,
    PreservingCore,
    RawElement,
    ValidationError,
    dom_holes,
    evaluate,
    n_alpha,
    normalize,
    orientation,
    ran_holes,
    semantic_eq,
    validate,
)
from .fileformat import ParseError, format_element, parse
from .green import (
    GreenReport,
    classify,
    d_class,
    d_related,
    h_class_size,
    h_related,
    j_related,
    l_related,
    r_related,
)
from .ops import (
    alpha_h,
    alpha_v,
    compose,
    identity,
    is_idempotent,
    is_idempotent_by_witness,
    is_unit,
    power,
    transpose_conjugate,
    varpi,
)
from .poset import Band, Point, band_membership, flip_point, leq, strictly_less
from .semilattice import NotIdempotentError, from_holes, holes_of, meet, natural_leq

__version__ = "0.1.0"
