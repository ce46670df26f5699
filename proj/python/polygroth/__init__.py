"""Exact Grothendieck-ring invariants of rational polyhedra and constructible sets."""

from ._core import (
    ConstructibleSet,
    DomainError,
    Error,
    InvariantError,
    ParseError,
    Polyhedron,
    ResourceError,
    UnsupportedError,
    UsageError,
    bg_terms,
    bg_verify,
    chi_gamma,
    class_text,
    euler_pair,
    face_count,
    from_polyhedron,
    lineality,
    motivic,
    parse_polyhedron,
    parse_set,
    product,
    run_checks,
    sets_equal,
    ungraded,
)

__all__ = [name for name in dir() if not name.startswith("_")]
