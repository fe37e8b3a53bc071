"""Lexicographic enumeration of triangulated surfaces and 3-manifolds.

Triangulations are plain lists of facets; a facet is a list of vertex
labels starting at 1.  Everything heavy happens in the C++ core.
"""

from ._lextri import (
    admissible_pairs,
    admissible_triples,
    canonical_form,
    classify_3manifold,
    classify_surface,
    count,
    enumerate_3manifolds,
    enumerate_surfaces,
    euler_characteristic,
    f_vector,
    homology,
    is_isomorphic,
    parse,
    serialize,
    torus_like_pairs,
    verify,
)

__all__ = [
    "admissible_pairs",
    "admissible_triples",
    "canonical_form",
    "classify_3manifold",
    "classify_surface",
    "count",
    "enumerate_3manifolds",
    "enumerate_surfaces",
    "euler_characteristic",
    "f_vector",
    "homology",
    "is_isomorphic",
    "parse",
    "serialize",
    "torus_like_pairs",
    "verify",
]
