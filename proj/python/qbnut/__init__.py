"""Exact classification and enumeration of quartic bicirculant nut graphs."""

from ._core import (
    certificate,
    class_poly,
    classify,
    crosscheck,
    cyclotomic,
    edges,
    gen_specs,
    is_circulant,
    is_nut,
    is_vertex_transitive,
    kernel,
    normalize,
    nut_via_divisors,
    nut_via_finite_sets,
    poly_divides,
    residue_search,
    table_row,
    zero_multiplicity,
)

__all__ = [
    "certificate",
    "class_poly",
    "classify",
    "crosscheck",
    "cyclotomic",
    "edges",
    "gen_specs",
    "is_circulant",
    "is_nut",
    "is_vertex_transitive",
    "kernel",
    "normalize",
    "nut_via_divisors",
    "nut_via_finite_sets",
    "poly_divides",
    "residue_search",
    "table_row",
    "zero_multiplicity",
]

__version__ = "1.0.0"
