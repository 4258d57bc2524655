"""Exact k-families, saturated chain partitions and polyunsaturated posets."""

from ._polysat import (
    Poset,
    PolysatError,
    build_pj,
    conjugate,
    count_posets,
    d_sequence,
    delta_sequence,
    disjoint_union,
    dk,
    feasible_ca,
    feasible_nc,
    feasible_nca,
    from_delta,
    height,
    is_polyunsaturated,
    is_strong_sperner,
    isomorphic,
    lower_bounds,
    min_total_norm,
    pj_realizer,
    sequence_for,
    upper_bounds,
    verify_realizer,
    width,
)

__all__ = [
    "Poset",
    "PolysatError",
    "build_pj",
    "conjugate",
    "count_posets",
    "d_sequence",
    "delta_sequence",
    "disjoint_union",
    "dk",
    "feasible_ca",
    "feasible_nc",
    "feasible_nca",
    "from_delta",
    "height",
    "is_polyunsaturated",
    "is_strong_sperner",
    "isomorphic",
    "lower_bounds",
    "min_total_norm",
    "pj_realizer",
    "sequence_for",
    "upper_bounds",
    "verify_realizer",
    "width",
]
