"""Parikh matrices of linear and circular words, with exact arithmetic."""

from ._core import (
    apply_e1,
    apply_e2,
    avg_count,
    binary_closed_form,
    canonicalize,
    circular_parikh_matrix,
    count_subword,
    direct_count,
    enumerate_necklaces,
    find_ce1,
    find_ce2,
    m_equivalent,
    matrix_json,
    matrix_key,
    necklace_count,
    parikh_matrix,
    parikh_vector,
    partition_by_matrix,
    rewrite_closure,
    run_suite,
    search_negative_minor,
    suite_names,
)

__all__ = [
    "apply_e1",
    "apply_e2",
    "avg_count",
    "binary_closed_form",
    "canonicalize",
    "circular_parikh_matrix",
    "count_subword",
    "direct_count",
    "enumerate_necklaces",
    "find_ce1",
    "find_ce2",
    "m_equivalent",
    "matrix_json",
    "matrix_key",
    "necklace_count",
    "parikh_matrix",
    "parikh_vector",
    "partition_by_matrix",
    "rewrite_closure",
    "run_suite",
    "search_negative_minor",
    "suite_names",
]
