"""Exact dual graded graphs: Z[q] arithmetic, label combinatorics, quantum
shuffle products, graph construction and verification, and the two-parameter
Hecke classifier. Everything is computed in exact integer arithmetic."""

from ._dgg import (
    QPoly,
    canonical_rep,
    classify_hecke,
    composition_of_word,
    compositions_of,
    cyclotomic_order,
    descent_set,
    dimension_check,
    divided_power_product,
    graph_dot,
    graph_json,
    instances,
    inversions,
    partitions_of,
    path_counts,
    permutations_of,
    q_binomial,
    q_factorial,
    q_int,
    qsym_product,
    shuffles,
    twisted_check,
    verify,
    __version__,
)

__all__ = [
    "QPoly",
    "canonical_rep",
    "classify_hecke",
    "composition_of_word",
    "compositions_of",
    "cyclotomic_order",
    "descent_set",
    "dimension_check",
    "divided_power_product",
    "graph_dot",
    "graph_json",
    "instances",
    "inversions",
    "partitions_of",
    "path_counts",
    "permutations_of",
    "q_binomial",
    "q_factorial",
    "q_int",
    "qsym_product",
    "shuffles",
    "twisted_check",
    "verify",
]
