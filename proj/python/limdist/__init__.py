"""Longest monotone subsequences of random involutions.

Exact finite-n length distributions, Tracy-Widom limit laws, hard-edge
determinants, and higher-order asymptotic expansions, backed by the C++
core.
"""

from ._limdist import (
    CASES,
    cdf_expansion,
    exact_count,
    hard_edge_gap,
    mean_variance,
    pdf_expansion,
    poissonized_cdf,
    reconstruct_coefficients,
    row_counts,
    sample_histogram,
    tracy_widom_cdf,
    tw_derivative,
    tw_moment,
    validate,
)

__all__ = [
    "CASES",
    "cdf_expansion",
    "exact_count",
    "hard_edge_gap",
    "mean_variance",
    "pdf_expansion",
    "poissonized_cdf",
    "reconstruct_coefficients",
    "row_counts",
    "sample_histogram",
    "tracy_widom_cdf",
    "tw_derivative",
    "tw_moment",
    "validate",
]
