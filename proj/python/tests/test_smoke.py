"""Smoke tests for the Python bindings (depth lives in the C++ suites)."""

import math

import limdist


def test_exact_counts():
    # involutions of S_4 by longest increasing subsequence length
    assert limdist.row_counts("inv", 4) == [1, 5, 3, 1]
    assert limdist.exact_count("inv", 6, 3) == 31
    # perfect matchings of S_20 total (2*10 - 1)!! = 654729075
    assert sum(limdist.row_counts("incr-fpf", 10)) == 654729075


def test_limit_law():
    # distribution function basics and the ensemble interrelation
    f1 = limdist.tracy_widom_cdf(1, -1.0)
    f2 = limdist.tracy_widom_cdf(2, -1.0)
    f4 = limdist.tracy_widom_cdf(4, -1.0)
    assert 0 < f1 < f2 < 1 and 0 < f4 < 1
    assert abs(f4 - 0.5 * (f1 + f2 / f1)) < 1e-10
    assert limdist.tw_derivative(1, 1, -1.0) > 0
    # GSE mean
    assert abs(limdist.tw_moment(4, 1) + 3.26242790285518) < 1e-9


def test_hard_edge_closed_form():
    s = 1.5
    e4 = limdist.hard_edge_gap(4, 4 * s * s, 1.0)
    assert abs(e4 - math.exp(-s * s / 2) * math.cosh(s)) < 1e-10
    p = limdist.poissonized_cdf("inv", 12, 5.0)
    assert 0.0 < p < 1.0


def test_expansion_tracks_exact_law():
    n, m = 250, 7
    counts = limdist.row_counts("inv", 40)
    total = sum(counts)
    # n = 40 spot check: the corrected CDF expansion beats the limit law
    cum, err0, errm = 0, 0.0, 0.0
    for l, c in enumerate(counts, start=1):
        cum += c
        exact = cum / total
        t = (l + 1 - 2 * math.sqrt(40)) / 40 ** (1 / 6)
        if exact < 1e-3 or not -6.0 <= t <= 2.5:
            continue
        err0 = max(err0, abs(exact - limdist.cdf_expansion("inv", 40, l, 0)))
        errm = max(errm, abs(exact - limdist.cdf_expansion("inv", 40, l, m)))
    assert errm < 0.2 * err0
    mean, var = limdist.mean_variance("inv", n, m)
    assert abs(mean - 2 * math.sqrt(n)) < 3 * n ** (1 / 6)
    assert var > 0


def test_sampling_is_deterministic():
    h1 = limdist.sample_histogram("decr-fpf", 30, 2000, seed=11, threads=1)
    h2 = limdist.sample_histogram("decr-fpf", 30, 2000, seed=11, threads=3)
    assert h1 == h2
    assert sum(h1.values()) == 2000
    assert all(l % 2 == 0 for l in h1)  # decreasing lengths are even


def test_reconstruction_report():
    import json

    rep = json.loads(limdist.reconstruct_coefficients(0.25, 1))
    assert rep["pass"] is True
    assert rep["coefficients"] == [[-2, 5]]
