#pragma once
// Independent combinatorial ground truth: involution enumeration, longest
// monotone subsequence lengths, standard Young tableau counting via the
// hook length formula, the RSK counting sums, the Goulden alternating sum
// for the involution case, and the fixed-l large-n closed-form estimates.

#include "limdist/cases.hpp"
#include "limdist/series.hpp"

#include <functional>
#include <vector>

namespace limdist {

using Permutation = std::vector<int>;  // 0-based values, p[i] = sigma(i+1)-1

bool is_involution(const Permutation& p);

// Streams each involution of S_n exactly once (fixed-point-free ones only if
// requested). Guarded to n <= 14 (I_14 ~ 2.4e6).
void enumerate_involutions(int n, bool fixed_point_free,
                           const std::function<void(const Permutation&)>& visit);

enum class Direction { Increasing, Decreasing };

// Patience sorting, O(n log n); Decreasing computed on the value-reversed
// permutation.
int monotone_subseq_length(const Permutation& p, Direction d);
// O(n^2) dynamic-programming oracle for tests.
int monotone_subseq_length_dp(const Permutation& p, Direction d);

using Partition = std::vector<int>;  // weakly decreasing positive parts

// Number of standard Young tableaux of shape lambda (hook length formula).
Int syt_count(const Partition& lambda);

// Streams all partitions of n. Guarded to n <= 40.
void enumerate_partitions(int n, const std::function<void(const Partition&)>& visit);

// RSK counting sums:
//   inv      : |{L_n = l}|  = sum over lambda |- n with lambda_1 = l of d_lambda
//   incr-fpf : |{L_n = l}|  = sum over lambda |- n with length(lambda) = l of d_{2 lambda}
//   decr-fpf : |{L_n = 2l}| = sum over lambda |- n with lambda_1 = l of d_{2 lambda}
// where 2*lambda doubles every part. For the fixed-point-free cases the
// underlying permutations have 2n elements.
Int rsk_count(Case c, int n, int l);

// Goulden's alternating double sum for |{L_n^inv = l}|, valid for l >= (n-1)/2.
Int goulden_count(int n, int l);

// Leading-order fixed-l estimates of |{L_n <= l}| as n -> infinity
// (fpf cases count involutions of S_{2n}). regev_log_estimate returns the
// natural logarithm (the counts overflow double rapidly); regev_estimate
// exponentiates it, saturating to +inf on overflow.
double regev_log_estimate(Case c, double n, int l);
double regev_estimate(Case c, double n, int l);

}  // namespace limdist
