#pragma once
// Power-series solutions of the Chazy I equation and the generating
// functions f_l of the length distributions assembled from them:
//
//   v_l^{+/-}(x) = x^2 +/- x^{l+1}/l! + O(x^{l+2}),
//   g_l^{+/-}    = exp( integral v_l^{+/-}(x) dx/x ),
//
//   f_1^incr-fpf = cosh z,  f_{l+1}^incr-fpf = (g_l^- + g_l^+)/2  (l >= 1),
//   f_l^decr-fpf = g_{2l+1}^-,
//   f_l^inv      = e^z g_l^-.
//
// The Taylor recursion for v is linear in the highest coefficient:
//   (n+1)(n^2-l^2) a_{n+1} - 16(n-2) a_{n-1}
//     + 2 sum_{m=2}^{n-1} m a_m (3(n-m)+1) a_{n+1-m} = 0   (n >= 2),
// with a_2 = 1 + sign*[l=1], a_3 = ... = a_l = 0, and, for l >= 2, the free
// coefficient a_{l+1} = sign/l! injected at n = l where the prefactor
// vanishes (the recursion's consistency at n = l is asserted loudly).
//
// Two implementations: a reference one over exact rationals (TruncatedSeries)
// and a fast path over scaled big integers b_n = a_n * n!, c_n = n! [x^n] g
// (integrality of the scaled coefficients is asserted at every division).

#include "limdist/cases.hpp"
#include "limdist/series.hpp"

namespace limdist {

// Reference path: coefficients a_0..a_N of v_l^sign (sign = +1 or -1).
TruncatedSeries chazy_coefficients(int l, int sign, int N);

// Reference path: Maclaurin series of f_l^case in z, truncated at order N.
// Fixed-point-free cases are even series in z (odd coefficients vanish).
TruncatedSeries generating_series(Case c, int l, int N);

// Fast path: b_n = a_n * n! for the Chazy solution v_l^sign, n = 0..N.
// Throws std::logic_error if any scaled coefficient fails integrality
// (which would signal a recursion bug, never expected).
std::vector<Int> chazy_coefficients_scaled(int l, int sign, int N);

// Fast path: c_n = n! [x^n] exp(integral v dx/x) from scaled coefficients b.
std::vector<Int> chazy_exp_scaled(const std::vector<Int>& b);

// Cumulative counts via the fast path: column[n] = |{L_n^case <= l}| as an
// exact integer, n = 0..n_max (for decr-fpf the threshold is L <= 2l).
std::vector<Int> cumulative_counts_column(Case c, int l, int n_max);

}  // namespace limdist
