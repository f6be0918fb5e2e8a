#pragma once
// Special functions for the operator kernels: Airy Ai/Ai' and Bessel J of
// real order. Production path is double precision (boost::math backends,
// gated by the arbitrary-precision MPFR oracles in the test suite).

#include <utility>

namespace limdist {

// (Ai(x), Ai'(x)); working range x in [-20, 40], relative error <= 1e-13
// away from zeros of Ai (absolute error at machine scale everywhere).
std::pair<double, double> airy_pair(double x);

// J_nu(x) for real nu >= -1/2, x >= 0 (nu <= 2200 supported).
double bessel_j(double nu, double x);

// ---- arbitrary-precision oracles (slow; intended for tests) ----
// Values are returned rounded to double from a high-precision computation
// whose working precision is chosen adaptively to absorb the cancellation
// of the Maclaurin series.
double airy_ai_oracle(double x);
double airy_ai_prime_oracle(double x);
double bessel_j_oracle(double nu, double x);

}  // namespace limdist
