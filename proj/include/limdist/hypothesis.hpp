#pragma once
// Evidence pipeline for the linear-form hypothesis: the h^j coefficients of
// det(I - z Ktilde_(h)) are fitted, at a handful of sample points, against an
// ansatz of derivatives of F_z(s) = det(I - z V_Ai) with polynomial
// coefficients; the solved coefficients are snapped to small rationals and
// verified on a fresh grid. Includes the auxiliary operator trace identities.

#include "limdist/cheb.hpp"
#include "limdist/fredholm.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace limdist {

struct RationalFit {
    long long num = 0;
    long long den = 1;
    bool snapped = false;  // within 1/(2 max_den^2) of the float value
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Best rational approximation with denominator <= max_den via the continued
// fraction of x; `snapped` requires |x - num/den| < tol.
RationalFit rational_reconstruct(double x, long long max_den, double tol);

struct ReconstructionReport {
    double z = 1;
    int j = 1;
    std::vector<double> samples;         // collocation points s_jk
    std::vector<double> raw;             // float solution of the linear system
    std::vector<RationalFit> coefficients;
    double residual = 0;                 // sup-norm misfit on a fresh grid in [-7,4]
    double tolerance = 0;                // 2e-14 * 10^(3j)
    bool pass = false;
    std::string to_json() const;
};

// Shared state: per-s kernel discretizations (z-independent, hence reusable
// across the z sweep) and per-z representations of F_z.
class HypothesisLab {
  public:
    explicit HypothesisLab(int quad_nodes = 120);

    // F_z(s) = det(I - z V_Ai) on L^2(s, truncation).
    double fz(double z, double s);
    // F_z'(s) via the resolvent diagonal: (log F_z)'(s) = z((I-zK)^{-1}K)(s,s).
    double fz_prime(double z, double s);
    // F_z''(s) from the partial derivative of the resolvent diagonal.
    double fz_second(double z, double s);
    // k-th derivative (k = 1..6); orders 1 and 2 are analytic, higher orders
    // come from Chebyshev differentiation of the analytic second derivative,
    // which keeps them accurate enough for the rational snap.
    double fz_derivative(double z, int k, double s);
    // Coefficient of h^j in det(I - z Ktilde_(h)) = F_z(s)(1 + sum d_j h^j).
    double expansion_term(double z, int j, double s);
    ReconstructionReport reconstruct(double z, int j, long long max_den = 10000);
    // (|tr L|, |tr(V_Ai L) - (tr V')^2 + tr(V'^2)|) on (s, truncation).
    std::pair<double, double> trace_identities(double s);

  private:
    const DiscretizedKernel& kernel(int k, double s);  // k=0: V_Ai, 1..3: Ktilde_k
    // ((log F_z)'(s), partial_1 of the resolvent diagonal at (s,s)).
    std::pair<double, double> resolvent_edge(double z, double s);
    const std::vector<ChebInterp>& derivative_stack(double z);
    int nodes_;
    std::map<std::pair<int, double>, DiscretizedKernel> cache_;
    std::map<double, std::vector<ChebInterp>> deriv_;
};

HypothesisLab& hypothesis_lab();  // shared instance

double fz_determinant(double z, double s);
double expansion_term_z(double z, int j, double s);
ReconstructionReport reconstruct_coefficients(double z, int j, long long max_den = 10000);
std::pair<double, double> trace_identity_check(double s);

}  // namespace limdist
