#pragma once
// Limit laws at the spectrum edge: the soft-edge distributions F_1/F_2/F_4
// (with derivatives and moments via Chebyshev representations of the Airy
// determinants) and the hard-edge gap probabilities (Bessel determinants),
// connected by the hard-to-soft transition probe.

#include "limdist/cases.hpp"
#include "limdist/cheb.hpp"

#include <memory>
#include <vector>

namespace limdist {

// Configuration knobs for the Chebyshev representations; defaults follow the
// production settings (interval [-8, 5], 240 points for the pointwise
// representation; a wider panelled representation for moment quadrature so
// that the neglected tails stay below 1e-12).
struct EdgeConfig {
    double cheb_lo = -8.0;
    double cheb_hi = 5.0;
    int cheb_n = 240;
    int quad_nodes = 160;  // Gauss-Legendre nodes per determinant
    double moment_lo = -13.0;
    double moment_hi = 15.0;
    int moment_panel_n = 64;
    double panel_width = 2.5;
};

// Immutable once built; evaluations are const and safe to share across
// threads.
class TracyWidom {
  public:
    explicit TracyWidom(const EdgeConfig& cfg = EdgeConfig());

    // F_beta(t), beta in {1, 2, 4}: F_1 = F_+, F_2 = F_+ F_-,
    // F_4 = (F_+ + F_-)/2 with F_± = det(I ∓ V_Ai) on L^2(t, inf).
    // Computed from fresh determinants for t in [-10, 8]; |t| beyond the
    // Chebyshev interval is evaluated directly.
    double cdf(int beta, double t) const;
    // Direct determinant evaluation, bypassing the representation.
    double cdf_direct(int beta, double t) const;
    // F_beta^(k)(t), k = 1..7, t inside the Chebyshev interval minus a
    // margin of 0.5; spectral differentiation of the representation.
    double derivative(int beta, int k, double t) const;
    // M_{beta,j} = int t^j F_beta'(t) dt, beta in {1, 4}, j = 0..5, from the
    // wide panelled representation (j = 0 admitted as a normalization test).
    double moment(int beta, int j) const;
    // By-parts evaluation of the same moment (cross-check route):
    // split at 0, integrate j t^{j-1} F on the left and j t^{j-1}(1-F) on
    // the right against the boundary terms.
    double moment_by_parts(int beta, int j) const;

    const EdgeConfig& config() const { return cfg_; }
    const ChebInterp& representation(int beta) const;

  private:
    EdgeConfig cfg_;
    std::vector<ChebInterp> F_;                       // F_1, F_2, F_4 on [lo, hi]
    mutable std::vector<std::vector<ChebInterp>> d_;  // cached derivatives [beta][k]
    std::vector<PanelledCheb> wide_;                  // F_1, F_4 on [moment_lo, moment_hi]
    std::vector<PanelledCheb> wided_;                 // their first derivatives
    static int beta_slot(int beta);
};

// Shared default-configured instance (built on first use).
const TracyWidom& tracy_widom();

double tracy_widom_cdf(int beta, double t);
double tw_derivative(int beta, int k, double t);
double tw_moment(int beta, int j);

// Hard-edge gap probability E_beta^hard(s; a), beta in {1, 4}:
//   E_1(s; a) = det(I - V_nu) on L^2(0, sqrt(s)),        nu = 2a + 1,
//   E_4(s; a) = (det(I - V_nu) + det(I + V_nu))/2,       nu = a - 1,
// with the Bessel kernel V_nu(x,y) = J_nu(sqrt(xy))/2.
double hard_edge_gap(int beta, double s, double a, int quad_nodes = 160);

// Poissonized length CDF P(L <= threshold) of the intensity-r ensemble,
// expressed through the hard edge:
//   incr-fpf: E_4(8r; l),  decr-fpf: E_1(8r; l),  inv: E_1(4r^2; (l-1)/2).
double poissonized_cdf(Case c, int l, double r, int quad_nodes = 160);

// Residual of the hard-to-soft expansion truncated after order m:
//   E_beta^hard(phi_nu(t); nu_beta) - F_beta(t) - sum_{j=1..m} E_{beta,j}(t) h_nu^j
// with phi_nu(t) = (nu (1 - h_nu t))^2, h_nu = 2^{-1/3} nu^{-2/3}, and the
// index map nu_1 = (nu - 1)/2, nu_4 = nu + 1 (so the kernel order is nu).
double hard_to_soft_probe(int beta, double nu, double t, int m);

// Expansion term E_{beta,j}(t), j = 1..3: the fixed linear combination of
// F_beta^(1..6) with polynomial coefficients.
double transition_term(int beta, int j, double t);

}  // namespace limdist
