#pragma once
// Expansion calculus: finite-size CDF/PDF expansions of the longest monotone
// subsequence laws built from the term tables, mean/variance expansion
// coefficients expressed exactly in the moments of the limit laws, Jasz
// coefficients for analytic de-Poissonization, the monotone de-Poissonization
// sandwich, and the asymptotic series for the involution numbers.

#include "limdist/cases.hpp"
#include "limdist/termtable.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace limdist {

// ---- truncated expansions --------------------------------------------------

// Poissonized CDF expansion at intensity r:
//   F_beta(t) + sum_{j<=m} F_{beta,j}(t) r_case^{-j/3},  t = t_{l_index}(r_case).
// m <= 3.
double poissonized_expansion(Case c, double r, long l, int m);

// Finite-n CDF expansion:
//   F_beta(t) + sum_{j<=m} F_{case,j}(t) (gamma n)^{-gamma j/6},
// evaluated at t = t_{l_star}(gamma n). m <= 3 (fpf) resp. m <= 7 (inv).
double cdf_expansion(Case c, long n, long l, int m);

// Finite-n density expansion (value of h_case^{-1} * P(L = l), midpoint rule):
//   F_beta'(t) + sum_{j<=m} F*_{case,j}(t) (gamma n)^{-gamma j/6},
// evaluated at t = t_{(l - 1/2)_star}(gamma n). m <= 3 (fpf) resp. 7 (inv).
double pdf_expansion(Case c, long n, long l, int m);

// ---- mean / variance coefficients ------------------------------------------

// An exact rational polynomial (degree <= 2 here) in the limit-law moments
// M_{beta,i} = int t^i F_beta'(t) dt. Keys are sorted index multisets:
// {} -> constant, {i} -> M_i, {i,k} -> M_i M_k.
struct MomentForm {
    int beta = 1;
    std::map<std::vector<int>, Rat> monomials;

    MomentForm& add(std::vector<int> key, const Rat& q);
    MomentForm plus(const MomentForm& o) const;
    MomentForm minus(const MomentForm& o) const;
    MomentForm times(const MomentForm& o) const;
    bool operator==(const MomentForm& o) const;

    double value() const;      // substitutes computed Tracy-Widom moments
    std::string to_string() const;
};

// Exact moment rule: int t^w * e(t) dt for a derivative-order term table entry,
// using int t^j F^(k) dt = (-1)^(k-1) j!/(j-k+1)! M_{j-k+1} (k <= j+1, else 0).
MomentForm moment_integral(const TermExpr& e, int weight_power, int beta);

// Coefficient mu_{case,j} of the mean expansion
//   E(L_n) = 2 sqrt(gamma n) + delta + sum_j mu_j (gamma n)^{(1-gamma j)/6},
// and nu_{case,j} of  Var(L_n) = sum_j nu_j (gamma n)^{(2-gamma j)/6}.
// j <= 3 (fpf) resp. j <= 7 (inv); derived from the density term tables.
MomentForm mu_coefficient(Case c, int j);
MomentForm nu_coefficient(Case c, int j);

struct MeanVar {
    double mean = 0;
    double variance = 0;
};
MeanVar mean_variance_expansion(Case c, long n, int m);

// ---- analytic de-Poissonization (Jasz coefficients) -------------------------

// Generating function used as the Poissonization weight: f(z) = e^z with
// a_n = 1/n!, or the involution EGF f(z) = e^{z + z^2/2} with a_n = I_n/n!.
enum class Generator { Exponential, InvolutionEgf };

// Matched intensity r*_n: n (exponential) or sqrt(n) - 1/2 (involution EGF).
double jasz_radius(Generator g, long n);

// c_j(n; r) = (1/j!) sum_{k=0}^{j} C(j,k) (a_{n-k}/a_n) (-r)^{j-k}, evaluated
// at r = r*_n in 512-bit arithmetic (the sum cancels ~n^j down to O(1)).
double jasz_coefficient(Generator g, int j, long n);
// Same, at a caller-supplied intensity r.
double jasz_coefficient_at(Generator g, int j, long n, double r);

// ---- monotone de-Poissonization sandwich ------------------------------------

// Certified-up-to-quadrature enclosure of the CDF P(L_n <= l):
//   P(r_n^+) - Delta(r_n^+) <= p_n(l) <= P(r_n^-) + Delta(r_n^-),
// with P the Poissonized CDF (hard-edge determinant) and Delta the explicit
// tail bound of the respective generating function.
std::pair<double, double> depoisson_sandwich(Case c, long n, long l, double alpha);

// The tail bound Delta_n(r) itself (log scale), for trend tests.
double depoisson_log_delta(Case c, long n, double r);
double depoisson_intensity(Case c, long n, double alpha, int sign);  // r_n^sign

// ---- involution-number asymptotics ------------------------------------------

// Truncated asymptotic series for the involution numbers,
//   I_n ~ (e^{sqrt n - 1/4}/sqrt 2) (n/e)^{n/2} (1 + 7/24 n^{-1/2} - ...),
// with `order` correction terms (0..3). The plain value overflows double for
// n >~ 340, hence the log companion used by the validation suite.
double involution_asymptotics(double n, int order);
double involution_asymptotics_log(double n, int order);

// The EGF-coefficient variant a_n = I_n/n! ~ (e^{sqrt n - 1/4}/(2 sqrt(pi n)))
// (e/n)^{n/2} (1 + 7/24 n^{-1/2} - 215/1152 n^{-1} - ...).
double involution_egf_asymptotics(double n, int order);
double involution_egf_asymptotics_log(double n, int order);

}  // namespace limdist
