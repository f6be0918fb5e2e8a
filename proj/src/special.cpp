#include "limdist/special.hpp"

#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace limdist {

std::pair<double, double> airy_pair(double x) {
    if (x < -20.0 || x > 40.0) throw std::domain_error("airy_pair: x out of working range [-20, 40]");
    return {boost::math::airy_ai(x), boost::math::airy_ai_prime(x)};
}

double bessel_j(double nu, double x) {
    if (!(nu >= -0.5) || nu > 2200.0) throw std::domain_error("bessel_j: nu out of range [-1/2, 2200]");
    if (!(x >= 0)) throw std::domain_error("bessel_j: x must be >= 0");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    return boost::math::cyl_bessel_j(nu, x);
}

namespace {

// Maclaurin evaluation of Ai and Ai' in MPFR. Ai = c1 f - c2 g with
//   f = sum x^{3k} prod_{j<k} 1/((3j+2)(3j+3)),
//   g = sum x^{3k+1} prod_{j<k} 1/((3j+3)(3j+4)),
// c1 = 3^{-2/3}/Gamma(2/3), c2 = 3^{-1/3}/Gamma(1/3). The series suffer
// cancellation ~ exp((4/3)|x|^{3/2}); the working precision absorbs it.
void airy_series(double x, double* ai, double* aip) {
    const double ax = std::abs(x);
    const long prec = 256 + static_cast<long>(2.5 * std::pow(ax, 1.5)) + 8 * (long)ax;

    mpfr_t X, X3, f, fp, g, gp, term, tp, c1, c2, tmp;
    mpfr_inits2(prec, X, X3, f, fp, g, gp, term, tp, c1, c2, tmp, (mpfr_ptr)nullptr);
    mpfr_set_d(X, x, MPFR_RNDN);
    mpfr_mul(X3, X, X, MPFR_RNDN);
    mpfr_mul(X3, X3, X, MPFR_RNDN);  // x^3

    // f and f' = d/dx f
    mpfr_set_ui(term, 1, MPFR_RNDN);
    mpfr_set_ui(f, 1, MPFR_RNDN);
    mpfr_set_ui(fp, 0, MPFR_RNDN);
    for (unsigned long k = 0; k < 100000; ++k) {
        mpfr_mul(term, term, X3, MPFR_RNDN);
        mpfr_div_ui(term, term, (3 * k + 2) * (3 * k + 3), MPFR_RNDN);
        mpfr_add(f, f, term, MPFR_RNDN);
        // derivative term: 3(k+1) x^{3k+2} * coeff = term * 3(k+1)/x
        mpfr_mul_ui(tp, term, 3 * (k + 1), MPFR_RNDN);
        if (x != 0.0) {
            mpfr_div(tp, tp, X, MPFR_RNDN);
            mpfr_add(fp, fp, tp, MPFR_RNDN);
        }
        if (mpfr_zero_p(term) || mpfr_get_exp(term) < -prec - 16) break;
    }
    // g and g'
    mpfr_set(term, X, MPFR_RNDN);
    mpfr_set(g, X, MPFR_RNDN);
    mpfr_set_ui(gp, 1, MPFR_RNDN);
    mpfr_set_ui(tp, 1, MPFR_RNDN);
    for (unsigned long k = 0; k < 100000; ++k) {
        mpfr_mul(term, term, X3, MPFR_RNDN);
        mpfr_div_ui(term, term, (3 * k + 3) * (3 * k + 4), MPFR_RNDN);
        mpfr_add(g, g, term, MPFR_RNDN);
        // g' term: (3k+4) x^{3k+3} coeff = term*(3k+4)/x
        if (x != 0.0) {
            mpfr_mul_ui(tmp, term, 3 * k + 4, MPFR_RNDN);
            mpfr_div(tmp, tmp, X, MPFR_RNDN);
            mpfr_add(gp, gp, tmp, MPFR_RNDN);
        }
        if (mpfr_zero_p(term) || mpfr_get_exp(term) < -prec - 16) break;
    }

    // c1 = 3^{-2/3}/Gamma(2/3), c2 = 3^{-1/3}/Gamma(1/3)
    // the fractions must carry full working precision: a double-rounded
    // exponent would poison the cancellation between c1 f and c2 g
    mpfr_set_ui(tmp, 3, MPFR_RNDN);
    mpfr_set_si(c1, -2, MPFR_RNDN);
    mpfr_div_ui(c1, c1, 3, MPFR_RNDN);
    mpfr_pow(c1, tmp, c1, MPFR_RNDN);
    mpfr_set_ui(tp, 2, MPFR_RNDN);
    mpfr_div_ui(tp, tp, 3, MPFR_RNDN);
    mpfr_gamma(tp, tp, MPFR_RNDN);
    mpfr_div(c1, c1, tp, MPFR_RNDN);
    mpfr_set_si(c2, -1, MPFR_RNDN);
    mpfr_div_ui(c2, c2, 3, MPFR_RNDN);
    mpfr_pow(c2, tmp, c2, MPFR_RNDN);
    mpfr_set_ui(tp, 1, MPFR_RNDN);
    mpfr_div_ui(tp, tp, 3, MPFR_RNDN);
    mpfr_gamma(tp, tp, MPFR_RNDN);
    mpfr_div(c2, c2, tp, MPFR_RNDN);

    if (ai) {
        mpfr_mul(tmp, c1, f, MPFR_RNDN);
        mpfr_mul(tp, c2, g, MPFR_RNDN);
        mpfr_sub(tmp, tmp, tp, MPFR_RNDN);
        *ai = mpfr_get_d(tmp, MPFR_RNDN);
    }
    if (aip) {
        mpfr_mul(tmp, c1, fp, MPFR_RNDN);
        mpfr_mul(tp, c2, gp, MPFR_RNDN);
        mpfr_sub(tmp, tmp, tp, MPFR_RNDN);
        *aip = mpfr_get_d(tmp, MPFR_RNDN);
    }
    mpfr_clears(X, X3, f, fp, g, gp, term, tp, c1, c2, tmp, (mpfr_ptr)nullptr);
}

}  // namespace

double airy_ai_oracle(double x) {
    double ai;
    airy_series(x, &ai, nullptr);
    return ai;
}

double airy_ai_prime_oracle(double x) {
    double aip;
    airy_series(x, nullptr, &aip);
    return aip;
}

double bessel_j_oracle(double nu, double x) {
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    // J_nu(x) = (x/2)^nu / Gamma(nu+1) * sum_k (-1)^k (x^2/4)^k / (k! (nu+1)_k)
    // The alternating sum cancels down from ~e^x scale; precision absorbs it.
    const long prec = 256 + static_cast<long>(1.6 * x) + 64;
    mpfr_t X2, term, sum, pref, tmp;
    mpfr_inits2(prec, X2, term, sum, pref, tmp, (mpfr_ptr)nullptr);
    mpfr_set_d(X2, x, MPFR_RNDN);
    mpfr_sqr(X2, X2, MPFR_RNDN);
    mpfr_div_ui(X2, X2, 4, MPFR_RNDN);  // x^2/4

    mpfr_set_ui(term, 1, MPFR_RNDN);
    mpfr_set_ui(sum, 1, MPFR_RNDN);
    for (unsigned long k = 1; k < 1000000; ++k) {
        mpfr_mul(term, term, X2, MPFR_RNDN);
        mpfr_div_ui(term, term, k, MPFR_RNDN);
        mpfr_set_d(tmp, nu, MPFR_RNDN);
        mpfr_add_ui(tmp, tmp, k, MPFR_RNDN);
        mpfr_div(term, term, tmp, MPFR_RNDN);
        if (k % 2 == 1) mpfr_sub(sum, sum, term, MPFR_RNDN);
        else mpfr_add(sum, sum, term, MPFR_RNDN);
        if (mpfr_zero_p(term) || mpfr_get_exp(term) < -prec - 16) break;
    }
    // prefactor (x/2)^nu / Gamma(nu+1)
    mpfr_set_d(pref, x / 2.0, MPFR_RNDN);
    mpfr_set_d(tmp, nu, MPFR_RNDN);
    mpfr_pow(pref, pref, tmp, MPFR_RNDN);
    mpfr_add_ui(tmp, tmp, 1, MPFR_RNDN);
    mpfr_gamma(tmp, tmp, MPFR_RNDN);
    mpfr_div(pref, pref, tmp, MPFR_RNDN);
    mpfr_mul(sum, sum, pref, MPFR_RNDN);
    double r = mpfr_get_d(sum, MPFR_RNDN);
    mpfr_clears(X2, term, sum, pref, tmp, (mpfr_ptr)nullptr);
    return r;
}

}  // namespace limdist
