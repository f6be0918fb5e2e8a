#include "limdist/expansion.hpp"

#include "limdist/edge.hpp"
#include "limdist/tables.hpp"

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>

namespace limdist {

namespace {

constexpr int kJaszBits = 512;

// a_{n-k}/a_n as an exact rational, for a_n = 1/n! resp. a_n = I_n/n!.
mpq_class coeff_ratio(Generator g, long n, int k, const std::vector<Int>& inv) {
    mpz_class falling = 1;  // n!/(n-k)!
    for (long f = n - k + 1; f <= n; ++f) falling *= f;
    if (g == Generator::Exponential) return {falling};
    mpq_class q(inv.at(n - k) * falling, inv.at(n));
    q.canonicalize();
    return q;
}

}  // namespace

double jasz_radius(Generator g, long n) {
    return g == Generator::Exponential ? static_cast<double>(n)
                                       : std::sqrt(static_cast<double>(n)) - 0.5;
}

double jasz_coefficient_at(Generator g, int j, long n, double r) {
    if (j < 0) throw std::out_of_range("Jasz coefficient index must be >= 0");
    if (n < j) throw std::out_of_range("Jasz coefficient needs n >= j");
    std::vector<Int> inv;
    if (g == Generator::InvolutionEgf) inv = involution_numbers(static_cast<int>(n));

    mpf_class rr(0, kJaszBits);
    if (g == Generator::Exponential && r == static_cast<double>(n))
        rr = n;  // matched radius, exactly
    else if (g == Generator::InvolutionEgf && r == jasz_radius(g, n)) {
        mpf_class root(n, kJaszBits);
        mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
        rr = root - mpf_class(1, kJaszBits) / 2;
    } else
        rr = r;

    // c_j(n;r) = (1/j!) sum_k C(j,k) (a_{n-k}/a_n) (-r)^{j-k}; the terms are
    // O(n^j) while the value is O(1), hence the extended precision.
    mpf_class sum(0, kJaszBits);
    mpz_class binom = 1;
    for (int k = 0; k <= j; ++k) {
        mpf_class term(coeff_ratio(g, n, k, inv), kJaszBits);
        term *= binom;
        mpf_class pw(1, kJaszBits);
        for (int e = 0; e < j - k; ++e) pw *= -rr;
        sum += term * pw;
        binom = binom * (j - k) / (k + 1);
    }
    mpz_class jfact = 1;
    for (int f = 2; f <= j; ++f) jfact *= f;
    sum /= mpf_class(jfact, kJaszBits);
    return sum.get_d();
}

double jasz_coefficient(Generator g, int j, long n) {
    return jasz_coefficient_at(g, j, n, jasz_radius(g, n));
}

// ---- monotone sandwich -------------------------------------------------------

double depoisson_intensity(Case c, long n, double alpha, int sign) {
    const double dn = static_cast<double>(n);
    if (c == Case::Inv)
        return std::sqrt(dn) - 0.5 + sign * std::sqrt(alpha * std::log(dn));
    return dn + sign * std::sqrt(2 * alpha * dn * std::log(dn));
}

double depoisson_log_delta(Case c, long n, double r) {
    const double dn = static_cast<double>(n);
    if (c == Case::Inv) {
        // f(z) = e^{z + z^2/2}; centre r_n solves r + r^2 = n.
        const double rn = std::sqrt(dn + 0.25) - 0.5;
        return dn * std::log(r / rn) + (rn + rn * rn / 2) - (r + r * r / 2);
    }
    // f(z) = e^z; centre r_n = n.
    return dn * std::log(r / dn) + dn - r;
}

std::pair<double, double> depoisson_sandwich(Case c, long n, long l, double alpha) {
    if (n < 2) throw std::invalid_argument("sandwich needs n >= 2");
    const double rp = depoisson_intensity(c, n, alpha, +1);
    const double rm = depoisson_intensity(c, n, alpha, -1);
    if (!(rm > 0)) throw std::invalid_argument("lower intensity not positive; reduce alpha");
    const double dp = std::exp(depoisson_log_delta(c, n, rp));
    const double dm = std::exp(depoisson_log_delta(c, n, rm));
    const double lo = poissonized_cdf(c, l, rp) - dp;
    const double hi = poissonized_cdf(c, l, rm) + dm;
    return {lo, hi};
}

// ---- involution-number asymptotics --------------------------------------------

namespace {

double correction_series(double n, int order, const double (&coef)[3]) {
    double s = 1;
    double p = 1;
    const double rt = std::sqrt(n);
    for (int i = 0; i < order && i < 3; ++i) {
        p /= rt;
        s += coef[i] * p;
    }
    return s;
}

}  // namespace

double involution_asymptotics_log(double n, int order) {
    if (!(n >= 1)) throw std::invalid_argument("involution asymptotics need n >= 1");
    if (order < 0 || order > 3) throw std::out_of_range("series order must be 0..3");
    static constexpr double kCoef[3] = {7.0 / 24, -119.0 / 1152, -7933.0 / 414720};
    return std::sqrt(n) - 0.25 - 0.5 * std::log(2.0) + 0.5 * n * (std::log(n) - 1) +
           std::log(correction_series(n, order, kCoef));
}

double involution_asymptotics(double n, int order) {
    return std::exp(involution_asymptotics_log(n, order));
}

double involution_egf_asymptotics_log(double n, int order) {
    if (!(n >= 1)) throw std::invalid_argument("involution asymptotics need n >= 1");
    if (order < 0 || order > 3) throw std::out_of_range("series order must be 0..3");
    static constexpr double kCoef[3] = {7.0 / 24, -215.0 / 1152, -18013.0 / 414720};
    return std::sqrt(n) - 0.25 - std::log(2.0) - 0.5 * std::log(M_PI * n) +
           0.5 * n * (1 - std::log(n)) + std::log(correction_series(n, order, kCoef));
}

double involution_egf_asymptotics(double n, int order) {
    return std::exp(involution_egf_asymptotics_log(n, order));
}

}  // namespace limdist
