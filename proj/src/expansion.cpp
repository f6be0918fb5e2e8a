#include "limdist/expansion.hpp"

#include "limdist/edge.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace limdist {

namespace {

int expansion_range(Case c) { return c == Case::Inv ? 7 : 3; }

TableKind cdf_kind(Case c) { return c == Case::Inv ? TableKind::CdfInv : TableKind::Cdf; }

}  // namespace

double poissonized_expansion(Case c, double r, long l, int m) {
    if (m < 0 || m > 3) throw std::out_of_range("poissonized expansion order must be 0..3");
    const int beta = case_beta(c);
    const double rc = case_r(c, r);
    const double t = scaled_variable(case_l_index(c, static_cast<double>(l)), rc);
    double v = tracy_widom_cdf(beta, t);
    for (int j = 1; j <= m; ++j)
        v += term_polynomials(TableKind::Poisson, c, j).evaluate(beta, t) *
             std::pow(rc, -j / 3.0);
    return v;
}

double cdf_expansion(Case c, long n, long l, int m) {
    if (m < 0 || m > expansion_range(c))
        throw std::out_of_range("CDF expansion order beyond transcribed terms");
    const int beta = case_beta(c);
    const double g = case_gamma(c);
    const double gn = g * static_cast<double>(n);
    const double t = scaled_variable(case_l_star(c, static_cast<double>(l)), gn);
    double v = tracy_widom_cdf(beta, t);
    for (int j = 1; j <= m; ++j)
        v += term_polynomials(cdf_kind(c), c, j).evaluate(beta, t) *
             std::pow(gn, -g * j / 6.0);
    return v;
}

double pdf_expansion(Case c, long n, long l, int m) {
    if (m < 0 || m > expansion_range(c))
        throw std::out_of_range("PDF expansion order beyond transcribed terms");
    const int beta = case_beta(c);
    const double g = case_gamma(c);
    const double gn = g * static_cast<double>(n);
    const double t = scaled_variable(case_l_star(c, static_cast<double>(l) - 0.5), gn);
    double v = tw_derivative(beta, 1, t);
    for (int j = 1; j <= m; ++j)
        v += term_polynomials(TableKind::Pdf, c, j).evaluate(beta, t) *
             std::pow(gn, -g * j / 6.0);
    return v;
}

// ---- moment forms -----------------------------------------------------------

MomentForm& MomentForm::add(std::vector<int> key, const Rat& q) {
    std::sort(key.begin(), key.end());
    auto it = monomials.find(key);
    if (it == monomials.end()) {
        if (q != 0) monomials.emplace(std::move(key), q);
    } else {
        it->second += q;
        if (it->second == 0) monomials.erase(it);
    }
    return *this;
}

MomentForm MomentForm::plus(const MomentForm& o) const {
    MomentForm s = *this;
    for (const auto& [k, q] : o.monomials) s.add(k, q);
    return s;
}

MomentForm MomentForm::minus(const MomentForm& o) const {
    MomentForm s = *this;
    for (const auto& [k, q] : o.monomials) s.add(k, -q);
    return s;
}

MomentForm MomentForm::times(const MomentForm& o) const {
    MomentForm s;
    s.beta = beta;
    for (const auto& [ka, qa] : monomials)
        for (const auto& [kb, qb] : o.monomials) {
            std::vector<int> k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            s.add(std::move(k), qa * qb);
        }
    return s;
}

bool MomentForm::operator==(const MomentForm& o) const {
    return beta == o.beta && monomials == o.monomials;
}

double MomentForm::value() const {
    double v = 0;
    for (const auto& [k, q] : monomials) {
        double m = q.get_d();
        for (int i : k) m *= tw_moment(beta, i);
        v += m;
    }
    return v;
}

std::string MomentForm::to_string() const {
    if (monomials.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, q] : monomials) {
        if (!first) os << " + ";
        os << "(" << q.get_str() << ")";
        for (std::size_t i = 0; i < k.size(); ++i) {
            std::size_t run = 1;
            while (i + run < k.size() && k[i + run] == k[i]) ++run;
            os << "*M" << k[i];
            if (run > 1) os << "^" << run;
            i += run - 1;
        }
        first = false;
    }
    return os.str();
}

MomentForm moment_integral(const TermExpr& e, int weight_power, int beta) {
    MomentForm s;
    s.beta = beta;
    for (const auto& [k, p] : e.terms) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == 0) continue;
            const int j = static_cast<int>(i) + weight_power;  // power of t
            if (k > j + 1) continue;
            // int t^j F^(k) dt = (-1)^(k-1) j!/(j-k+1)! M_{j-k+1}
            Rat q = p[i];
            if (k % 2 == 0) q = -q;
            for (int f = j - k + 2; f <= j; ++f) q *= f;
            const int idx = j - k + 1;
            if (idx == 0)
                s.add({}, q);
            else
                s.add({idx}, q);
        }
    }
    return s;
}

namespace {

TermExpr density_term(Case c, int j) {
    if (j == 0) {
        TermExpr fprime;
        fprime.add(1, {Rat(1)});
        return fprime;
    }
    return term_polynomials(TableKind::Pdf, c, j);
}

}  // namespace

MomentForm mu_coefficient(Case c, int j) {
    if (j < 0 || j > expansion_range(c))
        throw std::out_of_range("mean coefficient beyond transcribed terms");
    return moment_integral(density_term(c, j), 1, case_beta(c));
}

MomentForm nu_coefficient(Case c, int j) {
    if (j < 0 || j > expansion_range(c))
        throw std::out_of_range("variance coefficient beyond transcribed terms");
    MomentForm s = moment_integral(density_term(c, j), 2, case_beta(c));
    for (int i = 0; i <= j; ++i)
        s = s.minus(mu_coefficient(c, i).times(mu_coefficient(c, j - i)));
    return s;
}

MeanVar mean_variance_expansion(Case c, long n, int m) {
    if (m < 0 || m > expansion_range(c))
        throw std::out_of_range("mean/variance order beyond transcribed terms");
    const double g = case_gamma(c);
    const double gn = g * static_cast<double>(n);
    MeanVar mv;
    mv.mean = 2 * std::sqrt(gn) + case_delta(c);
    for (int j = 0; j <= m; ++j) {
        mv.mean += mu_coefficient(c, j).value() * std::pow(gn, (1 - g * j) / 6.0);
        mv.variance += nu_coefficient(c, j).value() * std::pow(gn, (2 - g * j) / 6.0);
    }
    return mv;
}

}  // namespace limdist
