#include "limdist/cheb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace limdist {

namespace {

// Coefficients of the interpolant through values at second-kind points
// x_j = cos(pi j / n), j = 0..n, by the type-I DCT written out directly
// (n is a few hundred at most, so O(n^2) is fine and dependency-free).
std::vector<double> values_to_coeffs(const std::vector<double>& v) {
    const int n = static_cast<int>(v.size()) - 1;
    std::vector<double> c(n + 1, 0.0);
    if (n == 0) {
        c[0] = v[0];
        return c;
    }
    for (int k = 0; k <= n; ++k) {
        double s = 0.5 * (v[0] + (k % 2 == 0 ? v[n] : -v[n]));
        for (int j = 1; j < n; ++j) s += v[j] * std::cos(std::numbers::pi * k * j / n);
        c[k] = 2.0 * s / n;
    }
    c[0] *= 0.5;
    c[n] *= 0.5;
    return c;
}

}  // namespace

ChebInterp::ChebInterp(const std::function<double(double)>& f, double a, double b, int n)
    : a_(a), b_(b) {
    if (!(a < b) || n < 0) throw std::invalid_argument("ChebInterp: bad interval or degree");
    std::vector<double> v(n + 1);
    for (int j = 0; j <= n; ++j) {
        const double t = n == 0 ? 1.0 : std::cos(std::numbers::pi * j / n);
        v[j] = f(0.5 * (a + b) + 0.5 * (b - a) * t);
    }
    c_ = values_to_coeffs(v);
}

ChebInterp::ChebInterp(std::vector<double> coeffs, double a, double b)
    : c_(std::move(coeffs)), a_(a), b_(b) {
    if (!(a < b) || c_.empty()) throw std::invalid_argument("ChebInterp: bad interval or coeffs");
}

double ChebInterp::operator()(double x) const {
    const double t = (2.0 * x - (a_ + b_)) / (b_ - a_);
    double b1 = 0.0, b2 = 0.0;
    for (int k = static_cast<int>(c_.size()) - 1; k >= 1; --k) {
        const double b0 = 2.0 * t * b1 - b2 + c_[k];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + c_[0];
}

int ChebInterp::plateau_index(double rel_tol) const {
    double mx = 0.0;
    for (double ck : c_) mx = std::max(mx, std::abs(ck));
    if (mx == 0.0) return 0;
    int last = 0;
    for (int k = 0; k < static_cast<int>(c_.size()); ++k)
        if (std::abs(c_[k]) > rel_tol * mx) last = k;
    return last;
}

ChebInterp ChebInterp::derivative(int k) const {
    if (k < 0) throw std::invalid_argument("ChebInterp::derivative: negative order");
    // Truncate at the noise plateau before differentiating: differentiation
    // multiplies coefficient noise at index m by O(m^2) per order.
    std::vector<double> c(c_.begin(), c_.begin() + plateau_index() + 1);
    const double scale = 2.0 / (b_ - a_);
    for (int pass = 0; pass < k; ++pass) {
        const int n = static_cast<int>(c.size()) - 1;
        std::vector<double> d(std::max(n, 1), 0.0);
        // c'_{k-1} = c'_{k+1} + 2k c_k  (with c'_0 halved at the end)
        double next = 0.0, next2 = 0.0;
        for (int m = n; m >= 1; --m) {
            const double dm = next2 + 2.0 * m * c[m];
            next2 = next;
            next = dm;
            d[m - 1] = dm * scale;
        }
        d[0] *= 0.5;
        c = std::move(d);
    }
    return ChebInterp(std::move(c), a_, b_);
}

ChebInterp ChebInterp::antiderivative() const {
    const int n = static_cast<int>(c_.size()) - 1;
    const double scale = 0.5 * (b_ - a_);
    std::vector<double> C(n + 2, 0.0);
    auto at = [&](int k) { return k <= n ? c_[k] * (k == 0 ? 2.0 : 1.0) : 0.0; };
    // C_k = (c_{k-1} - c_{k+1}) / (2k); constant chosen so the result is 0 at a.
    for (int k = 1; k <= n + 1; ++k) C[k] = scale * (at(k - 1) - (k + 1 <= n ? c_[k + 1] : 0.0)) / (2.0 * k);
    double v = 0.0;
    for (int k = 1; k <= n + 1; ++k) v += (k % 2 == 0 ? C[k] : -C[k]);  // T_k(-1) = (-1)^k
    C[0] = -v;
    return ChebInterp(std::move(C), a_, b_);
}

double ChebInterp::integrate() const {
    // int_{-1}^1 T_k = 2/(1-k^2) for even k, 0 for odd k.
    double s = 0.0;
    for (int k = 0; k < static_cast<int>(c_.size()); k += 2) s += 2.0 * c_[k] / (1.0 - double(k) * k);
    return s * 0.5 * (b_ - a_);
}

PanelledCheb::PanelledCheb(const std::function<double(double)>& f,
                           const std::vector<double>& breakpoints, int n) {
    if (breakpoints.size() < 2) throw std::invalid_argument("PanelledCheb: need >= 2 breakpoints");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw std::invalid_argument("PanelledCheb: breakpoints not increasing");
        panels_.emplace_back(f, breakpoints[i], breakpoints[i + 1], n);
    }
}

double PanelledCheb::operator()(double x) const {
    if (x <= panels_.front().upper()) return panels_.front()(x);
    for (std::size_t i = 1; i + 1 < panels_.size(); ++i)
        if (x <= panels_[i].upper()) return panels_[i](x);
    return panels_.back()(x);
}

PanelledCheb PanelledCheb::derivative(int k) const {
    std::vector<ChebInterp> out;
    out.reserve(panels_.size());
    for (const auto& p : panels_) out.push_back(p.derivative(k));
    return PanelledCheb(std::move(out));
}

double PanelledCheb::integrate() const {
    double s = 0.0;
    for (const auto& p : panels_) s += p.integrate();
    return s;
}

}  // namespace limdist
