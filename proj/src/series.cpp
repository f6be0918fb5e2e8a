#include "limdist/series.hpp"

namespace limdist {

TruncatedSeries TruncatedSeries::truncated(int order) const {
    TruncatedSeries r(order);
    int upto = std::min(order, this->order());
    for (int n = 0; n <= upto; ++n) r[n] = coeff_[n];
    return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    int N = std::min(order(), o.order());
    TruncatedSeries r(N);
    for (int n = 0; n <= N; ++n) r[n] = coeff_[n] + o[n];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    int N = std::min(order(), o.order());
    TruncatedSeries r(N);
    for (int n = 0; n <= N; ++n) r[n] = coeff_[n] - o[n];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    int N = std::min(order(), o.order());
    TruncatedSeries r(N);
    Rat t;
    for (int n = 0; n <= N; ++n) {
        Rat acc(0);
        for (int k = 0; k <= n; ++k) {
            t = coeff_[k] * o[n - k];
            acc += t;
        }
        r[n] = acc;
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rat& a) const {
    TruncatedSeries r(order());
    for (int n = 0; n <= order(); ++n) r[n] = coeff_[n] * a;
    return r;
}

TruncatedSeries TruncatedSeries::exp() const {
    if (coeff_[0] != 0) throw std::domain_error("series exp requires f(0) = 0");
    int N = order();
    TruncatedSeries g(N);
    g[0] = 1;
    // g' = f' g  =>  n g_n = sum_{k=1}^{n} k f_k g_{n-k}
    for (int n = 1; n <= N; ++n) {
        Rat acc(0);
        for (int k = 1; k <= n; ++k) acc += Rat(k) * coeff_[k] * g[n - k];
        g[n] = acc / n;
    }
    return g;
}

TruncatedSeries TruncatedSeries::log() const {
    if (coeff_[0] != 1) throw std::domain_error("series log requires f(0) = 1");
    int N = order();
    TruncatedSeries h(N);
    // h' = f'/f  =>  n f_0 h_n = n f_n - sum_{k=1}^{n-1} k h_k f_{n-k}
    for (int n = 1; n <= N; ++n) {
        Rat acc = Rat(n) * coeff_[n];
        for (int k = 1; k < n; ++k) acc -= Rat(k) * h[k] * coeff_[n - k];
        h[n] = acc / n;
    }
    return h;
}

TruncatedSeries TruncatedSeries::integrate_dx_over_x() const {
    if (coeff_[0] != 0) throw std::domain_error("integrate dx/x requires c_0 = 0");
    TruncatedSeries r(order());
    for (int n = 1; n <= order(); ++n) r[n] = coeff_[n] / n;
    return r;
}

TruncatedSeries TruncatedSeries::x_ddx() const {
    TruncatedSeries r(order());
    for (int n = 1; n <= order(); ++n) r[n] = Rat(n) * coeff_[n];
    return r;
}

Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Int double_factorial_odd(unsigned long n) {
    // (2n-1)!! = 1*3*5*...*(2n-1)
    Int f;
    mpz_2fac_ui(f.get_mpz_t(), n == 0 ? 1 : 2 * n - 1);
    return f;
}

}  // namespace limdist
