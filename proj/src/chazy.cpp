#include "limdist/chazy.hpp"

#include <cassert>
#include <stdexcept>

namespace limdist {

namespace {

// Exact division r = a / d, asserting divisibility.
void divexact_checked(Int& r, const Int& a, const Int& d) {
    if (d == 0) throw std::logic_error("chazy: division by zero prefactor");
    if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()))
        throw std::logic_error("chazy: non-integer scaled coefficient (recursion bug)");
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
}

}  // namespace

TruncatedSeries chazy_coefficients(int l, int sign, int N) {
    if (N < 2) throw std::invalid_argument("chazy_coefficients: N must be >= 2");
    if (l < 1) throw std::invalid_argument("chazy_coefficients: l must be >= 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("chazy_coefficients: sign must be +/-1");

    TruncatedSeries a(N);
    a[2] = (l == 1) ? Rat(1 + sign) : Rat(1);
    for (int n = 2; n < N; ++n) {
        // rhs = 16(n-2) a_{n-1} - 2 sum_{m=2}^{n-1} m a_m (3(n-m)+1) a_{n+1-m}
        Rat rhs = Rat(16 * (n - 2)) * a[n - 1];
        for (int m = 2; m <= n - 1; ++m) {
            if (n + 1 - m < 2) continue;
            rhs -= Rat(2 * m * (3 * (n - m) + 1)) * a[m] * a[n + 1 - m];
        }
        if (n == l) {
            // Prefactor (n+1)(n^2-l^2) vanishes: a_{l+1} is the free
            // parameter fixed by the initial condition; consistency demands
            // the rest of the recursion vanishes here.
            if (rhs != 0)
                throw std::logic_error("chazy_coefficients: inconsistent recursion at n = l");
            a[n + 1] = Rat(sign) / Rat(factorial(l));
        } else {
            a[n + 1] = rhs / Rat(Int(n + 1) * (Int(n) * n - Int(l) * l));
        }
    }
    return a;
}

TruncatedSeries generating_series(Case c, int l, int N) {
    if (N < 0) throw std::invalid_argument("generating_series: N must be >= 0");
    if (l < 1) throw std::invalid_argument("generating_series: l must be >= 1");
    auto g_of = [&](int param, int sign) {
        TruncatedSeries v = chazy_coefficients(param, sign, std::max(N, 2));
        return v.integrate_dx_over_x().exp().truncated(N);
    };
    switch (c) {
        case Case::IncrFpf: {
            if (l == 1) {  // f_1 = cosh z
                TruncatedSeries f(N);
                for (int n = 0; n <= N; n += 2) f[n] = Rat(1) / Rat(factorial(n));
                return f;
            }
            return (g_of(l - 1, -1) + g_of(l - 1, +1)).scaled(Rat(1, 2));
        }
        case Case::DecrFpf:
            return g_of(2 * l + 1, -1);
        case Case::Inv: {
            TruncatedSeries ez(N);
            for (int n = 0; n <= N; ++n) ez[n] = Rat(1) / Rat(factorial(n));
            return ez * g_of(l, -1);
        }
    }
    throw std::logic_error("bad case tag");
}

std::vector<Int> chazy_coefficients_scaled(int l, int sign, int N) {
    if (N < 2) throw std::invalid_argument("chazy_coefficients_scaled: N must be >= 2");
    if (l < 1) throw std::invalid_argument("chazy_coefficients_scaled: l must be >= 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("chazy: sign must be +/-1");

    std::vector<Int> b(N + 1, Int(0));
    b[2] = (l == 1) ? Int(2 * (1 + sign)) : Int(2);  // b_2 = 2 a_2

    // For odd l every seeded index (2 and l+1) is even and the recursion
    // preserves parity (the equation is invariant under x -> -x), so the
    // solution is an even series; skip odd indices entirely then.
    const bool even_only = (l % 2 == 1);

    // Pascal row: binom[m] = C(n+1, m) for the current n.
    std::vector<Int> binom(N + 2, Int(0));
    binom[0] = 1;
    int row = 0;  // binom currently holds row `row`

    Int rhs, t, pref;
    for (int n = 2; n < N; ++n) {
        // advance Pascal row to n+1
        while (row < n + 1) {
            for (int m = row + 1; m >= 1; --m) binom[m] += binom[m - 1];
            ++row;
        }
        if (even_only && n % 2 == 0) continue;  // b_{n+1} with n+1 odd is 0

        // rhs = 16 n(n-2)(n+1) b_{n-1}
        //       - 2 sum_m m (3(n-m)+1) C(n+1, m) b_m b_{n+1-m}
        rhs = b[n - 1];
        rhs *= 16L * n * (n - 2);
        rhs *= (n + 1);
        const int mstep = even_only ? 2 : 1;
        for (int m = 2; m <= n - 1; m += mstep) {
            if (n + 1 - m < 2) continue;
            if (sgn(b[m]) == 0 || sgn(b[n + 1 - m]) == 0) continue;
            t = b[m] * b[n + 1 - m];
            t *= binom[m];
            t *= 2L * m * (3 * (n - m) + 1);
            rhs -= t;
        }
        if (n == l) {
            if (rhs != 0)
                throw std::logic_error("chazy_coefficients_scaled: inconsistent recursion at n = l");
            b[n + 1] = sign * Int(l + 1);  // a_{l+1} = sign/l! => b_{l+1} = sign (l+1)
        } else {
            pref = Int(n + 1) * (Int(n) * n - Int(l) * l);
            divexact_checked(b[n + 1], rhs, pref);
        }
    }
    return b;
}

std::vector<Int> chazy_exp_scaled(const std::vector<Int>& b) {
    const int N = static_cast<int>(b.size()) - 1;
    std::vector<Int> c(N + 1, Int(0));
    c[0] = 1;

    bool even_only = true;
    for (int n = 1; n <= N; n += 2)
        if (sgn(b[n]) != 0) { even_only = false; break; }

    std::vector<Int> binom(N + 1, Int(0));
    binom[0] = 1;
    int row = 0;

    Int acc, t;
    // g' = (v/x) g  =>  c_n = (1/n) sum_{k=1}^n C(n,k) b_k c_{n-k}
    for (int n = 1; n <= N; ++n) {
        while (row < n) {
            for (int m = row + 1; m >= 1; --m) binom[m] += binom[m - 1];
            ++row;
        }
        if (even_only && n % 2 == 1) continue;
        acc = 0;
        const int kstep = even_only ? 2 : 1;
        const int k0 = even_only ? 2 : 1;
        for (int k = k0; k <= n; k += kstep) {
            if (sgn(b[k]) == 0 || sgn(c[n - k]) == 0) continue;
            t = b[k] * c[n - k];
            t *= binom[k];
            acc += t;
        }
        divexact_checked(c[n], acc, Int(n));
    }
    return c;
}

std::vector<Int> cumulative_counts_column(Case c, int l, int n_max) {
    if (l < 1) throw std::invalid_argument("cumulative_counts_column: l must be >= 1");
    if (n_max < 0) throw std::invalid_argument("cumulative_counts_column: n_max must be >= 0");

    std::vector<Int> F(n_max + 1, Int(0));
    F[0] = 1;
    if (n_max == 0) return F;

    switch (c) {
        case Case::IncrFpf: {
            if (l == 1) {  // f_1 = cosh z: every cumulative count is 1
                for (int n = 0; n <= n_max; ++n) F[n] = 1;
                return F;
            }
            const int p = l - 1, M = 2 * n_max;
            if (p % 2 == 0) {
                // v^-(x) = v^+(-x): the average (g^- + g^+)/2 is the even
                // part of g^+, so even-index coefficients agree with g^+.
                auto cp = chazy_exp_scaled(chazy_coefficients_scaled(p, +1, M));
                for (int n = 1; n <= n_max; ++n) F[n] = cp[2 * n];
            } else {
                auto cm = chazy_exp_scaled(chazy_coefficients_scaled(p, -1, M));
                auto cp = chazy_exp_scaled(chazy_coefficients_scaled(p, +1, M));
                Int s;
                for (int n = 1; n <= n_max; ++n) {
                    s = cm[2 * n] + cp[2 * n];
                    divexact_checked(F[n], s, Int(2));
                }
            }
            return F;
        }
        case Case::DecrFpf: {
            auto cm = chazy_exp_scaled(chazy_coefficients_scaled(2 * l + 1, -1, 2 * n_max));
            for (int n = 1; n <= n_max; ++n) F[n] = cm[2 * n];
            return F;
        }
        case Case::Inv: {
            auto g = chazy_exp_scaled(chazy_coefficients_scaled(l, -1, n_max));
            // f = e^z g: n! [z^n] f = sum_k C(n,k) c_k
            std::vector<Int> binom(n_max + 1, Int(0));
            binom[0] = 1;
            Int acc, t;
            for (int n = 1; n <= n_max; ++n) {
                for (int m = n; m >= 1; --m) binom[m] += binom[m - 1];
                acc = 0;
                for (int k = 0; k <= n; ++k) {
                    if (sgn(g[k]) == 0) continue;
                    t = g[k] * binom[k];
                    acc += t;
                }
                F[n] = acc;
            }
            return F;
        }
    }
    throw std::logic_error("bad case tag");
}

}  // namespace limdist
