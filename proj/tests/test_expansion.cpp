#include "limdist/edge.hpp"
#include "limdist/expansion.hpp"
#include "limdist/tables.hpp"

#include <doctest.h>

#include <cmath>

using namespace limdist;

TEST_SUITE("expansion") {
    TEST_CASE("zeroth truncation is the limit law on the lattice") {
        for (Case c : {Case::IncrFpf, Case::DecrFpf, Case::Inv}) {
            const long n = 500;
            const double gn = case_gamma(c) * n;
            int checked = 0;
            for (long l = 1; l <= n; ++l) {
                const double t = scaled_variable(case_l_star(c, l), gn);
                if (t < -3 || t > 1) continue;
                CHECK(cdf_expansion(c, n, l, 0) ==
                      doctest::Approx(tracy_widom_cdf(case_beta(c), t)).epsilon(1e-12));
                ++checked;
            }
            CHECK(checked >= 3);
        }
    }

    TEST_CASE("corrections improve on the limit law against exact tables") {
        const int n = 60;
        for (Case c : {Case::IncrFpf, Case::DecrFpf, Case::Inv}) {
            const ExactTable tab = length_counts_table(c, n);
            const Int total = tab.case_total(n);
            const double gn = case_gamma(c) * n;
            const int m = c == Case::Inv ? 7 : 3;
            double err0 = 0, errm = 0;
            Int cum = 0;
            for (int l = 1; l <= n; ++l) {
                cum += tab.count(n, l);
                const double t = scaled_variable(case_l_star(c, l), gn);
                if (t < -6 || t > 2) continue;
                const double exact = Rat(cum, total).get_d();
                err0 = std::max(err0, std::abs(exact - cdf_expansion(c, n, l, 0)));
                errm = std::max(errm, std::abs(exact - cdf_expansion(c, n, l, m)));
            }
            CHECK(errm < 0.2 * err0);
        }
    }

    TEST_CASE("density expansion sums to the CDF increments") {
        // midpoint-rule identity at the table level: h * pdf_expansion at the
        // half-integer lattice approximates the CDF difference
        const Case c = Case::Inv;
        const long n = 800;
        const double h = case_h(c, n);
        for (long l = 54; l <= 60; ++l) {
            const double diff = cdf_expansion(c, n, l, 7) - cdf_expansion(c, n, l - 1, 7);
            CHECK(h * pdf_expansion(c, n, l, 7) == doctest::Approx(diff).epsilon(2e-3));
        }
    }

    TEST_CASE("moment-form algebra") {
        MomentForm a;
        a.add({}, Rat(1)).add({1}, Rat(2));  // 1 + 2 M_1
        const MomentForm sq = a.times(a);    // 1 + 4 M_1 + 4 M_1^2
        MomentForm ref;
        ref.add({}, Rat(1)).add({1}, Rat(4)).add({1, 1}, Rat(4));
        CHECK(sq == ref);
        const double m1 = tw_moment(1, 1);
        CHECK(sq.value() == doctest::Approx((1 + 2 * m1) * (1 + 2 * m1)).epsilon(1e-12));
        CHECK(a.plus(a).minus(a) == a);
    }

    TEST_CASE("mean/variance expansion tracks the exact moments") {
        const int n = 60;
        for (Case c : {Case::DecrFpf, Case::Inv}) {
            const ExactTable tab = length_counts_table(c, n);
            Int suml = 0, suml2 = 0;
            const Int total = tab.case_total(n);
            for (int l = 1; l <= n; ++l) {
                suml += Int(l) * tab.count(n, l);
                suml2 += Int(l) * l * tab.count(n, l);
            }
            double ex_mean = Rat(suml, total).get_d();
            double ex_var = Rat(suml2, total).get_d() - ex_mean * ex_mean;
            // the expansion describes the raw observed length: L = 2l for
            // decr-fpf (the table indexes the half-length), L = l for inv
            if (c == Case::DecrFpf) {
                ex_mean *= 2;
                ex_var *= 4;
            }
            const int m = c == Case::Inv ? 7 : 3;
            const MeanVar mv0 = mean_variance_expansion(c, n, 0);
            const MeanVar mv = mean_variance_expansion(c, n, m);
            CHECK(std::abs(mv.mean - ex_mean) < 0.3 * std::abs(mv0.mean - ex_mean));
            CHECK(mv.variance == doctest::Approx(ex_var).epsilon(0.05));
        }
    }

    TEST_CASE("Jasz coefficients at the exponential generator") {
        // closed forms: c_1(n; r) = n - r, c_2(n; r) = (r^2 - 2nr + n(n-1))/2
        for (long n : {100L, 1000L}) {
            CHECK(jasz_coefficient_at(Generator::Exponential, 1, n, static_cast<double>(n)) ==
                  doctest::Approx(0.0).epsilon(1e-12));
            CHECK(jasz_coefficient(Generator::Exponential, 2, n) ==
                  doctest::Approx(-0.5 * n).epsilon(1e-10));
        }
    }

    TEST_CASE("de-Poissonization sandwich encloses the exact CDF") {
        const long n = 30;
        for (Case c : {Case::IncrFpf, Case::Inv}) {
            const ExactTable tab = length_counts_table(c, static_cast<int>(n));
            const Int total = tab.case_total(n);
            Int cum = 0;
            for (int l = 1; l <= n; ++l) {
                cum += tab.count(n, l);
                if (Rat(cum, total).get_d() < 0.05) continue;
                const auto [lo, hi] = depoisson_sandwich(c, n, l, 1.0);
                const double exact = Rat(cum, total).get_d();
                CHECK(lo <= exact + 1e-12);
                CHECK(hi >= exact - 1e-12);
                if (exact > 0.95) break;
            }
        }
    }

    TEST_CASE("involution-number asymptotics") {
        const std::vector<Int> I = involution_numbers(200);
        for (int n : {50, 100, 200}) {
            const double exact_log = std::log(Rat(I[n]).get_d());
            CHECK(involution_asymptotics_log(n, 3) == doctest::Approx(exact_log).epsilon(1e-6));
        }
        CHECK(involution_asymptotics(100, 3) == doctest::Approx(Rat(I[100]).get_d()).epsilon(1e-5));
    }
}
