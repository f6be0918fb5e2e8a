#include "limdist/edge.hpp"

#include <doctest.h>

#include <cmath>

using namespace limdist;

TEST_SUITE("edge") {
    TEST_CASE("limit laws are proper distribution functions") {
        const TracyWidom& tw = tracy_widom();
        for (int beta : {1, 2, 4}) {
            double prev = 0;
            for (double t = -9.0; t <= 6.0; t += 0.5) {
                const double F = tw.cdf(beta, t);
                CHECK(F >= prev - 1e-14);
                CHECK(F >= -1e-13);  // representation wiggle at the far tail
                CHECK(F <= 1.0 + 1e-14);
                prev = F;
            }
            CHECK(tw.cdf(beta, -10.0) < 1e-6);
            CHECK(tw.cdf(beta, 7.0) >= 1.0 - 1e-4);  // GOE tail ~ 4e-6 at t = 7
        }
    }

    TEST_CASE("representation agrees with direct determinants") {
        const TracyWidom& tw = tracy_widom();
        for (int beta : {1, 2, 4})
            for (double t : {-5.0, -2.5, 0.0, 2.0})
                CHECK(tw.cdf(beta, t) == doctest::Approx(tw.cdf_direct(beta, t)).epsilon(1e-11));
    }

    TEST_CASE("ensemble interrelation F4 = (F1 + F2/F1) / 2") {
        const TracyWidom& tw = tracy_widom();
        for (double t : {-4.0, -2.0, -1.0, 0.0, 1.5}) {
            const double f1 = tw.cdf(1, t), f2 = tw.cdf(2, t), f4 = tw.cdf(4, t);
            CHECK(f4 == doctest::Approx(0.5 * (f1 + f2 / f1)).epsilon(1e-11));
        }
    }

    TEST_CASE("derivatives match finite differences") {
        const TracyWidom& tw = tracy_widom();
        const double h = 1e-5;
        for (int beta : {1, 4})
            for (double t : {-3.0, -1.0, 0.5}) {
                const double fd = (tw.cdf(beta, t + h) - tw.cdf(beta, t - h)) / (2 * h);
                CHECK(tw.derivative(beta, 1, t) == doctest::Approx(fd).epsilon(1e-8));
                const double fd2 =
                    (tw.cdf(beta, t + h) - 2 * tw.cdf(beta, t) + tw.cdf(beta, t - h)) / (h * h);
                CHECK(tw.derivative(beta, 2, t) == doctest::Approx(fd2).epsilon(1e-5));
            }
    }

    TEST_CASE("moment routes agree") {
        const TracyWidom& tw = tracy_widom();
        for (int beta : {1, 4}) {
            CHECK(tw.moment(beta, 0) == doctest::Approx(1.0).epsilon(1e-10));
            for (int j = 1; j <= 5; ++j)
                CHECK(tw.moment(beta, j) ==
                      doctest::Approx(tw.moment_by_parts(beta, j)).epsilon(1e-9));
        }
    }

    TEST_CASE("hard-edge closed forms") {
        for (double s : {0.5, 1.0, 2.0}) {
            CHECK(hard_edge_gap(4, 4 * s * s, 1.0) ==
                  doctest::Approx(std::exp(-s * s / 2) * std::cosh(s)).epsilon(1e-10));
            CHECK(hard_edge_gap(1, 4 * s * s, -0.5) ==
                  doctest::Approx(std::exp(-s - s * s / 2)).epsilon(1e-10));
        }
    }

    TEST_CASE("poissonized CDF is a CDF in l") {
        for (Case c : {Case::IncrFpf, Case::DecrFpf, Case::Inv}) {
            double prev = 0;
            for (int l = 1; l <= 48; ++l) {
                const double p = poissonized_cdf(c, l, 12.0);
                CHECK(p >= prev - 1e-12);
                CHECK(p <= 1.0 + 1e-12);
                prev = p;
            }
            CHECK(prev > 1.0 - 1e-8);
        }
    }

    TEST_CASE("transition residual shrinks with the truncation order") {
        for (int beta : {1, 4}) {
            const double r0 = std::abs(hard_to_soft_probe(beta, 800.0, -1.0, 0));
            const double r1 = std::abs(hard_to_soft_probe(beta, 800.0, -1.0, 1));
            const double r3 = std::abs(hard_to_soft_probe(beta, 800.0, -1.0, 3));
            CHECK(r1 < 0.3 * r0);
            CHECK(r3 < 0.01 * r0);
        }
    }

    TEST_CASE("transition terms drive the residual at leading order") {
        for (int beta : {1, 4})
            for (double t : {-2.0, 0.0}) {
                const double nu = 800.0;
                const double h = std::pow(2.0, -1.0 / 3.0) * std::pow(nu, -2.0 / 3.0);
                const double lead = hard_to_soft_probe(beta, nu, t, 0) / h;
                CHECK(lead == doctest::Approx(transition_term(beta, 1, t)).epsilon(0.05));
            }
    }
}
