#include "limdist/cheb.hpp"
#include "limdist/fredholm.hpp"
#include "limdist/quadrature.hpp"
#include "limdist/sampler.hpp"
#include "limdist/special.hpp"

#include <doctest.h>

#include <cmath>

using namespace limdist;

TEST_SUITE("quadrature") {
    TEST_CASE("Gauss-Legendre integrates polynomials of degree 2m-1 exactly") {
        for (int m : {2, 5, 16}) {
            const QuadratureRule q = gauss_legendre(m, -1.5, 2.0);
            double wsum = 0;
            for (double w : q.weights) {
                CHECK(w > 0);
                wsum += w;
            }
            CHECK(wsum == doctest::Approx(3.5).epsilon(1e-14));
            for (int k = 0; k <= 2 * m - 1; ++k) {
                double num = 0;
                for (int i = 0; i < q.size(); ++i)
                    num += q.weights[i] * std::pow(q.nodes[i], k);
                const double exact =
                    (std::pow(2.0, k + 1) - std::pow(-1.5, k + 1)) / (k + 1);
                CHECK(num == doctest::Approx(exact).epsilon(1e-12));
            }
        }
    }
}

TEST_SUITE("special") {
    // Arbitrary-precision oracle gates for the production double-precision
    // special functions (the slow oracles recompute each value from the
    // Maclaurin series at adaptively chosen precision).
    TEST_CASE("Bessel J against the oracle at 200 pseudo-random (nu, x)") {
        RngStream rng(20260826, 0);
        for (int trial = 0; trial < 200; ++trial) {
            const double nu = -0.5 + 30.5 * rng.next_double();
            const double x = 60.0 * rng.next_double();
            const double ref = bessel_j_oracle(nu, x);
            CHECK(std::abs(bessel_j(nu, x) - ref) <= 1e-12);
        }
        // half-integer closed forms
        CHECK(bessel_j(0.5, 2.0) ==
              doctest::Approx(std::sqrt(2 / (M_PI * 2.0)) * std::sin(2.0)).epsilon(1e-14));
        CHECK(bessel_j(-0.5, 3.0) ==
              doctest::Approx(std::sqrt(2 / (M_PI * 3.0)) * std::cos(3.0)).epsilon(1e-14));
    }

    TEST_CASE("Airy pair against the oracle on [-20, 40]") {
        for (double x = -20.0; x <= 40.0; x += 0.5) {
            const auto [ai, aip] = airy_pair(x);
            const double r0 = airy_ai_oracle(x), r1 = airy_ai_prime_oracle(x);
            CHECK(std::abs(ai - r0) <= 1e-13 + 5e-13 * std::abs(r0));
            CHECK(std::abs(aip - r1) <= 1e-13 + 5e-13 * std::abs(r1));
        }
    }
}

TEST_SUITE("fredholm") {
    TEST_CASE("rank-one kernel determinant is 1 - z <phi, phi>") {
        const auto K = [](double x, double y) { return std::exp(-x) * std::exp(-y); };
        const DiscretizedKernel k = discretize(K, gauss_legendre(48, 0.0, 12.0));
        const double ip = (1.0 - std::exp(-24.0)) / 2.0;
        for (double z : {-1.0, 0.3, 1.0})
            CHECK(fredholm_det(k, z) == doctest::Approx(1.0 - z * ip).epsilon(1e-12));
        CHECK(fredholm_det(k, 0.0) == 1.0);
    }

    TEST_CASE("trace of operator products is cyclically invariant") {
        const QuadratureRule rule = gauss_legendre(40, 0.0, 20.0);
        const DiscretizedKernel K0 = discretize(airy_kernel(), rule);
        const DiscretizedKernel A = discretize(airy_prime_kernel(), rule);
        const DiscretizedKernel B = discretize(airy_second_kernel(), rule);
        for (double z : {0.0, 0.7}) {
            const double ab = resolvent_trace(K0, z, {&A, &B});
            const double ba = resolvent_trace(K0, z, {&B, &A});
            CHECK(std::abs(ab - ba) <= 1e-12 * (1 + std::abs(ab)));
            const double abab = resolvent_trace(K0, z, {&A, &B, &A, &B});
            const double baba = resolvent_trace(K0, z, {&B, &A, &B, &A});
            CHECK(std::abs(abab - baba) <= 1e-12 * (1 + std::abs(abab)));
        }
    }

    TEST_CASE("refinement guard accepts converged determinants") {
        const double v = fredholm_det_refined(airy_kernel(), -2.0, airy_truncation(-2.0), 60,
                                              1.0, 1e-10);
        const DiscretizedKernel k =
            discretize(airy_kernel(), gauss_legendre(120, -2.0, airy_truncation(-2.0)));
        CHECK(v == doctest::Approx(fredholm_det(k, 1.0)).epsilon(1e-12));
    }
}

TEST_SUITE("cheb") {
    TEST_CASE("interpolation, differentiation, integration of sin") {
        const ChebInterp f([](double x) { return std::sin(x); }, 0.0, 3.0, 40);
        const ChebInterp fp = f.derivative();
        for (double x = 0.0; x <= 3.0; x += 0.1) {
            CHECK(f(x) == doctest::Approx(std::sin(x)).epsilon(1e-13));
            CHECK(fp(x) == doctest::Approx(std::cos(x)).epsilon(1e-11));
        }
        CHECK(f.integrate() == doctest::Approx(1.0 - std::cos(3.0)).epsilon(1e-13));
        const ChebInterp F = f.antiderivative();
        CHECK(F(0.0) == doctest::Approx(0.0).epsilon(1e-13));
        CHECK(F(2.0) == doctest::Approx(1.0 - std::cos(2.0)).epsilon(1e-13));
        CHECK(f.plateau_index() < 40);  // sampling resolved the function
    }

    TEST_CASE("panelled representation matches a single panel") {
        const PanelledCheb g([](double x) { return std::exp(-x * x); }, {-3.0, 0.0, 2.0, 5.0},
                             48);
        for (double x = -3.0; x <= 5.0; x += 0.25)
            CHECK(g(x) == doctest::Approx(std::exp(-x * x)).epsilon(1e-12));
        CHECK(g.integrate() == doctest::Approx(std::sqrt(M_PI) * 0.5 *
                                               (std::erf(5.0) + std::erf(3.0)))
                                   .epsilon(1e-12));
        const PanelledCheb gp = g.derivative();
        CHECK(gp(1.0) == doctest::Approx(-2.0 * std::exp(-1.0)).epsilon(1e-10));
    }
}
