#include "limdist/edge.hpp"
#include "limdist/hypothesis.hpp"

#include <doctest.h>

#include <cmath>

using namespace limdist;

TEST_SUITE("hypothesis") {
    TEST_CASE("rational snapping via continued fractions") {
        const RationalFit half = rational_reconstruct(0.5, 100, 1e-12);
        CHECK(half.num == 1);
        CHECK(half.den == 2);
        CHECK(half.snapped);

        const RationalFit ugly = rational_reconstruct(-578.0 / 7875.0, 10000, 1e-9);
        CHECK(ugly.num == -578);
        CHECK(ugly.den == 7875);
        CHECK(ugly.snapped);

        // pi is not a small rational
        CHECK_FALSE(rational_reconstruct(M_PI, 10, 1e-12).snapped);
    }

    TEST_CASE("z-determinant interpolates the soft-edge laws") {
        // det(I - z V_Ai): z = 0 is trivial, z = +1/-1 factor the limit laws
        HypothesisLab lab;
        for (double s : {-3.0, -1.0, 1.0}) {
            CHECK(lab.fz(0.0, s) == doctest::Approx(1.0).epsilon(1e-13));
            CHECK(lab.fz(1.0, s) == doctest::Approx(tracy_widom_cdf(1, s)).epsilon(1e-9));
            CHECK(lab.fz(1.0, s) * lab.fz(-1.0, s) ==
                  doctest::Approx(tracy_widom_cdf(2, s)).epsilon(1e-9));
        }
    }

    TEST_CASE("analytic derivatives match finite differences") {
        HypothesisLab lab;
        const double z = 0.625, s = -1.5, h = 1e-5;
        const double fd1 = (lab.fz(z, s + h) - lab.fz(z, s - h)) / (2 * h);
        CHECK(lab.fz_prime(z, s) == doctest::Approx(fd1).epsilon(1e-8));
        const double fd2 = (lab.fz(z, s + h) - 2 * lab.fz(z, s) + lab.fz(z, s - h)) / (h * h);
        CHECK(lab.fz_second(z, s) == doctest::Approx(fd2).epsilon(1e-4));
        CHECK(lab.fz_derivative(z, 1, s) == doctest::Approx(lab.fz_prime(z, s)).epsilon(1e-8));
        CHECK(lab.fz_derivative(z, 2, s) == doctest::Approx(lab.fz_second(z, s)).epsilon(1e-8));
    }

    TEST_CASE("auxiliary operator trace identities") {
        for (double s : {-2.0, 0.0, 1.0}) {
            const auto [tr_l, misfit] = trace_identity_check(s);
            CHECK(tr_l <= 1e-10);
            CHECK(misfit <= 1e-10);
        }
    }

    TEST_CASE("first-order coefficient reconstruction snaps to -2/5") {
        const ReconstructionReport rep = reconstruct_coefficients(0.5, 1);
        CHECK(rep.pass);
        REQUIRE(rep.coefficients.size() == 1);
        CHECK(rep.coefficients[0].num == -2);
        CHECK(rep.coefficients[0].den == 5);
        CHECK(rep.coefficients[0].snapped);
        CHECK(rep.residual <= rep.tolerance);
        const std::string j = rep.to_json();
        CHECK(j.find("\"pass\"") != std::string::npos);
    }
}
