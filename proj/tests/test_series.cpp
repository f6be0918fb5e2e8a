#include "limdist/series.hpp"

#include <doctest.h>

using namespace limdist;

namespace {

TruncatedSeries geometric(int order) {
    TruncatedSeries s(order);
    for (int n = 0; n <= order; ++n) s[n] = 1;
    return s;
}

}  // namespace

TEST_SUITE("series") {
    TEST_CASE("ring operations are exact") {
        TruncatedSeries x(8);
        x[1] = 1;
        const TruncatedSeries g = geometric(8);

        // (1 - x)(1 + x + x^2 + ...) = 1 at every retained order
        TruncatedSeries one(8);
        one[0] = 1;
        CHECK((one - x) * g == one);

        // scaling distributes over addition
        CHECK((g + g).scaled(Rat(1, 2)) == g);
    }

    TEST_CASE("exp and log are mutually inverse") {
        TruncatedSeries f(12);
        f[1] = Rat(3, 7);
        f[2] = Rat(-2, 5);
        f[5] = Rat(11, 13);
        CHECK(f.exp().log() == f);

        // exp(x) has coefficients 1/n!
        TruncatedSeries x(10);
        x[1] = 1;
        const TruncatedSeries e = x.exp();
        for (int n = 0; n <= 10; ++n) CHECK(e[n] == Rat(Int(1), factorial(n)));
    }

    TEST_CASE("exp requires vanishing constant term") {
        TruncatedSeries f(3);
        f[0] = 1;
        CHECK_THROWS(f.exp());
    }

    TEST_CASE("dx/x integral and x d/dx are inverse on series with c_0 = 0") {
        TruncatedSeries f(9);
        for (int n = 1; n <= 9; ++n) f[n] = Rat(n * n + 1, 2 * n + 3);
        CHECK(f.integrate_dx_over_x().x_ddx() == f);
        CHECK(f.x_ddx().integrate_dx_over_x() == f);
    }

    TEST_CASE("factorials") {
        CHECK(factorial(0) == 1);
        CHECK(factorial(10) == 3628800);
        // (2n-1)!! = (2n)! / (2^n n!)
        for (unsigned long n = 1; n <= 8; ++n) {
            const Int pow2 = Int(1) << n;
            CHECK(double_factorial_odd(n) * factorial(n) * pow2 == factorial(2 * n));
        }
    }
}
