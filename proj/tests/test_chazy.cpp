#include "limdist/chazy.hpp"
#include "limdist/tables.hpp"

#include <doctest.h>

using namespace limdist;

TEST_SUITE("chazy") {
    TEST_CASE("reference and scaled-integer paths agree") {
        for (int l : {1, 2, 3, 5}) {
            for (int sign : {-1, 1}) {
                const TruncatedSeries a = chazy_coefficients(l, sign, 24);
                const std::vector<Int> b = chazy_coefficients_scaled(l, sign, 24);
                Int nfact = 1;
                for (int n = 0; n <= 24; ++n) {
                    if (n > 0) nfact *= n;
                    CHECK(a[n] * nfact == b[n]);
                }
            }
        }
    }

    TEST_CASE("leading structure of the solution") {
        const TruncatedSeries a = chazy_coefficients(4, -1, 12);
        CHECK(a[0] == 0);
        CHECK(a[1] == 0);
        CHECK(a[2] == 1);           // v = x^2 + ...
        CHECK(a[3] == 0);
        CHECK(a[4] == 0);
        CHECK(a[5] == Rat(-1, 24)); // sign/l! at order l+1
    }

    TEST_CASE("base generating function is cosh") {
        const TruncatedSeries f = generating_series(Case::IncrFpf, 1, 20);
        for (int n = 0; n <= 20; ++n)
            CHECK(f[n] == (n % 2 == 0 ? Rat(Int(1), factorial(n)) : Rat(0)));
    }

    TEST_CASE("generating series saturate at l = n") {
        // For l >= n every length is <= l (threshold 2l covers decr-fpf),
        // so the coefficient equals the total count: I_n/n! or (2n-1)!!/(2n)!.
        const std::vector<Int> inv = involution_numbers(10);
        const TruncatedSeries fi = generating_series(Case::Inv, 10, 10);
        for (int n = 0; n <= 10; ++n) CHECK(fi[n] * factorial(n) == inv[n]);

        const TruncatedSeries fd = generating_series(Case::DecrFpf, 6, 12);
        for (int n = 1; n <= 6; ++n)
            CHECK(fd[2 * n] * factorial(2 * n) == double_factorial_odd(n));
    }

    TEST_CASE("cumulative columns are monotone in l and exact at saturation") {
        for (Case c : {Case::IncrFpf, Case::DecrFpf, Case::Inv}) {
            std::vector<Int> prev;
            for (int l = 1; l <= 8; ++l) {
                const std::vector<Int> col = cumulative_counts_column(c, l, 8);
                if (!prev.empty())
                    for (int n = 0; n <= 8; ++n) CHECK(col[n] >= prev[n]);
                prev = col;
            }
            // l = n saturates to the total
            const std::vector<Int> inv = involution_numbers(8);
            for (int n = 1; n <= 8; ++n)
                CHECK(prev[n] == (c == Case::Inv ? inv[n] : double_factorial_odd(n)));
        }
    }
}
