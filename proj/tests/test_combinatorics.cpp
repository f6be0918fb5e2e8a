#include "limdist/combinatorics.hpp"
#include "limdist/sampler.hpp"
#include "limdist/tables.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace limdist;

TEST_SUITE("combinatorics") {
    TEST_CASE("involution enumeration counts") {
        const std::vector<Int> I = involution_numbers(9);
        for (int n = 1; n <= 9; ++n) {
            long count = 0;
            enumerate_involutions(n, false, [&](const Permutation& p) {
                CHECK(is_involution(p));
                ++count;
            });
            CHECK(I[n] == count);
        }
        // fixed-point-free involutions of S_{2n}: (2n-1)!!
        for (int n = 1; n <= 4; ++n) {
            long count = 0;
            enumerate_involutions(2 * n, true, [&](const Permutation& p) {
                for (int i = 0; i < 2 * n; ++i) CHECK(p[i] != i);
                ++count;
            });
            CHECK(double_factorial_odd(n) == count);
        }
    }

    TEST_CASE("patience sorting matches the quadratic oracle") {
        RngStream rng(7, 0);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + static_cast<int>(rng.next_below(12));
            Permutation p(n);
            for (int i = 0; i < n; ++i) p[i] = i;
            for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.next_below(i + 1)]);
            for (Direction d : {Direction::Increasing, Direction::Decreasing})
                CHECK(monotone_subseq_length(p, d) == monotone_subseq_length_dp(p, d));
        }
    }

    TEST_CASE("hook length formula") {
        CHECK(syt_count({1}) == 1);
        CHECK(syt_count({2, 1}) == 2);
        CHECK(syt_count({2, 2}) == 2);
        CHECK(syt_count({3, 2}) == 5);
        CHECK(syt_count({4, 3, 2, 1}) == 768);
        // sum over lambda |- n of d_lambda = I_n
        const std::vector<Int> I = involution_numbers(12);
        for (int n = 1; n <= 12; ++n) {
            Int total = 0;
            enumerate_partitions(n, [&](const Partition& lam) { total += syt_count(lam); });
            CHECK(total == I[n]);
        }
    }

    TEST_CASE("RSK counting sums match brute force") {
        for (Case c : {Case::IncrFpf, Case::DecrFpf, Case::Inv}) {
            const bool fpf = c != Case::Inv;
            const int n = fpf ? 5 : 9;  // permutation size 10 resp. 9
            const Direction d =
                c == Case::DecrFpf ? Direction::Decreasing : Direction::Increasing;
            std::map<int, long> hist;
            enumerate_involutions(fpf ? 2 * n : n, fpf, [&](const Permutation& p) {
                ++hist[monotone_subseq_length(p, d)];
            });
            for (int l = 1; l <= n; ++l) {
                const int observed = c == Case::DecrFpf ? 2 * l : l;
                const long brute = hist.count(observed) ? hist[observed] : 0;
                CHECK(rsk_count(c, n, l) == brute);
            }
        }
    }

    TEST_CASE("Goulden sum agrees with RSK on its validity range") {
        for (int n = 1; n <= 16; ++n)
            for (int l = (n + 1) / 2; l <= n; ++l)
                CHECK(goulden_count(n, l) == rsk_count(Case::Inv, n, l));
    }
}
