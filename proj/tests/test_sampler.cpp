#include "limdist/sampler.hpp"
#include "limdist/tables.hpp"

#include <doctest.h>

#include <cmath>

using namespace limdist;

TEST_SUITE("sampler") {
    TEST_CASE("rng streams are independent of call interleaving") {
        RngStream a(42, 0), b(42, 0);
        for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
        RngStream c(42, 1);
        CHECK(c.next_u64() != RngStream(42, 0).next_u64());
        CHECK(c.next_u64() != RngStream(43, 1).next_u64());
    }

    TEST_CASE("bounded draws are in range and roughly uniform") {
        RngStream rng(1, 0);
        long buckets[7] = {0};
        for (int i = 0; i < 70000; ++i) {
            const std::uint32_t v = rng.next_below(7);
            REQUIRE(v < 7);
            ++buckets[v];
        }
        for (long b : buckets) CHECK(std::abs(b - 10000) < 500);  // ~5 sigma
    }

    TEST_CASE("samples are valid involutions") {
        RngStream rng(99, 0);
        for (int trial = 0; trial < 50; ++trial) {
            const Permutation p = sample_involution(20, rng);
            CHECK(is_involution(p));
            const Permutation q = sample_fpf_involution(10, rng);
            CHECK(is_involution(q));
            for (int i = 0; i < 20; ++i) CHECK(q[i] != i);
        }
    }

    TEST_CASE("histogram is deterministic per seed, regardless of threads") {
        const Histogram h1 = simulate_lengths(Case::Inv, 50, 4000, 1234, 1);
        const Histogram h4 = simulate_lengths(Case::Inv, 50, 4000, 1234, 4);
        CHECK(h1.counts == h4.counts);
        CHECK(h1.samples == 4000);
        long long total = 0;
        for (auto& [l, c] : h1.counts) total += c;
        CHECK(total == 4000);

        const Histogram other = simulate_lengths(Case::Inv, 50, 4000, 1235, 1);
        CHECK(h1.counts != other.counts);
    }

    TEST_CASE("length frequencies match the exact law at small n") {
        const int n = 8;
        const long long samples = 200000;
        const ExactTable t = length_counts_table(Case::Inv, n);
        const Histogram h = simulate_lengths(Case::Inv, n, samples, 5150, 2);
        const double total = Rat(t.case_total(n)).get_d();
        for (int l = 1; l <= n; ++l) {
            const double p = Rat(t.count(n, l)).get_d() / total;
            const long long observed = h.counts.count(l) ? h.counts.at(l) : 0;
            const double se = std::sqrt(samples * p * (1 - p));
            CHECK(std::abs(observed - samples * p) <= 5 * se + 1);
        }
    }

    TEST_CASE("fpf cases report the observed raw length") {
        // decr-fpf lengths are even (recorded as the half-length by the
        // exact tables, but the histogram stores the observed L).
        const Histogram h = simulate_lengths(Case::DecrFpf, 12, 2000, 7, 1);
        for (auto& [l, c] : h.counts) CHECK(l % 2 == 0);
    }
}
