#include "limdist/tables.hpp"

#include <doctest.h>

#include <cstdio>
#include <string>

using namespace limdist;

TEST_SUITE("tables") {
    TEST_CASE("involution numbers") {
        const std::vector<Int> I = involution_numbers(10);
        // A000085: 1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496
        const long ref[] = {1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496};
        REQUIRE(I.size() == 11);
        for (int n = 0; n <= 10; ++n) CHECK(I[n] == ref[n]);
    }

    TEST_CASE("small exact tables") {
        const ExactTable inv = length_counts_table(Case::Inv, 4);
        // n = 3: involutions 123, 213, 321, 132 -> lengths 3, 2, 1, 2
        CHECK(inv.count(3, 1) == 1);
        CHECK(inv.count(3, 2) == 2);
        CHECK(inv.count(3, 3) == 1);
        CHECK(inv.row_total(3) == 4);
        CHECK(inv.case_total(3) == 4);

        const ExactTable dec = length_counts_table(Case::DecrFpf, 3);
        // S_4 perfect matchings: 2143, 3412, 4321 -> decreasing lengths 2, 2, 4
        CHECK(dec.count(2, 1) == 2);
        CHECK(dec.count(2, 2) == 1);
        CHECK(dec.case_total(2) == 3);
    }

    TEST_CASE("row totals equal the case totals") {
        for (Case c : {Case::IncrFpf, Case::DecrFpf, Case::Inv}) {
            const ExactTable t = length_counts_table(c, 12);
            for (int n = 1; n <= 12; ++n) CHECK(t.row_total(n) == t.case_total(n));
        }
    }

    TEST_CASE("save/load round trip is bit-exact") {
        const ExactTable t = length_counts_table(Case::IncrFpf, 9);
        const std::string path = "test_tables_roundtrip.csv";
        save_table(t, path);
        const ExactTable u = load_table(path);
        CHECK(u.tag == t.tag);
        REQUIRE(u.n_max == t.n_max);
        for (int n = 1; n <= t.n_max; ++n)
            for (int l = 1; l <= n; ++l) CHECK(u.count(n, l) == t.count(n, l));
        std::remove(path.c_str());
        std::remove((path + ".json").c_str());
    }

    TEST_CASE("summary aggregates match the full table") {
        const TableSummary s = build_table_summary(Case::Inv, 15, {5, 15});
        const ExactTable t = length_counts_table(Case::Inv, 15);
        for (int n = 1; n <= 15; ++n) {
            Int sum = 0, suml = 0, suml2 = 0;
            for (int l = 1; l <= n; ++l) {
                sum += t.count(n, l);
                suml += Int(l) * t.count(n, l);
                suml2 += Int(l) * l * t.count(n, l);
            }
            CHECK(s.row_sum[n - 1] == sum);
            CHECK(s.row_sum_l[n - 1] == suml);
            CHECK(s.row_sum_l2[n - 1] == suml2);
        }
        for (int n : {5, 15})
            for (int l = 1; l <= n; ++l) CHECK(s.rows.at(n)[l - 1] == t.count(n, l));
    }

    TEST_CASE("summary save/load round trip") {
        const TableSummary s = build_table_summary(Case::DecrFpf, 10, {10});
        const std::string path = "test_summary_roundtrip.summary";
        save_table_summary(s, path);
        const TableSummary u = load_table_summary(path);
        CHECK(u.tag == s.tag);
        CHECK(u.n_max == s.n_max);
        CHECK(u.row_sum == s.row_sum);
        CHECK(u.row_sum_l == s.row_sum_l);
        CHECK(u.row_sum_l2 == s.row_sum_l2);
        CHECK(u.rows.at(10) == s.rows.at(10));
        std::remove(path.c_str());
    }

    TEST_CASE("fnv1a test vectors") {
        CHECK(fnv1a_hex("") == "cbf29ce484222325");
        CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
        CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
    }
}
