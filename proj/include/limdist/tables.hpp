#pragma once
// Exact integer tables of length counts |{L_n^case = l}| (for decr-fpf the
// value is 2l and the table is indexed by the half-length l), compiled from
// the Chazy-series cumulative columns. Includes CSV persistence with a JSON
// sidecar, and a compact "summary" artifact used by the validation suite:
// full exact rows at selected spot values of n plus exact row aggregates
// (sum, sum l*count, sum l^2*count) for every n, which give exact row-sum
// conservation checks and exact means/variances without storing the O(n^2)
// table of huge integers.

#include "limdist/cases.hpp"
#include "limdist/series.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace limdist {

// I_0..I_{n_max} via I_{n+2} = I_{n+1} + (n+1) I_n.
std::vector<Int> involution_numbers(int n_max);

struct ExactTable {
    Case tag = Case::Inv;
    int n_max = 0;
    // counts[n-1][l-1] = |{L_n = l}| for 1 <= l <= n
    std::vector<std::vector<Int>> counts;

    const Int& count(int n, int l) const { return counts.at(n - 1).at(l - 1); }
    Int row_total(int n) const;
    // Total number of involutions of the case at size n: I_n or (2n-1)!!.
    Int case_total(int n) const;
};

ExactTable length_counts_table(Case c, int n_max);

// CSV `case,n,l,count` + JSON sidecar {case, n_max, checksum}; bit-exact
// round-trip. `path` is the CSV file; the sidecar is path + ".json".
void save_table(const ExactTable& t, const std::string& path);
ExactTable load_table(const std::string& path);

// FNV-1a 64-bit hash (hex) used as the sidecar checksum.
std::string fnv1a_hex(const std::string& bytes);

// ---- compact validation artifact ----

struct TableSummary {
    Case tag = Case::Inv;
    int n_max = 0;
    // exact rows: rows[n][l-1] = count(n, l), only for the spot values of n
    std::map<int, std::vector<Int>> rows;
    // aggregates over l = 1..n for every n = 1..n_max
    std::vector<Int> row_sum, row_sum_l, row_sum_l2;  // index n-1

    Int case_total(int n) const;
};

// Builds (or resumes) the summary; progress/checkpoint state is kept in
// `checkpoint_path` if non-empty so an interrupted build can resume.
TableSummary build_table_summary(Case c, int n_max, std::vector<int> spot_rows,
                                 const std::string& checkpoint_path = "",
                                 const std::function<void(int)>& progress = {});

void save_table_summary(const TableSummary& s, const std::string& path);
TableSummary load_table_summary(const std::string& path);

}  // namespace limdist
