#include "limdist/csvio.hpp"

#include "limdist/edge.hpp"
#include "limdist/expansion.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace limdist {

namespace {

// Plot window for the overlay datasets; comfortably inside the Chebyshev
// representation interval of the limit laws (margins for derivatives).
constexpr double kOverlayLo = -6.5;
constexpr double kOverlayHi = 2.5;

TableSummary load_summary(const std::string& data_dir, Case c) {
    return load_table_summary(data_dir + "/" + case_name(c) + ".summary");
}

const std::vector<Int>& spot_row(const TableSummary& s, int n) {
    auto it = s.rows.find(n);
    if (it == s.rows.end())
        throw std::invalid_argument("n = " + std::to_string(n) +
                                    " is not a stored spot row of the " +
                                    std::string(case_name(s.tag)) + " summary");
    return it->second;
}

double int_ratio(const Int& num, const Int& den) { return Rat(num, den).get_d(); }

}  // namespace

std::string csv_double(double x) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::ostream& os, std::vector<std::string> columns,
                     const std::string& config_json)
    : os_(os), ncols_(columns.size()) {
    os_ << "# config " << fnv1a_hex(config_json) << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        os_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != ncols_) throw std::invalid_argument("csv row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i)
        os_ << cells[i] << (i + 1 < cells.size() ? "," : "\n");
}

void write_tw_grid(std::ostream& os, int beta, double lo, double step, double hi,
                   const std::string& config_json) {
    if (!(step > 0)) throw std::invalid_argument("grid step must be positive");
    std::vector<std::string> cols = {"beta", "t", "F"};
    for (int k = 1; k <= 7; ++k) cols.push_back("F" + std::to_string(k));
    CsvWriter w(os, cols, config_json);
    const TracyWidom& tw = tracy_widom();
    for (int i = 0;; ++i) {
        const double t = lo + i * step;
        if (t > hi + 1e-12 * std::max(1.0, std::abs(hi))) break;
        std::vector<std::string> cells = {std::to_string(beta), csv_double(t),
                                          csv_double(tw.cdf(beta, t))};
        for (int k = 1; k <= 7; ++k) cells.push_back(csv_double(tw.derivative(beta, k, t)));
        w.row(cells);
    }
}

namespace {

// Figure 1: third transition term vs the h^{-3}-scaled remainder of the
// m = 2 truncation, for both limit laws, t on [-6, 2].
void figure_transition(double nu, std::ostream& os, const std::string& config_json) {
    CsvWriter w(os, {"beta", "nu", "t", "term3", "scaled_residual"}, config_json);
    const double h = std::pow(2.0, -1.0 / 3.0) * std::pow(nu, -2.0 / 3.0);
    for (int beta : {1, 4}) {
        for (int i = 0; i <= 64; ++i) {
            const double t = -6.0 + i / 8.0;
            w.row({std::to_string(beta), csv_double(nu), csv_double(t),
                   csv_double(transition_term(beta, 3, t)),
                   csv_double(hard_to_soft_probe(beta, nu, t, 2) / (h * h * h))});
        }
    }
}

// Figure 2: poissonized CDF at intensity r vs its truncations, l varied so
// the scaled variable covers the plot window.
void figure_poissonized(double r, std::ostream& os, const std::string& config_json) {
    std::vector<std::string> cols = {"case", "r", "l", "t", "exact"};
    for (int m = 0; m <= 3; ++m) cols.push_back("expansion_m" + std::to_string(m));
    CsvWriter w(os, cols, config_json);
    for (Case c : {Case::IncrFpf, Case::DecrFpf, Case::Inv}) {
        const double rc = case_r(c, r);
        for (long l = 1;; ++l) {
            const double t = scaled_variable(case_l_index(c, l), rc);
            if (t > kOverlayHi) break;
            if (t < kOverlayLo) continue;
            std::vector<std::string> cells = {case_name(c), csv_double(r), std::to_string(l),
                                              csv_double(t),
                                              csv_double(poissonized_cdf(c, static_cast<int>(l), r))};
            for (int m = 0; m <= 3; ++m) cells.push_back(csv_double(poissonized_expansion(c, r, l, m)));
            w.row(cells);
        }
    }
}

// Figures 3/4: exact CDF row at a spot value of n vs its truncations.
void figure_cdf(const std::vector<Case>& cases, int m_max, int n, std::ostream& os,
                const std::string& data_dir, const std::string& config_json) {
    std::vector<std::string> cols = {"case", "n", "l", "t", "exact"};
    for (int m = 0; m <= m_max; ++m) cols.push_back("expansion_m" + std::to_string(m));
    CsvWriter w(os, cols, config_json);
    for (Case c : cases) {
        const TableSummary s = load_summary(data_dir, c);
        const std::vector<Int>& row = spot_row(s, n);
        const Int total = s.case_total(n);
        const double gn = case_gamma(c) * static_cast<double>(n);
        Int cum = 0;
        for (long l = 1; l <= static_cast<long>(row.size()); ++l) {
            cum += row[l - 1];
            const double t = scaled_variable(case_l_star(c, l), gn);
            if (t < kOverlayLo) continue;
            if (t > kOverlayHi) break;
            std::vector<std::string> cells = {case_name(c), std::to_string(n), std::to_string(l),
                                              csv_double(t), csv_double(int_ratio(cum, total))};
            for (int m = 0; m <= m_max; ++m) cells.push_back(csv_double(cdf_expansion(c, n, l, m)));
            w.row(cells);
        }
    }
}

// Figure 5: exact length probabilities at a spot value of n vs the density
// expansions (scaled back to probability by the step width h).
void figure_density(int n, std::ostream& os, const std::string& data_dir,
                    const std::string& config_json) {
    std::vector<std::string> cols = {"case", "n", "l", "t", "exact"};
    for (int m = 0; m <= 7; ++m) cols.push_back("expansion_m" + std::to_string(m));
    CsvWriter w(os, cols, config_json);
    for (Case c : {Case::IncrFpf, Case::DecrFpf, Case::Inv}) {
        const TableSummary s = load_summary(data_dir, c);
        const std::vector<Int>& row = spot_row(s, n);
        const Int total = s.case_total(n);
        const double gn = case_gamma(c) * static_cast<double>(n);
        const double h = case_h(c, n);
        const int m_max = c == Case::Inv ? 7 : 3;
        for (long l = 1; l <= static_cast<long>(row.size()); ++l) {
            const double t = scaled_variable(case_l_star(c, l - 0.5), gn);
            if (t < kOverlayLo) continue;
            if (t > kOverlayHi) break;
            std::vector<std::string> cells = {case_name(c), std::to_string(n), std::to_string(l),
                                              csv_double(t), csv_double(int_ratio(row[l - 1], total))};
            for (int m = 0; m <= 7; ++m)
                cells.push_back(m <= m_max ? csv_double(h * pdf_expansion(c, n, l, m)) : "");
            w.row(cells);
        }
    }
}

}  // namespace

void export_figure_data(int figure, double param, std::ostream& os,
                        const std::string& data_dir, const std::string& config_json) {
    switch (figure) {
        case 1: figure_transition(param, os, config_json); return;
        case 2: figure_poissonized(param, os, config_json); return;
        case 3: figure_cdf({Case::IncrFpf, Case::DecrFpf}, 3, static_cast<int>(param), os,
                           data_dir, config_json); return;
        case 4: figure_cdf({Case::Inv}, 7, static_cast<int>(param), os, data_dir, config_json);
                return;
        case 5: figure_density(static_cast<int>(param), os, data_dir, config_json); return;
        default: throw std::invalid_argument("figure must be 1..5");
    }
}

}  // namespace limdist
