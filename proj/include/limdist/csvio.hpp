#pragma once
// CSV artifact emitters shared by the CLI and the validation suite: a small
// writer that stamps a config-hash header comment, a grid of the soft-edge
// limit laws with derivatives, and the overlay datasets behind the five
// standard diagnostic plots (transition terms, poissonized and finite-n
// CDF expansions, density expansions vs the exact tables).

#include "limdist/cases.hpp"
#include "limdist/tables.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace limdist {

// Locale-independent formatting: 17 significant digits, '.' decimal
// separator, no trailing padding.
std::string csv_double(double x);

class CsvWriter {
  public:
    // Writes "# config <hash>" (FNV-1a of the config JSON) and the header
    // row immediately; rows follow via row(). LF line endings throughout.
    CsvWriter(std::ostream& os, std::vector<std::string> columns, const std::string& config_json);
    void row(const std::vector<std::string>& cells);

  private:
    std::ostream& os_;
    std::size_t ncols_;
};

// `beta,t,F,F1,...,F7` on the inclusive grid lo, lo+step, ..., hi.
void write_tw_grid(std::ostream& os, int beta, double lo, double step, double hi,
                   const std::string& config_json);

// Overlay datasets for the five diagnostic figures:
//   1  hard-to-soft transition terms (param = kernel order nu):
//      `beta,nu,t,term3,scaled_residual` with residual scaled by h_nu^{-3}
//   2  poissonized CDF expansion (param = intensity r):
//      `case,r,l,t,exact,expansion_m0,...,expansion_m3`
//   3  finite-n CDF expansion, fixed-point-free cases (param = n):
//      `case,n,l,t,exact,expansion_m0,...,expansion_m3`
//   4  finite-n CDF expansion, involution case (param = n):
//      `case,n,l,t,exact,expansion_m0,...,expansion_m7`
//   5  density expansion, all cases (param = n):
//      `case,n,l,t,exact,expansion_m0,...,expansion_m7`
//      (exact = P(L = l); expansion columns are h * density expansion; the
//       fixed-point-free cases stop at m = 3, higher columns stay empty)
// Figures 3-5 need `param` to be a spot row of the summaries in data_dir.
void export_figure_data(int figure, double param, std::ostream& os,
                        const std::string& data_dir, const std::string& config_json);

}  // namespace limdist
