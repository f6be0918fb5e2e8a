#pragma once
// The validation suite: fourteen end-to-end checks covering the exact
// tables, the generating-function and hard-edge identities, the limit-law
// moments, the transition/poissonized/finite-n expansions, the coefficient
// reconstruction lab, Monte Carlo goodness of fit, the involution-number
// asymptotics, and the de-Poissonization sandwich. Shared by the `validate`
// CLI subcommand and the acceptance test binary.

#include <string>
#include <vector>

namespace limdist {

struct CheckResult {
    int id = 0;               // stable 1..14 numbering
    std::string name;
    std::string suite;        // identities, edge, expansion, bridge, hypothesis, simulation
    bool pass = false;
    std::string detail;       // measured values and the pinned tolerances
    double seconds = 0;
};

// suite: one of the suite tags above or "all".
std::vector<CheckResult> run_validation_suite(const std::string& suite,
                                              const std::string& data_dir,
                                              int threads);

}  // namespace limdist
