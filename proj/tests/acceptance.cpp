// Acceptance gate: runs the full validation suite against the prebuilt
// table artifacts and prints one pass/fail line per check. Exit status is
// the number of failed checks.

#include "limdist/validate.hpp"

#include <cstdio>
#include <cstring>
#include <string>
#include <thread>

int main(int argc, char** argv) {
    std::string artifact_dir = "data";
    int threads = std::thread::hardware_concurrency();
    if (threads < 1) threads = 1;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::strcmp(argv[i], "--artifact-dir") == 0) artifact_dir = argv[i + 1];
        if (std::strcmp(argv[i], "--threads") == 0) threads = std::atoi(argv[i + 1]);
    }

    const auto results = limdist::run_validation_suite("all", artifact_dir, threads);
    int fails = 0;
    for (const auto& r : results) {
        std::printf("criterion %2d  %-36s  %s  (%6.1fs)  %s\n", r.id, r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++fails;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - fails,
                results.size());
    return fails;
}
