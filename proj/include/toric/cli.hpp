#pragma once

// Command dispatch for the toric-precision executable.

#include "toric/tfp.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace toric::cli {

inline const std::vector<std::string>& verbs() {
    static const std::vector<std::string> v{"facets", "blend", "verify", "tfp", "horn-tfp",
                                            "horn-validate", "horn-minimize", "mle", "ips", "patch"};
    return v;
}

struct Command {
    std::string verb;
    std::vector<std::string> inputs;
    std::size_t samples = 50;
    std::uint64_t seed = 0;
    double tol = 1e-10;
    std::size_t max_iter = 10000;
    DenominatorForm form = DenominatorForm::B;
    bool json = false;
    std::string data;    // mle, ips
    std::string horn;    // mle: Horn pair to compare against
    std::string at;      // patch: evaluation point
    std::string control; // patch: control points file
};

/// Exit codes: 0 success, 1 a verification failed, 2 bad input.
struct Result {
    int exit_code = 0;
    std::string output;
    std::string error;
};

Result run_command(const Command& cmd);

} // namespace toric::cli
