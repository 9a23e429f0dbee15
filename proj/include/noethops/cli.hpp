#pragma once

#include <map>
#include <string>

namespace noethops {

// A parsed command-line invocation; the binary in tools/ maps argv onto
// this, and tests drive it directly.
struct CliInvocation {
    std::string command;
    std::string problem_text;
    std::string points_text; // contents of --points FILE, one point per line
    // string-valued flags: strategy, dependent, point, tol, seed, degree,
    // degrees, eliminate, max-degree, ideal, prime, operators, use-point,
    // subst; presence flags json, verify-input, produce-sb map to "1"
    std::map<std::string, std::string> flags;

    bool has(const std::string& k) const { return flags.count(k) > 0; }
    std::string get(const std::string& k, const std::string& dflt = "") const {
        auto it = flags.find(k);
        return it == flags.end() ? dflt : it->second;
    }
};

struct CliResult {
    int exit_code = 0;
    std::string output;
    std::string error;
};

// Exit codes: 0 success, 1 parse errors, 2 domain errors.
CliResult run_command(const CliInvocation& inv);

} // namespace noethops
