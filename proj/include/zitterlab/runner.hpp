#pragma once

#include <string>

namespace zitterlab::cli {

struct RunContext {
    std::string command;      // algebra-check | zitter | pairsim | scan | calc
    std::string config_path;  // flat JSON, dotted-section keys
    std::string out_dir = ".";
    bool emit_svg = false;
};

// Parses and validates the config, dispatches, writes all outputs plus a
// metadata sidecar. Throws ConfigInvalid for validation problems (exit 1) and
// other zitterlab::Error subtypes for runtime failures (exit 2).
void run(const RunContext& ctx);

// Exception-to-exit-code mapping shared by the binary and the tests.
int run_with_exit_code(const RunContext& ctx);

}  // namespace zitterlab::cli
