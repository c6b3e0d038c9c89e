#pragma once
// Command-layer entry point shared by the csmv binary and the tests.
// The binary only parses argv into a CliConfig; everything observable
// (report text, exit code) comes out of run(), so tests can drive it
// in-process with string streams.

#include <iosfwd>
#include <optional>
#include <string>

namespace csm {

struct CliConfig {
    enum class Cmd { List, Check, CrossCheck };

    Cmd cmd = Cmd::List;
    std::string family = "all"; // built-in family name, or "all"
    std::string scenario_path;  // when set, verifies this file instead
    std::string base;           // "formal" or "P<n>"
    int dim = 0;                // base dimension for formal runs
    std::optional<int> line_l;  // H-multiple for the L slot
    std::optional<int> line_s;  // H-multiple for the S slot
    std::string format = "json"; // "json" or "markdown"
    std::string out_path;        // when set, write the report here
    int max_formal_dim = 4;      // guard against runaway formal runs
};

// Cap for formal base dimensions, read from CSMV_MAX_FORMAL_DIM when the
// variable is set to a positive integer.
int default_max_formal_dim();

// Executes the configured command. Reports go to `out` (or the file named
// by out_path), diagnostics to `err`. Returns 0 when every report passes,
// 1 when some identity check fails, 2 on configuration or data errors.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace csm
