#pragma once

// Command-line front end: counting, fiber/bijection queries, parking
// simulation, the verification suite, Hasse-diagram DOT output, and
// enumeration. Exposed as a function over streams so tests can drive it
// in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace ufr {

enum class OutputFormat { Table, Json, Csv };

struct CliConfig {
    OutputFormat format = OutputFormat::Table;
    int enumeration_cap = 8; // overridable via --cap / UFR_ENUM_CAP
    int workers = 0;         // 0 = hardware concurrency
    bool force = false;      // raises oracle caps to the requested n
};

/// Exit status contract: 0 success / all checks pass, 1 verification
/// failure, 2 usage error, 3 resource cap or arithmetic overflow.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ufr
