#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bezout/errors.hpp"

namespace bezout::cli {

/// Process exit codes.
enum Exit : int {
    ok = 0,
    selftest_failed = 1,
    hypothesis = 2,
    not_invertible = 3,
    bad_input = 4,
    internal = 5,
};

int exit_code(Errc code) noexcept;

/// Runs one command line (args excludes the program name). Exactly one JSON
/// document is written to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bezout::cli
