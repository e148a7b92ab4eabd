#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bezout/matrix_io.hpp"

namespace bezout::selftest {

enum class Profile { quick, full };

struct Options {
    Profile profile = Profile::quick;
    std::uint64_t seed = 1;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    /// Deterministic facts: counts, seeds, first failing instance.
    Json details;
    double seconds = 0;
    /// 0 when the criterion states no runtime limit.
    double budget_seconds = 0;
};

inline constexpr int criterion_count = 8;

/// Runs one acceptance criterion (1..8). Progress and timings go to log.
CriterionResult run_criterion(int id, const Options& opt, std::ostream* log);

std::vector<CriterionResult> run_all(const Options& opt, std::ostream* log);

bool all_passed(const std::vector<CriterionResult>& results);

/// Summary document. Contains no timings, so equal options give
/// byte-identical summaries.
Json summary(const Options& opt, const std::vector<CriterionResult>& results);

} // namespace bezout::selftest
