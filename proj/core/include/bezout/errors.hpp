#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bezout {

/// Failure categories raised by the library. The CLI maps them one-to-one
/// onto process exit codes.
enum class Errc {
    division_by_zero,
    not_divisible,
    not_square,
    dimension_mismatch,
    not_invertible_over_ring,
    no_solution,
    not_group_invertible,
    not_drazin_invertible,
    not_idempotent,
    hypothesis_violated,
    condition_not_met,
    index_too_small,
    generation_exhausted,
    parse_error,
    internal_assertion,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, std::string instance = {})
        : std::runtime_error(message), code_(code), instance_(std::move(instance)) {}

    Errc code() const noexcept { return code_; }

    /// JSON text describing the offending input, when the raiser attached one.
    /// Always present for internal_assertion raised by the witness builders.
    const std::string& instance() const noexcept { return instance_; }

private:
    Errc code_;
    std::string instance_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace bezout
