#pragma once

namespace bezout::fault {

/// Test hooks that make the library misbehave on purpose, so the error
/// paths of the CLI and the self-test can be exercised end to end.
enum class Fault {
    none,
    /// similarity_witness reports its block-zero check as failed.
    witness_assertion,
    /// the fraction-field oracle flips its group-invertibility verdict.
    oracle_corruption,
};

void arm(Fault f) noexcept;
bool armed(Fault f) noexcept;

class ScopedFault {
public:
    explicit ScopedFault(Fault f) noexcept { arm(f); }
    ~ScopedFault() { arm(Fault::none); }
    ScopedFault(const ScopedFault&) = delete;
    ScopedFault& operator=(const ScopedFault&) = delete;
};

} // namespace bezout::fault
