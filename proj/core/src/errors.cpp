#include "bezout/errors.hpp"

namespace bezout {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::not_divisible: return "NotDivisible";
    case Errc::not_square: return "NotSquare";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_invertible_over_ring: return "NotInvertibleOverRing";
    case Errc::no_solution: return "NoSolution";
    case Errc::not_group_invertible: return "NotGroupInvertible";
    case Errc::not_drazin_invertible: return "NotDrazinInvertible";
    case Errc::not_idempotent: return "NotIdempotent";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::condition_not_met: return "ConditionNotMet";
    case Errc::index_too_small: return "IndexTooSmall";
    case Errc::generation_exhausted: return "GenerationExhausted";
    case Errc::parse_error: return "ParseError";
    case Errc::internal_assertion: return "InternalAssertion";
    }
    return "Unknown";
}

} // namespace bezout
