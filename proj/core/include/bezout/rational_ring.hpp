#pragma once

#include <gmpxx.h>

#include "bezout/ring.hpp"

namespace bezout {

/// The rational field, viewed as a (trivial) Bezout domain.
/// Every nonzero element is a unit, so canonical associates are 0 and 1.
struct RationalRing {
    using value_type = mpq_class;
    static constexpr RingKind kind = RingKind::rationals;

    static value_type zero() { return value_type(0); }
    static value_type one() { return value_type(1); }
    static bool is_zero(const value_type& a) { return sgn(a) == 0; }
    static bool is_unit(const value_type& a) { return sgn(a) != 0; }
    static value_type unit_inverse(const value_type& u) { return value_type(1) / u; }

    static Associate<value_type> canonicalize(const value_type& a) {
        if (sgn(a) == 0)
            return {one(), zero()};
        return {a, one()};
    }

    static DivMod<value_type> divmod(const value_type& a, const value_type& b) {
        if (sgn(b) == 0)
            raise(Errc::division_by_zero, "division by zero");
        return {value_type(a / b), zero()};
    }

    static std::optional<value_type> try_div(const value_type& a, const value_type& b) {
        if (sgn(b) == 0)
            return std::nullopt;
        return value_type(a / b);
    }

    static bool size_less(const value_type&, const value_type&) { return false; }

    static std::string to_text(const value_type& a) { return a.get_str(); }
    static value_type from_text(std::string_view text);
};

} // namespace bezout
