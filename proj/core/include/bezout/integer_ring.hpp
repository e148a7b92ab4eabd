#pragma once

#include <gmpxx.h>

#include "bezout/ring.hpp"

namespace bezout {

/// Arbitrary-precision integers. Canonical associates are nonnegative.
struct IntegerRing {
    using value_type = mpz_class;
    static constexpr RingKind kind = RingKind::integers;

    static value_type zero() { return value_type(0); }
    static value_type one() { return value_type(1); }
    static bool is_zero(const value_type& a) { return sgn(a) == 0; }
    static bool is_unit(const value_type& a) { return a == 1 || a == -1; }
    static value_type unit_inverse(const value_type& u) { return u; }

    static Associate<value_type> canonicalize(const value_type& a) {
        if (sgn(a) < 0)
            return {value_type(-1), value_type(-a)};
        return {value_type(1), a};
    }

    /// Euclidean division with 0 <= rem < |b|.
    static DivMod<value_type> divmod(const value_type& a, const value_type& b);

    static std::optional<value_type> try_div(const value_type& a, const value_type& b);

    static bool size_less(const value_type& a, const value_type& b) {
        return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
    }

    static std::string to_text(const value_type& a) { return a.get_str(); }
    static value_type from_text(std::string_view text);
};

} // namespace bezout
