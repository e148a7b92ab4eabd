#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <string_view>

#include "bezout/errors.hpp"

namespace bezout {

/// The three concrete domains the library works over.
enum class RingKind { integers, rationals, polynomials };

/// Short tag used in matrix files and on the command line.
constexpr std::string_view ring_tag(RingKind kind) noexcept {
    switch (kind) {
    case RingKind::integers: return "int";
    case RingKind::rationals: return "rat";
    case RingKind::polynomials: return "polyrat";
    }
    return "?";
}

std::optional<RingKind> parse_ring_tag(std::string_view tag) noexcept;

template <typename V>
struct Associate {
    V unit;
    V associate;
};

template <typename V>
struct DivMod {
    V quot;
    V rem;
};

/// Effective Bezout domain with a Euclidean division used for reductions.
///
/// divmod(a, b) must return a remainder that is "reduced" with respect to a
/// canonical b: in [0, b) for integers, of lower degree for polynomials, and
/// zero for the field. size_less orders nonzero elements for pivot choice.
template <typename R>
concept BezoutRing = requires(const typename R::value_type& a, const typename R::value_type& b) {
    typename R::value_type;
    { R::kind } -> std::convertible_to<RingKind>;
    { R::zero() } -> std::same_as<typename R::value_type>;
    { R::one() } -> std::same_as<typename R::value_type>;
    { R::is_zero(a) } -> std::same_as<bool>;
    { R::is_unit(a) } -> std::same_as<bool>;
    { R::unit_inverse(a) } -> std::same_as<typename R::value_type>;
    { R::canonicalize(a) } -> std::same_as<Associate<typename R::value_type>>;
    { R::divmod(a, b) } -> std::same_as<DivMod<typename R::value_type>>;
    { R::try_div(a, b) } -> std::same_as<std::optional<typename R::value_type>>;
    { R::size_less(a, b) } -> std::same_as<bool>;
    { R::to_text(a) } -> std::same_as<std::string>;
    { a + b } -> std::convertible_to<typename R::value_type>;
    { a - b } -> std::convertible_to<typename R::value_type>;
    { a * b } -> std::convertible_to<typename R::value_type>;
    { a == b } -> std::convertible_to<bool>;
};

/// Bezout data for a pair: s*a + t*b = g, a = g*u, b = g*v, and
/// [[s, t], [-v, u]] has determinant 1 whenever (a, b) != (0, 0).
template <typename V>
struct Xgcd {
    V g, s, t, u, v;
};

template <BezoutRing R>
Associate<typename R::value_type> canonicalize(const typename R::value_type& a) {
    return R::canonicalize(a);
}

template <BezoutRing R>
typename R::value_type exact_div(const typename R::value_type& a, const typename R::value_type& b) {
    if (R::is_zero(b))
        raise(Errc::division_by_zero, "exact division by zero");
    auto q = R::try_div(a, b);
    if (!q)
        raise(Errc::not_divisible, R::to_text(b) + " does not divide " + R::to_text(a));
    return *std::move(q);
}

template <BezoutRing R>
bool divides(const typename R::value_type& d, const typename R::value_type& a) {
    if (R::is_zero(d))
        return R::is_zero(a);
    return R::try_div(a, d).has_value();
}

template <BezoutRing R>
Xgcd<typename R::value_type> xgcd(const typename R::value_type& a, const typename R::value_type& b) {
    using V = typename R::value_type;
    if (R::is_zero(a) && R::is_zero(b))
        return {R::zero(), R::zero(), R::zero(), R::zero(), R::zero()};

    V r0 = a, r1 = b;
    V s0 = R::one(), s1 = R::zero();
    V t0 = R::zero(), t1 = R::one();
    while (!R::is_zero(r1)) {
        auto [q, r] = R::divmod(r0, r1);
        V s2 = s0 - q * s1;
        V t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }

    auto [unit, g] = R::canonicalize(r0);
    V unit_inv = R::unit_inverse(unit);
    V s = s0 * unit_inv;
    V t = t0 * unit_inv;
    V u = exact_div<R>(a, g);
    V v = exact_div<R>(b, g);

    // Shift along the kernel direction (v, -u) to keep s reduced modulo v.
    if (!R::is_zero(v)) {
        auto [q, r] = R::divmod(s, v);
        s = std::move(r);
        t = t + q * u;
    }
    return {std::move(g), std::move(s), std::move(t), std::move(u), std::move(v)};
}

} // namespace bezout
