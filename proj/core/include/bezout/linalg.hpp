#pragma once

#include <optional>

#include "bezout/matrix.hpp"
#include "bezout/rings.hpp"

namespace bezout {

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact, so the computation never leaves the ring.
template <BezoutRing R>
typename R::value_type det(const Mat<R>& a);

/// Rank by fraction-free elimination, without transforms. Agrees with the
/// Hermite and Smith ranks; much cheaper on polynomial entries.
template <BezoutRing R>
std::size_t elimination_rank(const Mat<R>& a);

template <BezoutRing R>
bool is_unimodular(const Mat<R>& a) {
    return a.is_square() && R::is_unit(det(a));
}

/// Inverse with entries in the ring. Throws not_invertible_over_ring
/// (message carries the determinant) when det(a) is not a unit.
template <BezoutRing R>
Mat<R> inverse_over_ring(const Mat<R>& a);

/// Solves a * x = b with x over the ring, column by column, via the column
/// Hermite form of a. Throws no_solution if some column of b lies outside
/// the column module of a.
template <BezoutRing R>
Mat<R> solve_in_column_module(const Mat<R>& a, const Mat<R>& b);

/// As solve_in_column_module, with an empty result instead of no_solution.
template <BezoutRing R>
std::optional<Mat<R>> try_solve_in_column_module(const Mat<R>& a, const Mat<R>& b);

namespace detail {

/// Matrices up to this order are inverted through the adjugate.
inline constexpr std::size_t adjugate_limit = 4;

template <BezoutRing R>
Mat<R> inverse_by_adjugate(const Mat<R>& a);

template <BezoutRing R>
Mat<R> inverse_by_hermite(const Mat<R>& a);

} // namespace detail

#define BEZOUT_DECLARE_LINALG(R)                                              \
    extern template typename R::value_type det<R>(const Mat<R>&);            \
    extern template std::size_t elimination_rank<R>(const Mat<R>&);          \
    extern template Mat<R> inverse_over_ring<R>(const Mat<R>&);              \
    extern template Mat<R> solve_in_column_module<R>(const Mat<R>&, const Mat<R>&); \
    extern template std::optional<Mat<R>> try_solve_in_column_module<R>(const Mat<R>&, const Mat<R>&); \
    extern template Mat<R> detail::inverse_by_adjugate<R>(const Mat<R>&);    \
    extern template Mat<R> detail::inverse_by_hermite<R>(const Mat<R>&);
BEZOUT_FOR_EACH_RING(BEZOUT_DECLARE_LINALG)
#undef BEZOUT_DECLARE_LINALG

} // namespace bezout
