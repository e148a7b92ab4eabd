#pragma once

#include <optional>

#include "bezout/matrix.hpp"
#include "bezout/rings.hpp"

namespace bezout {

template <BezoutRing R>
struct DrazinResult {
    /// Least k >= 0 with x^{k+1} * inverse = x^k.
    std::size_t index = 0;
    Mat<R> inverse;
};

/// Unimodular h with h^{-1} e h = diag(I_rank, 0) for an idempotent e.
template <BezoutRing R>
struct IdempotentSplit {
    Mat<R> conjugator;
    Mat<R> conjugator_inv;
    std::size_t rank = 0;
};

/// x = conjugator * diag(core, 0) * conjugator^{-1} with core invertible
/// over the ring; exists exactly when x is group invertible.
template <BezoutRing R>
struct CoreSplit {
    Mat<R> conjugator;
    Mat<R> conjugator_inv;
    Mat<R> core;
    std::size_t rank = 0;
    Mat<R> group_inverse;
};

/// ax = xa, xax = x, axa = a.
template <BezoutRing R>
bool is_group_inverse(const Mat<R>& a, const Mat<R>& x) {
    return a * x == x * a && x * a * x == x && a * x * a == a;
}

/// ax = xa, xax = x, a^{k+1} x = a^k.
template <BezoutRing R>
bool is_drazin_inverse(const Mat<R>& a, const Mat<R>& x, std::size_t k) {
    const auto ak = a.pow(static_cast<unsigned>(k));
    return a * x == x * a && x * a * x == x && ak * a * x == ak;
}

/// Group inverse over the ring.
///
/// Existence is decided twice: by R_r(x) == R_r(x^2), and by invertibility
/// of right*left for the rank factorization x = left*right. The two must
/// agree; a disagreement raises internal_assertion. The value
/// left * (right*left)^{-2} * right is checked against the three defining
/// equations before it is returned.
template <BezoutRing R>
Mat<R> group_inverse(const Mat<R>& x);

template <BezoutRing R>
std::optional<Mat<R>> try_group_inverse(const Mat<R>& x);

template <BezoutRing R>
bool is_group_invertible(const Mat<R>& x) {
    return try_group_inverse(x).has_value();
}

/// Drazin inverse and index. Index 0 when x is invertible over the ring.
/// Otherwise k is the least k >= 1 with rank(x^k) = rank(x^{k+1}) (so k <= n),
/// the inverse exists iff x^k is group invertible, and then
/// x^D = x^{k-1} (x^k)^#. See docs/drazin_index.md.
template <BezoutRing R>
DrazinResult<R> drazin(const Mat<R>& x);

template <BezoutRing R>
std::optional<DrazinResult<R>> try_drazin(const Mat<R>& x);

/// Splits an idempotent along im(e) + im(I - e) using the Hermite bases of
/// both column modules.
template <BezoutRing R>
IdempotentSplit<R> idempotent_split(const Mat<R>& e);

template <BezoutRing R>
CoreSplit<R> core_split(const Mat<R>& x);

#define BEZOUT_DECLARE_GINV(R)                                                     \
    extern template Mat<R> group_inverse<R>(const Mat<R>&);                       \
    extern template std::optional<Mat<R>> try_group_inverse<R>(const Mat<R>&);    \
    extern template DrazinResult<R> drazin<R>(const Mat<R>&);                     \
    extern template std::optional<DrazinResult<R>> try_drazin<R>(const Mat<R>&);  \
    extern template IdempotentSplit<R> idempotent_split<R>(const Mat<R>&);        \
    extern template CoreSplit<R> core_split<R>(const Mat<R>&);
BEZOUT_FOR_EACH_RING(BEZOUT_DECLARE_GINV)
#undef BEZOUT_DECLARE_GINV

} // namespace bezout
