#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bezout/matrix.hpp"
#include "bezout/rings.hpp"

namespace bezout {

/// Hermite form under unimodular column operations: a * transform = form.
///
/// Nonzero columns come first, column j has its pivot in row pivot_rows[j]
/// (strictly increasing) and zeros above it, pivots are canonical
/// associates, and entries to the left of a pivot in its row are reduced
/// modulo the pivot. The form is unique for a given column module.
///
/// For row_hermite the roles are transposed: transform * a = form.
template <BezoutRing R>
struct HermiteResult {
    Mat<R> form;
    Mat<R> transform;
    std::vector<std::size_t> pivot_rows;

    std::size_t rank() const noexcept { return pivot_rows.size(); }
    /// The leading rank() columns of form: a basis of the column module.
    Mat<R> basis() const { return form.block(0, 0, form.rows(), rank()); }
};

/// a = left * diag * right with left, right unimodular and diag holding the
/// invariant factors d_1 | d_2 | ... followed by zeros.
template <BezoutRing R>
struct SmithResult {
    Mat<R> left;
    Mat<R> diag;
    Mat<R> right;
    std::size_t rank = 0;

    std::vector<typename R::value_type> invariant_factors() const {
        std::vector<typename R::value_type> out;
        for (std::size_t i = 0; i < rank; ++i)
            out.push_back(diag(i, i));
        return out;
    }
};

/// a = left * right with inner dimension rank(a).
template <BezoutRing R>
struct RankFactorization {
    Mat<R> left;
    Mat<R> right;
    std::size_t rank = 0;
};

template <BezoutRing R>
HermiteResult<R> column_hermite(const Mat<R>& a);

template <BezoutRing R>
HermiteResult<R> row_hermite(const Mat<R>& a);

template <BezoutRing R>
SmithResult<R> smith(const Mat<R>& a);

/// Built from the Smith form: left = U[:, :r] * diag(d), right = V[:r, :].
/// The right factor is the top of a unimodular matrix, so it is onto R^r.
template <BezoutRing R>
RankFactorization<R> rank_factorization(const Mat<R>& a);

template <BezoutRing R>
std::size_t rank(const Mat<R>& a) {
    return column_hermite(a).rank();
}

/// Column modules R_r(a) and R_r(b) coincide.
template <BezoutRing R>
bool col_module_equal(const Mat<R>& a, const Mat<R>& b);

/// R_r(sub) is contained in R_r(a).
template <BezoutRing R>
bool col_module_contains(const Mat<R>& a, const Mat<R>& sub);

template <BezoutRing R>
bool row_module_equal(const Mat<R>& a, const Mat<R>& b) {
    return col_module_equal(a.transpose(), b.transpose());
}

template <BezoutRing R>
bool row_module_contains(const Mat<R>& a, const Mat<R>& sub) {
    return col_module_contains(a.transpose(), sub.transpose());
}

#define BEZOUT_DECLARE_NORMAL_FORMS(R)                                          \
    extern template HermiteResult<R> column_hermite<R>(const Mat<R>&);         \
    extern template HermiteResult<R> row_hermite<R>(const Mat<R>&);            \
    extern template SmithResult<R> smith<R>(const Mat<R>&);                    \
    extern template RankFactorization<R> rank_factorization<R>(const Mat<R>&); \
    extern template bool col_module_equal<R>(const Mat<R>&, const Mat<R>&);    \
    extern template bool col_module_contains<R>(const Mat<R>&, const Mat<R>&);
BEZOUT_FOR_EACH_RING(BEZOUT_DECLARE_NORMAL_FORMS)
#undef BEZOUT_DECLARE_NORMAL_FORMS

} // namespace bezout
