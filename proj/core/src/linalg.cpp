#include "bezout/linalg.hpp"

#include "bezout/normal_forms.hpp"

namespace bezout {

template <BezoutRing R>
typename R::value_type det(const Mat<R>& a) {
    using V = typename R::value_type;
    a.require_square("det");
    const std::size_t n = a.rows();
    if (n == 0)
        return R::one();

    Mat<R> m = a;
    bool negate = false;
    V prev = R::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (R::is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && R::is_zero(m(p, k)))
                ++p;
            if (p == n)
                return R::zero();
            m.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_div<R>(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = R::zero();
        }
        prev = m(k, k);
    }
    V d = m(n - 1, n - 1);
    return negate ? V(R::zero() - d) : d;
}

template <BezoutRing R>
std::size_t elimination_rank(const Mat<R>& a) {
    using V = typename R::value_type;
    Mat<R> m = a;
    V prev = R::one();
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && R::is_zero(m(p, col)))
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(row, p);
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            for (std::size_t j = col + 1; j < m.cols(); ++j)
                m(i, j) = exact_div<R>(m(i, j) * m(row, col) - m(i, col) * m(row, j), prev);
            m(i, col) = R::zero();
        }
        prev = m(row, col);
        ++row;
    }
    return row;
}

namespace detail {

template <BezoutRing R>
Mat<R> inverse_by_adjugate(const Mat<R>& a) {
    a.require_square("inverse");
    const std::size_t n = a.rows();
    auto d = det(a);
    if (!R::is_unit(d))
        raise(Errc::not_invertible_over_ring, "determinant " + R::to_text(d) + " is not a unit");
    const auto d_inv = R::unit_inverse(d);
    if (n == 0)
        return a;

    Mat<R> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // minor with row i and column j removed
            Mat<R> minor(n - 1, n - 1);
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i)
                    continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j)
                        continue;
                    minor(mr, mc++) = a(r, c);
                }
                ++mr;
            }
            auto cof = det(minor);
            if ((i + j) % 2 == 1)
                cof = R::zero() - cof;
            inv(j, i) = cof * d_inv;
        }
    return inv;
}

template <BezoutRing R>
Mat<R> inverse_by_hermite(const Mat<R>& a) {
    a.require_square("inverse");
    auto h = column_hermite(a);
    // a * T = H; a is unimodular exactly when H is the identity.
    if (!h.form.is_identity())
        raise(Errc::not_invertible_over_ring, "determinant " + R::to_text(det(a)) + " is not a unit");
    return h.transform;
}

} // namespace detail

template <BezoutRing R>
Mat<R> inverse_over_ring(const Mat<R>& a) {
    a.require_square("inverse");
    if (a.rows() <= detail::adjugate_limit)
        return detail::inverse_by_adjugate(a);
    return detail::inverse_by_hermite(a);
}

template <BezoutRing R>
std::optional<Mat<R>> try_solve_in_column_module(const Mat<R>& a, const Mat<R>& b) {
    if (a.rows() != b.rows())
        raise(Errc::dimension_mismatch, "solve: " + a.shape() + " against right-hand side " + b.shape());
    auto h = column_hermite(a);
    const std::size_t r = h.rank();
    Mat<R> y(a.cols(), b.cols());
    for (std::size_t col = 0; col < b.cols(); ++col) {
        Mat<R> residual = b.block(0, col, b.rows(), 1);
        for (std::size_t j = 0; j < r; ++j) {
            const std::size_t pr = h.pivot_rows[j];
            if (R::is_zero(residual(pr, 0)))
                continue;
            auto q = R::try_div(residual(pr, 0), h.form(pr, j));
            if (!q)
                return std::nullopt;
            for (std::size_t i = pr; i < a.rows(); ++i)
                residual(i, 0) = residual(i, 0) - *q * h.form(i, j);
            y(j, col) = std::move(*q);
        }
        if (!residual.is_zero())
            return std::nullopt;
    }
    return h.transform * y;
}

template <BezoutRing R>
Mat<R> solve_in_column_module(const Mat<R>& a, const Mat<R>& b) {
    auto x = try_solve_in_column_module(a, b);
    if (!x)
        raise(Errc::no_solution, "right-hand side is not in the column module");
    return *std::move(x);
}

#define BEZOUT_INSTANTIATE_LINALG(R)                                             \
    template typename R::value_type det<R>(const Mat<R>&);                      \
    template std::size_t elimination_rank<R>(const Mat<R>&);                     \
    template Mat<R> inverse_over_ring<R>(const Mat<R>&);                        \
    template Mat<R> solve_in_column_module<R>(const Mat<R>&, const Mat<R>&);    \
    template std::optional<Mat<R>> try_solve_in_column_module<R>(const Mat<R>&, const Mat<R>&); \
    template Mat<R> detail::inverse_by_adjugate<R>(const Mat<R>&);              \
    template Mat<R> detail::inverse_by_hermite<R>(const Mat<R>&);
BEZOUT_FOR_EACH_RING(BEZOUT_INSTANTIATE_LINALG)

} // namespace bezout
