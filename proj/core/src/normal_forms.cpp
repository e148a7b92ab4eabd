#include "bezout/normal_forms.hpp"

#include "bezout/linalg.hpp"

namespace bezout {

namespace {

// Columns (c, j) <- (s*c + t*j, -v*c + u*j). Determinant su + tv = 1.
template <BezoutRing R>
void bezout_cols(Mat<R>& m, std::size_t c, std::size_t j, const Xgcd<typename R::value_type>& x) {
    using V = typename R::value_type;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        V a = m(i, c);
        V b = m(i, j);
        m(i, c) = x.s * a + x.t * b;
        m(i, j) = x.u * b - x.v * a;
    }
}

// Rows (k, i) <- (s*k + t*i, -v*k + u*i).
template <BezoutRing R>
void bezout_rows(Mat<R>& m, std::size_t k, std::size_t i, const Xgcd<typename R::value_type>& x) {
    using V = typename R::value_type;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        V a = m(k, j);
        V b = m(i, j);
        m(k, j) = x.s * a + x.t * b;
        m(i, j) = x.u * b - x.v * a;
    }
}

template <BezoutRing R>
void scale_col(Mat<R>& m, std::size_t c, const typename R::value_type& w) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, c) = w * m(i, c);
}

template <BezoutRing R>
void scale_row(Mat<R>& m, std::size_t r, const typename R::value_type& w) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(r, j) = w * m(r, j);
}

// col dst -= q * col src
template <BezoutRing R>
void axpy_col(Mat<R>& m, std::size_t dst, std::size_t src, const typename R::value_type& q) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, dst) = m(i, dst) - q * m(i, src);
}

// row dst += q * row src
template <BezoutRing R>
void axpy_row(Mat<R>& m, std::size_t dst, std::size_t src, const typename R::value_type& q) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(dst, j) = m(dst, j) + q * m(src, j);
}

} // namespace

template <BezoutRing R>
HermiteResult<R> column_hermite(const Mat<R>& a) {
    const std::size_t m = a.rows(), n = a.cols();
    Mat<R> h = a;
    Mat<R> t = Mat<R>::identity(n);
    std::vector<std::size_t> pivots;

    std::size_t c = 0;
    for (std::size_t i = 0; i < m && c < n; ++i) {
        std::size_t best = n;
        for (std::size_t j = c; j < n; ++j) {
            if (R::is_zero(h(i, j)))
                continue;
            if (best == n || R::size_less(h(i, j), h(i, best)))
                best = j;
        }
        if (best == n)
            continue;
        h.swap_cols(c, best);
        t.swap_cols(c, best);

        for (std::size_t j = c + 1; j < n; ++j) {
            if (R::is_zero(h(i, j)))
                continue;
            auto x = xgcd<R>(h(i, c), h(i, j));
            bezout_cols(h, c, j, x);
            bezout_cols(t, c, j, x);
        }

        auto [unit, assoc] = R::canonicalize(h(i, c));
        if (!(unit == R::one())) {
            auto w = R::unit_inverse(unit);
            scale_col(h, c, w);
            scale_col(t, c, w);
        }

        for (std::size_t k = 0; k < c; ++k) {
            if (R::is_zero(h(i, k)))
                continue;
            auto q = R::divmod(h(i, k), h(i, c)).quot;
            if (R::is_zero(q))
                continue;
            axpy_col(h, k, c, q);
            axpy_col(t, k, c, q);
        }
        pivots.push_back(i);
        ++c;
    }
    return {std::move(h), std::move(t), std::move(pivots)};
}

template <BezoutRing R>
HermiteResult<R> row_hermite(const Mat<R>& a) {
    auto col = column_hermite(a.transpose());
    return {col.form.transpose(), col.transform.transpose(), std::move(col.pivot_rows)};
}

template <BezoutRing R>
SmithResult<R> smith(const Mat<R>& a) {
    using V = typename R::value_type;
    const std::size_t m = a.rows(), n = a.cols();
    // Invariant throughout: a = u * s * v.
    Mat<R> s = a;
    Mat<R> u = Mat<R>::identity(m);
    Mat<R> v = Mat<R>::identity(n);

    std::size_t k = 0;
    for (; k < std::min(m, n); ++k) {
        std::size_t pi = m, pj = n;
        for (std::size_t i = k; i < m; ++i)
            for (std::size_t j = k; j < n; ++j) {
                if (R::is_zero(s(i, j)))
                    continue;
                if (pi == m || R::size_less(s(i, j), s(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == m)
            break;
        s.swap_rows(k, pi);
        u.swap_cols(k, pi);
        s.swap_cols(k, pj);
        v.swap_rows(k, pj);

        for (;;) {
            for (std::size_t i = k + 1; i < m; ++i) {
                if (R::is_zero(s(i, k)))
                    continue;
                if (auto q = R::try_div(s(i, k), s(k, k))) {
                    // row i -= q * row k; u column k += q * u column i.
                    axpy_row(s, i, k, R::zero() - *q);
                    for (std::size_t r = 0; r < m; ++r)
                        u(r, k) = u(r, k) + *q * u(r, i);
                    continue;
                }
                auto x = xgcd<R>(s(k, k), s(i, k));
                bezout_rows(s, k, i, x);
                // u <- u * E^{-1}, E^{-1} = [[u, -t], [v, s]] on (k, i).
                for (std::size_t r = 0; r < m; ++r) {
                    V uk = u(r, k), ui = u(r, i);
                    u(r, k) = uk * x.u + ui * x.v;
                    u(r, i) = ui * x.s - uk * x.t;
                }
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (R::is_zero(s(k, j)))
                    continue;
                if (auto q = R::try_div(s(k, j), s(k, k))) {
                    // col j -= q * col k; v row k += q * v row j.
                    axpy_col(s, j, k, *q);
                    axpy_row(v, k, j, *q);
                    continue;
                }
                auto x = xgcd<R>(s(k, k), s(k, j));
                bezout_cols(s, k, j, x);
                // v <- F^{-1} * v, F^{-1} = [[u, v], [-t, s]] on (k, j).
                for (std::size_t c = 0; c < n; ++c) {
                    V vk = v(k, c), vj = v(j, c);
                    v(k, c) = x.u * vk + x.v * vj;
                    v(j, c) = x.s * vj - x.t * vk;
                }
            }

            bool column_clear = true;
            for (std::size_t i = k + 1; i < m && column_clear; ++i)
                column_clear = R::is_zero(s(i, k));
            if (!column_clear)
                continue;

            // Divisibility repair: pull an offending row into row k.
            std::size_t bad = m;
            for (std::size_t i = k + 1; i < m && bad == m; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (!divides<R>(s(k, k), s(i, j))) {
                        bad = i;
                        break;
                    }
            if (bad == m)
                break;
            axpy_row(s, k, bad, R::one());
            // u <- u * (I - e_k e_bad^T)
            for (std::size_t r = 0; r < m; ++r)
                u(r, bad) = u(r, bad) - u(r, k);
        }

        auto [unit, assoc] = R::canonicalize(s(k, k));
        if (!(unit == R::one())) {
            scale_row(s, k, R::unit_inverse(unit));
            for (std::size_t r = 0; r < m; ++r)
                u(r, k) = u(r, k) * unit;
        }
    }
    return {std::move(u), std::move(s), std::move(v), k};
}

template <BezoutRing R>
RankFactorization<R> rank_factorization(const Mat<R>& a) {
    auto snf = smith(a);
    const std::size_t r = snf.rank;
    Mat<R> left = snf.left.block(0, 0, a.rows(), r) * diagonal<R>(snf.invariant_factors());
    Mat<R> right = snf.right.block(0, 0, r, a.cols());
    return {std::move(left), std::move(right), r};
}

template <BezoutRing R>
bool col_module_equal(const Mat<R>& a, const Mat<R>& b) {
    if (a.rows() != b.rows())
        raise(Errc::dimension_mismatch, "column modules live in different spaces: " + a.shape() + " vs " + b.shape());
    return column_hermite(a).basis() == column_hermite(b).basis();
}

template <BezoutRing R>
bool col_module_contains(const Mat<R>& a, const Mat<R>& sub) {
    if (a.rows() != sub.rows())
        raise(Errc::dimension_mismatch, "column modules live in different spaces: " + a.shape() + " vs " + sub.shape());
    return try_solve_in_column_module(a, sub).has_value();
}

#define BEZOUT_INSTANTIATE_NORMAL_FORMS(R)                               \
    template HermiteResult<R> column_hermite<R>(const Mat<R>&);         \
    template HermiteResult<R> row_hermite<R>(const Mat<R>&);            \
    template SmithResult<R> smith<R>(const Mat<R>&);                    \
    template RankFactorization<R> rank_factorization<R>(const Mat<R>&); \
    template bool col_module_equal<R>(const Mat<R>&, const Mat<R>&);    \
    template bool col_module_contains<R>(const Mat<R>&, const Mat<R>&);
BEZOUT_FOR_EACH_RING(BEZOUT_INSTANTIATE_NORMAL_FORMS)

} // namespace bezout
