#include "bezout/oracle.hpp"

#include <algorithm>

#include "bezout/errors.hpp"
#include "bezout/fault.hpp"

namespace bezout {

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.scaled(mpq_class(1) / a.lead());
}

RationalFunction::RationalFunction(Poly num, Poly den) {
    if (den.is_zero())
        raise(Errc::division_by_zero, "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly(1);
        return;
    }
    const Poly g = poly_gcd(num, den);
    num = num.divmod(g).quot;
    den = den.divmod(g).quot;
    const mpq_class lead = den.lead();
    num_ = num.scaled(mpq_class(1) / lead);
    den_ = den.scaled(mpq_class(1) / lead);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_)
        return a.is_polynomial() ? RationalFunction(a.num_ + b.num_) : RationalFunction(a.num_ + b.num_, a.den_);
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_)
        return a.is_polynomial() ? RationalFunction(a.num_ - b.num_) : RationalFunction(a.num_ - b.num_, a.den_);
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.num_.is_zero() || b.num_.is_zero())
        return {};
    if (a.is_polynomial() && b.is_polynomial())
        return RationalFunction(a.num_ * b.num_);
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero())
        raise(Errc::division_by_zero, "division by the zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string RationalFunction::to_text() const {
    if (is_polynomial())
        return num_.to_text();
    return "(" + num_.to_text() + ")/(" + den_.to_text() + ")";
}

namespace oracle {

namespace {

mpq_class lift(const mpz_class& a) { return mpq_class(a); }
mpq_class lift(const mpq_class& a) { return a; }
RationalFunction lift(const Poly& a) { return RationalFunction(a); }

template <BezoutRing R>
std::optional<typename R::value_type> lower(const Field<R>& a) {
    if constexpr (std::is_same_v<R, IntegerRing>) {
        if (a.get_den() != 1)
            return std::nullopt;
        return a.get_num();
    } else if constexpr (std::is_same_v<R, RationalRing>) {
        return a;
    } else {
        if (!a.is_polynomial())
            return std::nullopt;
        return a.num();
    }
}

template <class F>
bool zero(const F& a) {
    return a == F(0);
}

template <class F>
FieldMat<F> make(std::size_t rows, std::size_t cols) {
    return FieldMat<F>(rows, std::vector<F>(cols, F(0)));
}

template <class F>
FieldMat<F> eye(std::size_t n) {
    auto m = make<F>(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = F(1);
    return m;
}

template <class F>
FieldMat<F> mul(const FieldMat<F>& a, const FieldMat<F>& b, std::size_t inner, std::size_t cols) {
    auto c = make<F>(a.size(), cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (zero(a[i][k]))
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                c[i][j] = c[i][j] + a[i][k] * b[k][j];
        }
    return c;
}

template <class F>
FieldMat<F> mul_sq(const FieldMat<F>& a, const FieldMat<F>& b) {
    return mul(a, b, a.size(), a.size());
}

// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(FieldMat<F>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && zero(m[p][col]))
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[row]);
        const F inv = F(1) / m[row][col];
        for (auto& v : m[row])
            v = v * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || zero(m[i][col]))
                continue;
            const F f = m[i][col];
            for (std::size_t j = 0; j < m[i].size(); ++j)
                m[i][j] = m[i][j] - f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::optional<FieldMat<F>> invert(const FieldMat<F>& a) {
    const std::size_t n = a.size();
    FieldMat<F> aug = a;
    for (std::size_t i = 0; i < n; ++i) {
        aug[i].resize(2 * n, F(0));
        aug[i][n + i] = F(1);
    }
    if (rref(aug, n).size() < n)
        return std::nullopt;
    FieldMat<F> inv(n);
    for (std::size_t i = 0; i < n; ++i)
        inv[i].assign(aug[i].begin() + static_cast<long>(n), aug[i].end());
    return inv;
}

// Column-row factorization x = c * r from the reduced echelon form.
template <class F>
struct ColumnRow {
    FieldMat<F> c, r;
    std::size_t rank = 0;
};

template <class F>
ColumnRow<F> column_row(const FieldMat<F>& x) {
    const std::size_t n = x.size();
    FieldMat<F> e = x;
    const auto pivots = rref(e, n);
    ColumnRow<F> cr;
    cr.rank = pivots.size();
    cr.c = make<F>(n, cr.rank);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < cr.rank; ++j)
            cr.c[i][j] = x[i][pivots[j]];
    cr.r.assign(e.begin(), e.begin() + static_cast<long>(cr.rank));
    return cr;
}

// c * m * r for the column-row factors.
template <class F>
FieldMat<F> sandwich(const ColumnRow<F>& cr, const FieldMat<F>& m, std::size_t n) {
    return mul(mul(cr.c, m, cr.rank, cr.rank), cr.r, cr.rank, n);
}

template <class F>
std::size_t rank_of(FieldMat<F> x) {
    const std::size_t cols = x.empty() ? 0 : x[0].size();
    return rref(x, cols).size();
}

} // namespace

template <BezoutRing R>
FieldMat<Field<R>> to_field(const Mat<R>& x) {
    FieldMat<Field<R>> f(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            f[i].push_back(lift(x(i, j)));
    return f;
}

template <BezoutRing R>
std::optional<Mat<R>> from_field(const FieldMat<Field<R>>& x) {
    const std::size_t cols = x.empty() ? 0 : x[0].size();
    Mat<R> m(x.size(), cols);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            auto v = lower<R>(x[i][j]);
            if (!v)
                return std::nullopt;
            m(i, j) = std::move(*v);
        }
    return m;
}

template <BezoutRing R>
std::size_t field_rank(const Mat<R>& x) {
    auto f = to_field(x);
    return rref(f, x.cols()).size();
}

template <BezoutRing R>
OracleReport<R> fraction_field_oracle(const Mat<R>& x) {
    using F = Field<R>;
    x.require_square("fraction_field_oracle");
    const std::size_t n = x.rows();
    const auto fx = to_field(x);
    OracleReport<R> rep;

    auto finish = [&] {
        rep.group_inverse = from_field<R>(rep.field_group_inverse);
        rep.group_integral = rep.group_inverse.has_value();
        rep.drazin_inverse = from_field<R>(rep.field_drazin_inverse);
        rep.drazin_integral = rep.drazin_inverse.has_value();
    };

    // Nonsingular over the field: every generalized inverse is the inverse.
    if (auto inv = invert(fx)) {
        rep.rank = n;
        rep.group_exists_in_field = true;
        rep.field_group_inverse = *inv;
        rep.field_drazin_inverse = std::move(*inv);
        finish();
    } else {
        // Group inverse: x = c r is group invertible iff r c is invertible,
        // and then x^# = c (r c)^{-2} r.
        const auto cr = column_row(fx);
        rep.rank = cr.rank;
        if (auto rc_inv = invert(mul(cr.r, cr.c, n, cr.rank))) {
            rep.group_exists_in_field = true;
            rep.field_group_inverse = sandwich(cr, mul(*rc_inv, *rc_inv, cr.rank, cr.rank), n);
        }

        // Drazin index: where the ranks of the powers stop dropping.
        FieldMat<F> prev = fx;
        std::size_t prev_rank = cr.rank;
        rep.drazin_index = 1;
        while (true) {
            FieldMat<F> next = mul_sq(prev, fx);
            const std::size_t r = rank_of(next);
            if (r == prev_rank)
                break;
            prev = std::move(next);
            prev_rank = r;
            ++rep.drazin_index;
        }
        if (rep.drazin_index == 1) {
            rep.field_drazin_inverse = rep.field_group_inverse;
        } else {
            // With x^k = c r at the index k, x^D = c (r x c)^{-1} r.
            const auto crk = column_row(prev);
            const auto core = mul(mul(crk.r, fx, n, n), crk.c, n, crk.rank);
            auto core_inv = invert(core);
            if (!core_inv)
                raise(Errc::internal_assertion, "oracle: r x c singular at the stable rank");
            rep.field_drazin_inverse = sandwich(crk, *core_inv, n);
        }
        finish();
        if (!rep.group_exists_in_field) {
            rep.group_inverse.reset();
            rep.group_integral = false;
        }
    }

    if (fault::armed(fault::Fault::oracle_corruption)) {
        if (rep.ring_group_exists()) {
            rep.group_integral = false;
            rep.group_inverse.reset();
        } else {
            rep.group_exists_in_field = true;
            rep.group_integral = true;
            rep.group_inverse = Mat<R>(n, n);
        }
    }
    return rep;
}

#define BEZOUT_INSTANTIATE_ORACLE(R)                                                  \
    template OracleReport<R> fraction_field_oracle<R>(const Mat<R>&);                \
    template std::size_t field_rank<R>(const Mat<R>&);                               \
    template FieldMat<Field<R>> to_field<R>(const Mat<R>&);                          \
    template std::optional<Mat<R>> from_field<R>(const FieldMat<Field<R>>&);
BEZOUT_FOR_EACH_RING(BEZOUT_INSTANTIATE_ORACLE)

} // namespace oracle
} // namespace bezout
