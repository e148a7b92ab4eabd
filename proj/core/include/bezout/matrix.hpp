#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bezout/errors.hpp"
#include "bezout/ring.hpp"

namespace bezout {

/// Dense row-major matrix over the ring R.
///
/// The ring is part of the type, so operations that would mix rings do not
/// compile. Dimensions are fixed at construction.
template <BezoutRing R>
class Mat {
public:
    using ring_type = R;
    using value_type = typename R::value_type;

    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R::zero()) {}
    Mat(std::initializer_list<std::initializer_list<value_type>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_)
                raise(Errc::dimension_mismatch, "ragged matrix literal");
            for (const auto& x : row)
                data_.push_back(x);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = R::one();
        return m;
    }
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

    static constexpr RingKind ring() noexcept { return R::kind; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!R::is_zero(x))
                return false;
        return true;
    }

    bool is_identity() const { return is_square() && *this == identity(rows_); }

    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_)
            raise(Errc::dimension_mismatch, "block out of range");
        Mat out(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                out(i, j) = (*this)(r0 + i, c0 + j);
        return out;
    }

    Mat transpose() const {
        Mat out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = (*this)(i, j);
        return out;
    }

    Mat pow(unsigned k) const {
        require_square("pow");
        Mat result = identity(rows_);
        Mat base = *this;
        while (k > 0) {
            if (k & 1u)
                result = result * base;
            k >>= 1u;
            if (k > 0)
                base = base * base;
        }
        return result;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    void require_square(const char* what) const {
        if (!is_square())
            raise(Errc::not_square, std::string(what) + ": matrix is " + shape() + ", not square");
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    Mat operator-() const {
        Mat out = *this;
        for (auto& x : out.data_)
            x = R::zero() - x;
        return out;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        a.require_same_shape(b, "+");
        Mat out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k)
            out.data_[k] = out.data_[k] + b.data_[k];
        return out;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        a.require_same_shape(b, "-");
        Mat out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k)
            out.data_[k] = out.data_[k] - b.data_[k];
        return out;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_)
            raise(Errc::dimension_mismatch, "cannot multiply " + a.shape() + " by " + b.shape());
        Mat out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const value_type& aik = a(i, k);
                if (R::is_zero(aik))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) = out(i, j) + aik * b(k, j);
            }
        return out;
    }

    friend Mat operator*(const value_type& c, const Mat& a) {
        Mat out = a;
        for (auto& x : out.data_)
            x = c * x;
        return out;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            return false;
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            if (!(a.data_[k] == b.data_[k]))
                return false;
        return true;
    }

private:
    void require_same_shape(const Mat& other, const char* op) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            raise(Errc::dimension_mismatch, std::string("shape mismatch in ") + op + ": " + shape() + " vs " + other.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

/// diag(a, b) as a block matrix.
template <BezoutRing R>
Mat<R> block_diag(const Mat<R>& a, const Mat<R>& b) {
    Mat<R> out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

/// diag(core, 0) padded to n x n.
template <BezoutRing R>
Mat<R> pad_core(const Mat<R>& core, std::size_t n) {
    return block_diag(core, Mat<R>::zero(n - core.rows(), n - core.cols()));
}

template <BezoutRing R>
Mat<R> hstack(const Mat<R>& a, const Mat<R>& b) {
    if (a.rows() != b.rows())
        raise(Errc::dimension_mismatch, "hstack: row counts differ");
    Mat<R> out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

/// Scalar-valued diagonal matrix.
template <BezoutRing R>
Mat<R> diagonal(const std::vector<typename R::value_type>& entries) {
    Mat<R> out(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        out(i, i) = entries[i];
    return out;
}

} // namespace bezout
