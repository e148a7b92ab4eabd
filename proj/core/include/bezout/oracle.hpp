#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "bezout/fraction_field.hpp"
#include "bezout/matrix.hpp"
#include "bezout/rings.hpp"

namespace bezout::oracle {

// Independent reference computations over the fraction field. Plain
// Gauss-Jordan elimination on nested vectors; nothing here touches the
// Hermite/Smith code paths.

template <BezoutRing R>
struct FieldOf;
template <>
struct FieldOf<IntegerRing> {
    using type = mpq_class;
};
template <>
struct FieldOf<RationalRing> {
    using type = mpq_class;
};
template <>
struct FieldOf<PolyRing> {
    using type = RationalFunction;
};

template <BezoutRing R>
using Field = typename FieldOf<R>::type;

template <class F>
using FieldMat = std::vector<std::vector<F>>;

template <BezoutRing R>
struct OracleReport {
    std::size_t rank = 0;

    bool group_exists_in_field = false;
    FieldMat<Field<R>> field_group_inverse;
    bool group_integral = false;
    /// Set exactly when the field group inverse exists and is integral.
    std::optional<Mat<R>> group_inverse;

    /// Least k with rank(x^k) = rank(x^{k+1}).
    std::size_t drazin_index = 0;
    FieldMat<Field<R>> field_drazin_inverse;
    bool drazin_integral = false;
    std::optional<Mat<R>> drazin_inverse;

    bool ring_group_exists() const noexcept { return group_exists_in_field && group_integral; }
    bool ring_drazin_exists() const noexcept { return drazin_integral; }
};

/// Raises not_square for non-square input. The oracle_corruption fault
/// flips group_exists_in_field.
template <BezoutRing R>
OracleReport<R> fraction_field_oracle(const Mat<R>& x);

/// Rank over the fraction field.
template <BezoutRing R>
std::size_t field_rank(const Mat<R>& x);

template <BezoutRing R>
FieldMat<Field<R>> to_field(const Mat<R>& x);

/// The matrix back over R when every entry is integral.
template <BezoutRing R>
std::optional<Mat<R>> from_field(const FieldMat<Field<R>>& x);

#define BEZOUT_DECLARE_ORACLE(R)                                                              \
    extern template OracleReport<R> fraction_field_oracle<R>(const Mat<R>&);                 \
    extern template std::size_t field_rank<R>(const Mat<R>&);                                \
    extern template FieldMat<Field<R>> to_field<R>(const Mat<R>&);                           \
    extern template std::optional<Mat<R>> from_field<R>(const FieldMat<Field<R>>&);
BEZOUT_FOR_EACH_RING(BEZOUT_DECLARE_ORACLE)
#undef BEZOUT_DECLARE_ORACLE

} // namespace bezout::oracle
