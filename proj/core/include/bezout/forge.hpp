#pragma once

#include <cstdint>
#include <optional>

#include "bezout/matrix.hpp"
#include "bezout/random.hpp"
#include "bezout/rings.hpp"
#include "bezout/similarity.hpp"

namespace bezout {

/// Generator settings. Identical configs produce identical instances.
///
/// entry_bound caps |integer entries|, |numerators| and denominators of
/// rationals, and |coefficients| of polynomials; degree_bound caps
/// polynomial degrees. Instances whose A, B, C leave these bounds are
/// rejected and redrawn.
struct GenConfig {
    RingKind ring = RingKind::integers;
    std::size_t n = 3;
    std::uint64_t seed = 1;
    long entry_bound = 9;
    long degree_bound = 2;
    std::size_t core_rank = 1;
    std::size_t max_retries = 20000;
};

template <BezoutRing R>
struct Triple {
    Mat<R> a, b, c;
    /// Draws rejected before this one was accepted.
    std::size_t retries = 0;
};

template <BezoutRing R>
bool within_bounds(const Mat<R>& m, const GenConfig& cfg);

template <BezoutRing R>
typename R::value_type random_element(SplitMix64& rng, long bound, long degree_bound);

/// Product of random elementary operations and a random unit scaling.
template <BezoutRing R>
Mat<R> random_unimodular(SplitMix64& rng, std::size_t n, std::size_t steps);

/// X = H diag(M, 0) H^{-1}, group invertible by construction with
/// rank(X) = cfg.core_rank.
template <BezoutRing R>
Mat<R> gen_group_invertible(const GenConfig& cfg);

/// A matrix mixing several shapes: uniform entries, low rank products,
/// group-invertible and nilpotent-plus-core matrices.
template <BezoutRing R>
Mat<R> gen_mixed_square(SplitMix64& rng, const GenConfig& cfg);

/// Random m x n matrix with entries bounded by cfg.
template <BezoutRing R>
Mat<R> gen_uniform(SplitMix64& rng, std::size_t rows, std::size_t cols, const GenConfig& cfg);

/// A, B, C with ABA = ACA and AB, CA group invertible. With c_equals_b the
/// classical C = B regime; otherwise C = B + N with ANA = 0 and N != 0,
/// which needs rank(A) < n (so n >= 2 in practice). The rank of A is drawn
/// per instance; cfg.core_rank is not used.
template <BezoutRing R>
Triple<R> gen_flanders_triple(const GenConfig& cfg, bool c_equals_b);

/// A, B, C with ABA = ACA and AB Drazin invertible with a nilpotent part;
/// the nilpotent Jordan chain has length chain (so ind(AB) is near chain).
template <BezoutRing R>
Triple<R> gen_drazin_triple(const GenConfig& cfg, std::size_t chain, bool c_equals_b);

/// A triple engineered so that the variant's column-module conditions all
/// hold (holds = true), or so that one named condition fails.
template <BezoutRing R>
Triple<R> gen_corollary_triple(const GenConfig& cfg, CorollaryVariant variant, bool holds);

/// Condition name that gen_corollary_triple(cfg, variant, false) breaks.
std::string_view engineered_failure(CorollaryVariant variant) noexcept;

#define BEZOUT_DECLARE_FORGE(R)                                                                         \
    extern template bool within_bounds<R>(const Mat<R>&, const GenConfig&);                            \
    extern template typename R::value_type random_element<R>(SplitMix64&, long, long);                 \
    extern template Mat<R> random_unimodular<R>(SplitMix64&, std::size_t, std::size_t);                \
    extern template Mat<R> gen_group_invertible<R>(const GenConfig&);                                  \
    extern template Mat<R> gen_mixed_square<R>(SplitMix64&, const GenConfig&);                         \
    extern template Mat<R> gen_uniform<R>(SplitMix64&, std::size_t, std::size_t, const GenConfig&);    \
    extern template Triple<R> gen_flanders_triple<R>(const GenConfig&, bool);                          \
    extern template Triple<R> gen_drazin_triple<R>(const GenConfig&, std::size_t, bool);               \
    extern template Triple<R> gen_corollary_triple<R>(const GenConfig&, CorollaryVariant, bool);
BEZOUT_FOR_EACH_RING(BEZOUT_DECLARE_FORGE)
#undef BEZOUT_DECLARE_FORGE

} // namespace bezout
