#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bezout/matrix.hpp"
#include "bezout/rings.hpp"

namespace bezout {

/// Which conjugation identity a witness W is checked against.
enum class ConjugationMode {
    product,   ///< AB = W (CA) W^{-1}
    ginv,      ///< (AB)^# = W (CA)^# W^{-1}
    projector, ///< AB (AB)^# = W CA (CA)^# W^{-1}
    core,      ///< (AB)^2 (AB)^D = W (CA)^2 (CA)^D W^{-1}
};

std::string_view mode_name(ConjugationMode mode) noexcept;
std::optional<ConjugationMode> parse_mode(std::string_view name) noexcept;

enum class CorollaryVariant {
    cor22, ///< R_r(A) = R_r(ABA)
    cor23, ///< R_r(A) = R_r(AB) and R_r(B) = R_r(BA)
    thm22, ///< R_r(AB) = R_r(ABA) and R_r(CA) = R_r(CAB)
    cor24, ///< R_r(A) = R_r(AC) = R_r(ABA)
};

std::string_view variant_name(CorollaryVariant v) noexcept;
std::optional<CorollaryVariant> parse_variant(std::string_view name) noexcept;

struct WitnessChecks {
    bool product = false;
    bool ginv = false;
    bool projector = false;
    bool core = false;
};

/// Certificate that AB and CA are similar over the ring.
///
/// w_inv is the exact inverse of w. ab_conjugator / ca_conjugator are the
/// core-split conjugators H1, H2 of AB and CA; intertwiner_core is the
/// invertible leading block of H1^{-1} A H2, of size core_rank.
template <BezoutRing R>
struct SimilarityWitness {
    Mat<R> w;
    Mat<R> w_inv;
    std::size_t core_rank = 0;
    Mat<R> ab_conjugator;
    Mat<R> ca_conjugator;
    Mat<R> intertwiner_core;
    Mat<R> intertwiner_core_inv;
    WitnessChecks checks;
};

struct HypothesisReport {
    bool aba_equals_aca = false;
    bool ab_group_invertible = false;
    bool ca_group_invertible = false;
    std::vector<std::pair<std::string, bool>> conditions;

    /// Name of the first condition that does not hold.
    std::optional<std::string> failed_condition() const {
        for (const auto& [name, ok] : conditions)
            if (!ok)
                return name;
        return std::nullopt;
    }
};

template <BezoutRing R>
struct CorollaryOutcome {
    HypothesisReport report;
    std::optional<SimilarityWitness<R>> witness;
};

struct ClineReport {
    bool identity_holds = false;
    std::size_t index_ab = 0;
    std::size_t index_ca = 0;
    bool index_bound_holds = false;

    bool holds() const noexcept { return identity_holds && index_bound_holds; }
};

template <BezoutRing R>
HypothesisReport check_hypotheses(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c);

/// W with AB = W (CA) W^{-1}, given ABA = ACA and AB, CA group invertible.
///
/// Built from the core splits AB = H1 diag(M1, 0) H1^{-1} and
/// CA = H2 diag(M2, 0) H2^{-1}: since (AB) A = A (CA), the matrix
/// H1^{-1} A H2 is block diagonal and its leading block carries M2 onto M1.
/// Its inverse is the leading block of H2^{-1} (CA (CA)^# B (AB)^#) H1.
/// Every step is checked; a failed check raises internal_assertion with the
/// instance attached.
template <BezoutRing R>
SimilarityWitness<R> similarity_witness(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c);

/// Checks the identity for the given mode exactly. Throws
/// not_invertible_over_ring if w is not unimodular, and
/// not_group_invertible / not_drazin_invertible if the mode needs an
/// inverse that does not exist.
template <BezoutRing R>
bool verify_witness(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c, const Mat<R>& w, ConjugationMode mode);

/// similarity_witness plus verification that the same W conjugates the
/// group inverses, the spectral projectors and the cores.
template <BezoutRing R>
SimilarityWitness<R> conjugate_witnesses(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c);

/// W with (AB)^s = W (CA)^s W^{-1}, through B' = B (AB)^{s-1} and
/// C' = (CA)^{s-1} C. Requires s >= max(ind(AB), ind(CA), 1); since
/// ind(CA) <= ind(AB) + 1, any s > ind(AB) is accepted.
template <BezoutRing R>
SimilarityWitness<R> power_witness(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c, std::size_t s);

/// (CA)^D = C [(AB)^D]^2 A and ind(CA) <= ind(AB) + 1, given ABA = ACA.
template <BezoutRing R>
ClineReport cline_verify(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c);

/// Evaluates the variant's module conditions first; if one fails the
/// outcome names it and carries no witness. Otherwise ABA = ACA is required
/// (hypothesis_violated) and the witness is built.
template <BezoutRing R>
CorollaryOutcome<R> corollary_check(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c, CorollaryVariant variant);

#define BEZOUT_DECLARE_SIMILARITY(R)                                                                                  \
    extern template HypothesisReport check_hypotheses<R>(const Mat<R>&, const Mat<R>&, const Mat<R>&);               \
    extern template SimilarityWitness<R> similarity_witness<R>(const Mat<R>&, const Mat<R>&, const Mat<R>&);         \
    extern template bool verify_witness<R>(const Mat<R>&, const Mat<R>&, const Mat<R>&, const Mat<R>&,               \
                                           ConjugationMode);                                                         \
    extern template SimilarityWitness<R> conjugate_witnesses<R>(const Mat<R>&, const Mat<R>&, const Mat<R>&);        \
    extern template SimilarityWitness<R> power_witness<R>(const Mat<R>&, const Mat<R>&, const Mat<R>&, std::size_t); \
    extern template ClineReport cline_verify<R>(const Mat<R>&, const Mat<R>&, const Mat<R>&);                        \
    extern template CorollaryOutcome<R> corollary_check<R>(const Mat<R>&, const Mat<R>&, const Mat<R>&,              \
                                                           CorollaryVariant);
BEZOUT_FOR_EACH_RING(BEZOUT_DECLARE_SIMILARITY)
#undef BEZOUT_DECLARE_SIMILARITY

} // namespace bezout
