#include "bezout/similarity.hpp"

#include "bezout/fault.hpp"
#include "bezout/generalized_inverse.hpp"
#include "bezout/linalg.hpp"
#include "bezout/matrix_io.hpp"
#include "bezout/normal_forms.hpp"

namespace bezout {

std::string_view mode_name(ConjugationMode mode) noexcept {
    switch (mode) {
    case ConjugationMode::product: return "product";
    case ConjugationMode::ginv: return "ginv";
    case ConjugationMode::projector: return "projector";
    case ConjugationMode::core: return "core";
    }
    return "?";
}

std::optional<ConjugationMode> parse_mode(std::string_view name) noexcept {
    for (auto m : {ConjugationMode::product, ConjugationMode::ginv, ConjugationMode::projector, ConjugationMode::core})
        if (mode_name(m) == name)
            return m;
    return std::nullopt;
}

std::string_view variant_name(CorollaryVariant v) noexcept {
    switch (v) {
    case CorollaryVariant::cor22: return "cor22";
    case CorollaryVariant::cor23: return "cor23";
    case CorollaryVariant::thm22: return "thm22";
    case CorollaryVariant::cor24: return "cor24";
    }
    return "?";
}

std::optional<CorollaryVariant> parse_variant(std::string_view name) noexcept {
    for (auto v : {CorollaryVariant::cor22, CorollaryVariant::cor23, CorollaryVariant::thm22, CorollaryVariant::cor24})
        if (variant_name(v) == name)
            return v;
    return std::nullopt;
}

namespace {

template <BezoutRing R>
Json triple_dump(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c) {
    Json dump;
    dump["ring"] = std::string(ring_tag(R::kind));
    dump["A"] = matrix_to_json(a);
    dump["B"] = matrix_to_json(b);
    dump["C"] = matrix_to_json(c);
    return dump;
}

template <BezoutRing R>
[[noreturn]] void internal_failure(const std::string& what, const Mat<R>& a, const Mat<R>& b, const Mat<R>& c) {
    throw Error(Errc::internal_assertion, what, triple_dump(a, b, c).dump());
}

template <BezoutRing R>
void require_triple(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c) {
    a.require_square("A");
    b.require_square("B");
    c.require_square("C");
    if (a.rows() != b.rows() || a.rows() != c.rows())
        raise(Errc::dimension_mismatch, "A, B, C must have the same size: " + a.shape() + ", " + b.shape() + ", " +
                                            c.shape());
}

// Throws hypothesis_violated with ABA and ACA attached when they differ.
template <BezoutRing R>
void require_aba_equals_aca(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c) {
    Mat<R> aba = a * b * a;
    Mat<R> aca = a * c * a;
    if (aba == aca)
        return;
    Json dump = triple_dump(a, b, c);
    dump["ABA"] = matrix_to_json(aba);
    dump["ACA"] = matrix_to_json(aca);
    throw Error(Errc::hypothesis_violated, "ABA != ACA", dump.dump());
}

template <BezoutRing R>
Mat<R> conjugate(const Mat<R>& w, const Mat<R>& x, const Mat<R>& w_inv) {
    return w * x * w_inv;
}

// Left and right sides of the identity checked by a conjugation mode.
template <BezoutRing R>
std::pair<Mat<R>, Mat<R>> mode_sides(const Mat<R>& x, const Mat<R>& y, ConjugationMode mode) {
    switch (mode) {
    case ConjugationMode::product:
        return {x, y};
    case ConjugationMode::ginv:
        return {group_inverse(x), group_inverse(y)};
    case ConjugationMode::projector:
        return {x * group_inverse(x), y * group_inverse(y)};
    case ConjugationMode::core:
        return {x * x * drazin(x).inverse, y * y * drazin(y).inverse};
    }
    return {x, y};
}

} // namespace

template <BezoutRing R>
HypothesisReport check_hypotheses(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c) {
    require_triple(a, b, c);
    HypothesisReport report;
    report.aba_equals_aca = (a * b * a == a * c * a);
    report.ab_group_invertible = is_group_invertible(Mat<R>(a * b));
    report.ca_group_invertible = is_group_invertible(Mat<R>(c * a));
    return report;
}

template <BezoutRing R>
SimilarityWitness<R> similarity_witness(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c) {
    require_triple(a, b, c);
    require_aba_equals_aca(a, b, c);
    const std::size_t n = a.rows();
    const Mat<R> x = a * b;
    const Mat<R> y = c * a;
    if (!(x * a == a * y))
        internal_failure<R>("ABA = ACA holds but (AB)A != A(CA)", a, b, c);

    auto split_of = [](const Mat<R>& m, const char* name) {
        try {
            return core_split(m);
        } catch (const Error& e) {
            if (e.code() != Errc::not_group_invertible)
                throw;
            raise(Errc::not_group_invertible, std::string(name) + " is not group invertible");
        }
    };
    auto x_split = split_of(x, "AB");
    auto y_split = split_of(y, "CA");

    const std::size_t r = x_split.rank;
    if (y_split.rank != r)
        internal_failure<R>("rank(AB) != rank(CA)", a, b, c);

    Mat<R> a_t = x_split.conjugator_inv * a * y_split.conjugator;
    if (!a_t.block(0, r, r, n - r).is_zero() || !a_t.block(r, 0, n - r, r).is_zero() ||
        fault::armed(fault::Fault::witness_assertion))
        internal_failure<R>("H1^{-1} A H2 is not block diagonal", a, b, c);

    Mat<R> q = y * y_split.group_inverse * b * x_split.group_inverse;
    Mat<R> q_t = y_split.conjugator_inv * q * x_split.conjugator;
    Mat<R> a11 = a_t.block(0, 0, r, r);
    Mat<R> g11 = q_t.block(0, 0, r, r);
    const Mat<R> id_r = Mat<R>::identity(r);
    if (!(a11 * g11 == id_r) || !(g11 * a11 == id_r))
        internal_failure<R>("intertwiner core block is not invertible with the predicted inverse", a, b, c);

    const Mat<R> id_tail = Mat<R>::identity(n - r);
    Mat<R> w = x_split.conjugator * block_diag(a11, id_tail) * y_split.conjugator_inv;
    Mat<R> w_inv = y_split.conjugator * block_diag(g11, id_tail) * x_split.conjugator_inv;
    if (!(w * w_inv).is_identity())
        internal_failure<R>("W * Winv != I", a, b, c);
    if (!(conjugate(w, y, w_inv) == x))
        internal_failure<R>("AB != W (CA) W^{-1}", a, b, c);

    SimilarityWitness<R> out;
    out.w = std::move(w);
    out.w_inv = std::move(w_inv);
    out.core_rank = r;
    out.ab_conjugator = std::move(x_split.conjugator);
    out.ca_conjugator = std::move(y_split.conjugator);
    out.intertwiner_core = std::move(a11);
    out.intertwiner_core_inv = std::move(g11);
    out.checks.product = true;
    return out;
}

template <BezoutRing R>
bool verify_witness(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c, const Mat<R>& w, ConjugationMode mode) {
    require_triple(a, b, c);
    if (w.rows() != a.rows())
        raise(Errc::dimension_mismatch, "witness " + w.shape() + " does not match A " + a.shape());
    Mat<R> w_inv = inverse_over_ring(w);
    auto [lhs, rhs] = mode_sides<R>(a * b, c * a, mode);
    return lhs == conjugate(w, rhs, w_inv);
}

template <BezoutRing R>
SimilarityWitness<R> conjugate_witnesses(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c) {
    auto wit = similarity_witness(a, b, c);
    const Mat<R> x = a * b;
    const Mat<R> y = c * a;
    auto check = [&](ConjugationMode mode) {
        auto [lhs, rhs] = mode_sides<R>(x, y, mode);
        return lhs == conjugate(wit.w, rhs, wit.w_inv);
    };
    wit.checks.ginv = check(ConjugationMode::ginv);
    wit.checks.projector = check(ConjugationMode::projector);
    wit.checks.core = check(ConjugationMode::core);
    if (!wit.checks.ginv || !wit.checks.projector || !wit.checks.core)
        internal_failure<R>("witness fails a derived conjugation (ginv/projector/core)", a, b, c);
    return wit;
}

template <BezoutRing R>
SimilarityWitness<R> power_witness(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c, std::size_t s) {
    require_triple(a, b, c);
    require_aba_equals_aca(a, b, c);
    const Mat<R> x = a * b;
    const Mat<R> y = c * a;
    auto dx = try_drazin(x);
    if (!dx)
        raise(Errc::not_drazin_invertible, "AB has no Drazin inverse over this ring");
    const std::size_t k = dx->index;
    if (s < std::max<std::size_t>(k, 1))
        raise(Errc::index_too_small,
              "s = " + std::to_string(s) + " is below max(ind(AB), 1) = " + std::to_string(std::max<std::size_t>(k, 1)));
    auto dy = try_drazin(y);
    if (!dy)
        internal_failure<R>("AB is Drazin invertible but CA is not", a, b, c);
    if (s < dy->index)
        raise(Errc::index_too_small, "s = " + std::to_string(s) + " is below ind(CA) = " + std::to_string(dy->index) +
                                         "; (CA)^s is not group invertible, so no witness exists");

    const auto sm1 = static_cast<unsigned>(s - 1);
    const Mat<R> b_s = b * x.pow(sm1);
    const Mat<R> c_s = y.pow(sm1) * c;
    if (!(a * b_s * a == a * c_s * a))
        internal_failure<R>("A B' A != A C' A for the power reduction", a, b, c);

    const Mat<R> xs = x.pow(static_cast<unsigned>(s));
    const Mat<R> xd_s = dx->inverse.pow(static_cast<unsigned>(s));
    auto xs_ginv = try_group_inverse(xs);
    if (!xs_ginv || !(xs * xd_s == x * dx->inverse) || !(*xs_ginv == xd_s))
        internal_failure<R>("(AB)^s identities fail: (AB)^s [(AB)^D]^s = AB (AB)^D, [(AB)^s]^# = [(AB)^D]^s", a, b, c);
    if (!is_group_invertible(Mat<R>(y.pow(static_cast<unsigned>(s)))))
        internal_failure<R>("(CA)^s is not group invertible although s >= ind(CA)", a, b, c);

    return similarity_witness(a, b_s, c_s);
}

template <BezoutRing R>
ClineReport cline_verify(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c) {
    require_triple(a, b, c);
    require_aba_equals_aca(a, b, c);
    auto dx = try_drazin(Mat<R>(a * b));
    if (!dx)
        raise(Errc::not_drazin_invertible, "AB has no Drazin inverse over this ring");
    auto dy = try_drazin(Mat<R>(c * a));
    if (!dy)
        internal_failure<R>("AB is Drazin invertible but CA is not", a, b, c);
    ClineReport report;
    report.index_ab = dx->index;
    report.index_ca = dy->index;
    report.identity_holds = (dy->inverse == c * dx->inverse * dx->inverse * a);
    report.index_bound_holds = dy->index <= dx->index + 1;
    return report;
}

template <BezoutRing R>
CorollaryOutcome<R> corollary_check(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c, CorollaryVariant variant) {
    require_triple(a, b, c);
    CorollaryOutcome<R> out;
    out.report = check_hypotheses(a, b, c);

    const Mat<R> ab = a * b;
    const Mat<R> ca = c * a;
    const Mat<R> aba = ab * a;
    auto& conds = out.report.conditions;
    switch (variant) {
    case CorollaryVariant::cor22:
        conds.emplace_back("R_r(A)=R_r(ABA)", col_module_equal(a, aba));
        break;
    case CorollaryVariant::cor23:
        conds.emplace_back("R_r(A)=R_r(AB)", col_module_equal(a, ab));
        conds.emplace_back("R_r(B)=R_r(BA)", col_module_equal(b, Mat<R>(b * a)));
        break;
    case CorollaryVariant::thm22:
        conds.emplace_back("R_r(AB)=R_r(ABA)", col_module_equal(ab, aba));
        conds.emplace_back("R_r(CA)=R_r(CAB)", col_module_equal(ca, Mat<R>(ca * b)));
        break;
    case CorollaryVariant::cor24:
        conds.emplace_back("R_r(A)=R_r(AC)", col_module_equal(a, Mat<R>(a * c)));
        conds.emplace_back("R_r(A)=R_r(ABA)", col_module_equal(a, aba));
        break;
    }
    // A failed module condition is reported even when ABA != ACA.
    if (out.report.failed_condition())
        return out;
    require_aba_equals_aca(a, b, c);
    if (!out.report.ab_group_invertible || !out.report.ca_group_invertible)
        internal_failure<R>(std::string("conditions of ") + std::string(variant_name(variant)) +
                                " hold but AB or CA is not group invertible",
                            a, b, c);
    out.witness = similarity_witness(a, b, c);
    return out;
}

#define BEZOUT_INSTANTIATE_SIMILARITY(R)                                                                       \
    template HypothesisReport check_hypotheses<R>(const Mat<R>&, const Mat<R>&, const Mat<R>&);               \
    template SimilarityWitness<R> similarity_witness<R>(const Mat<R>&, const Mat<R>&, const Mat<R>&);         \
    template bool verify_witness<R>(const Mat<R>&, const Mat<R>&, const Mat<R>&, const Mat<R>&,               \
                                    ConjugationMode);                                                         \
    template SimilarityWitness<R> conjugate_witnesses<R>(const Mat<R>&, const Mat<R>&, const Mat<R>&);        \
    template SimilarityWitness<R> power_witness<R>(const Mat<R>&, const Mat<R>&, const Mat<R>&, std::size_t); \
    template ClineReport cline_verify<R>(const Mat<R>&, const Mat<R>&, const Mat<R>&);                        \
    template CorollaryOutcome<R> corollary_check<R>(const Mat<R>&, const Mat<R>&, const Mat<R>&, CorollaryVariant);
BEZOUT_FOR_EACH_RING(BEZOUT_INSTANTIATE_SIMILARITY)

} // namespace bezout
