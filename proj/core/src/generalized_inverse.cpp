#include "bezout/generalized_inverse.hpp"

#include "bezout/linalg.hpp"
#include "bezout/matrix_io.hpp"
#include "bezout/normal_forms.hpp"

namespace bezout {

namespace {

template <BezoutRing R>
[[noreturn]] void internal_failure(const std::string& what, const Mat<R>& x) {
    Json dump;
    dump["x"] = matrix_to_json(x);
    throw Error(Errc::internal_assertion, what, dump.dump());
}

struct GroupVerdict {
    bool by_module = false;
    bool by_factor = false;
};

} // namespace

template <BezoutRing R>
std::optional<Mat<R>> try_group_inverse(const Mat<R>& x) {
    x.require_square("group inverse");
    GroupVerdict verdict;
    verdict.by_module = col_module_equal(x, x * x);

    auto rf = rank_factorization(x);
    Mat<R> core = rf.right * rf.left;
    verdict.by_factor = R::is_unit(det(core));

    if (verdict.by_module != verdict.by_factor)
        internal_failure(std::string("group-invertibility criteria disagree: R_r(X)=R_r(X^2) is ") +
                             (verdict.by_module ? "true" : "false") + ", core factor invertible is " +
                             (verdict.by_factor ? "true" : "false"),
                         x);
    if (!verdict.by_module)
        return std::nullopt;

    Mat<R> core_inv = inverse_over_ring(core);
    Mat<R> g = rf.left * core_inv * core_inv * rf.right;
    if (!is_group_inverse(x, g))
        internal_failure<R>("computed group inverse fails its defining equations", x);
    return g;
}

template <BezoutRing R>
Mat<R> group_inverse(const Mat<R>& x) {
    auto g = try_group_inverse(x);
    if (!g)
        raise(Errc::not_group_invertible,
              "not group invertible: R_r(X) != R_r(X^2) and the rank-factor core is not a unit");
    return *std::move(g);
}

template <BezoutRing R>
std::optional<DrazinResult<R>> try_drazin(const Mat<R>& x) {
    x.require_square("Drazin inverse");
    const std::size_t n = x.rows();
    const auto d0 = det(x);
    if (R::is_unit(d0))
        return DrazinResult<R>{0, inverse_over_ring(x)};
    // Nonsingular powers are group invertible only when unimodular.
    if (!R::is_zero(d0))
        return std::nullopt;

    // The index is where the rank of the powers stabilizes. A ring Drazin
    // inverse exists iff x^k is group invertible at exactly that k.
    Mat<R> prev = Mat<R>::identity(n); // x^{k-1}
    Mat<R> power = x;                  // x^k
    std::size_t k = 1;
    std::size_t r = elimination_rank(power);
    while (true) {
        Mat<R> next = power * x;
        const std::size_t r_next = elimination_rank(next);
        if (r_next == r)
            break;
        if (k >= n)
            internal_failure<R>("rank of powers did not stabilize by n", x);
        prev = std::move(power);
        power = std::move(next);
        r = r_next;
        ++k;
    }

    auto g = try_group_inverse(power);
    if (!g)
        return std::nullopt;
    Mat<R> d = prev * *g;
    if (!is_drazin_inverse(x, d, k))
        internal_failure<R>("Drazin candidate fails its defining equations", x);
    // k - 1 must not already work.
    if (power * d == prev)
        internal_failure<R>("Drazin index is not minimal", x);
    return DrazinResult<R>{k, std::move(d)};
}

template <BezoutRing R>
DrazinResult<R> drazin(const Mat<R>& x) {
    auto d = try_drazin(x);
    if (!d)
        raise(Errc::not_drazin_invertible, "x^k is not group invertible over this ring at the index k");
    return *std::move(d);
}

template <BezoutRing R>
IdempotentSplit<R> idempotent_split(const Mat<R>& e) {
    e.require_square("idempotent split");
    if (!(e * e == e))
        raise(Errc::not_idempotent, "matrix is not idempotent");
    const std::size_t n = e.rows();
    Mat<R> image = column_hermite(e).basis();
    Mat<R> complement = column_hermite(Mat<R>::identity(n) - e).basis();
    if (image.cols() + complement.cols() != n)
        internal_failure<R>("im(E) and im(I-E) do not have complementary ranks", e);
    Mat<R> h = hstack(image, complement);
    Mat<R> h_inv;
    try {
        h_inv = inverse_over_ring(h);
    } catch (const Error& err) {
        if (err.code() != Errc::not_invertible_over_ring)
            throw;
        internal_failure<R>("idempotent split is not unimodular", e);
    }
    const std::size_t r = image.cols();
    if (!(h_inv * e * h == pad_core(Mat<R>::identity(r), n)))
        internal_failure<R>("idempotent split does not diagonalize E", e);
    return {std::move(h), std::move(h_inv), r};
}

template <BezoutRing R>
CoreSplit<R> core_split(const Mat<R>& x) {
    Mat<R> g = group_inverse(x);
    const std::size_t n = x.rows();
    auto split = idempotent_split(Mat<R>(x * g));
    const std::size_t r = split.rank;
    Mat<R> z = split.conjugator_inv * x * split.conjugator;
    if (!z.block(0, r, r, n - r).is_zero() || !z.block(r, 0, n - r, r).is_zero() ||
        !z.block(r, r, n - r, n - r).is_zero())
        internal_failure<R>("conjugated matrix is not block diagonal with zero tail", x);
    Mat<R> core = z.block(0, 0, r, r);
    if (!R::is_unit(det(core)))
        internal_failure<R>("core block is not invertible over the ring", x);
    if (!(split.conjugator * pad_core(core, n) * split.conjugator_inv == x))
        internal_failure<R>("core split does not reconstruct X", x);
    return {std::move(split.conjugator), std::move(split.conjugator_inv), std::move(core), r, std::move(g)};
}

#define BEZOUT_INSTANTIATE_GINV(R)                                          \
    template Mat<R> group_inverse<R>(const Mat<R>&);                       \
    template std::optional<Mat<R>> try_group_inverse<R>(const Mat<R>&);    \
    template DrazinResult<R> drazin<R>(const Mat<R>&);                     \
    template std::optional<DrazinResult<R>> try_drazin<R>(const Mat<R>&);  \
    template IdempotentSplit<R> idempotent_split<R>(const Mat<R>&);        \
    template CoreSplit<R> core_split<R>(const Mat<R>&);
BEZOUT_FOR_EACH_RING(BEZOUT_INSTANTIATE_GINV)

} // namespace bezout
