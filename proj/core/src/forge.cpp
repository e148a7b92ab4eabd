#include "bezout/forge.hpp"

#include <algorithm>

#include "bezout/generalized_inverse.hpp"
#include "bezout/linalg.hpp"

namespace bezout {

namespace {

bool abs_le(const mpz_class& v, long bound) { return mpz_cmpabs_ui(v.get_mpz_t(), static_cast<unsigned long>(bound)) <= 0; }

template <BezoutRing R>
struct Sampler;

template <>
struct Sampler<IntegerRing> {
    static mpz_class element(SplitMix64& rng, long bound, long) { return mpz_class(rng.uniform(-bound, bound)); }
    static mpz_class unit(SplitMix64& rng) { return mpz_class(rng.chance(1, 2) ? 1 : -1); }
    static mpz_class non_unit(SplitMix64& rng) {
        long v = rng.uniform(2, 3);
        return mpz_class(rng.chance(1, 2) ? v : -v);
    }
    static mpz_class multiplier(SplitMix64& rng) {
        long v = rng.uniform(1, 2);
        return mpz_class(rng.chance(1, 2) ? v : -v);
    }
    static bool bounded(const mpz_class& v, const GenConfig& cfg) { return abs_le(v, cfg.entry_bound); }
};

template <>
struct Sampler<RationalRing> {
    static mpq_class element(SplitMix64& rng, long bound, long) {
        mpq_class q(rng.uniform(-bound, bound), rng.uniform(1, std::max(1L, bound)));
        q.canonicalize();
        return q;
    }
    static mpq_class unit(SplitMix64& rng) {
        mpq_class q(rng.uniform(1, 3) * (rng.chance(1, 2) ? 1 : -1), rng.uniform(1, 3));
        q.canonicalize();
        return q;
    }
    // Every nonzero rational is a unit.
    static mpq_class non_unit(SplitMix64& rng) { return unit(rng); }
    static mpq_class multiplier(SplitMix64& rng) {
        long v = rng.uniform(1, 2);
        return mpq_class(rng.chance(1, 2) ? v : -v);
    }
    static bool bounded(const mpq_class& v, const GenConfig& cfg) {
        return abs_le(v.get_num(), cfg.entry_bound) && v.get_den() <= cfg.entry_bound;
    }
};

template <>
struct Sampler<PolyRing> {
    static Poly element(SplitMix64& rng, long bound, long degree_bound) {
        const long deg = rng.uniform(0, std::max(0L, degree_bound));
        std::vector<mpq_class> coeffs;
        for (long k = 0; k <= deg; ++k)
            coeffs.emplace_back(rng.uniform(-bound, bound));
        return Poly(std::move(coeffs));
    }
    static Poly unit(SplitMix64& rng) {
        long v = rng.uniform(1, 2);
        return Poly(rng.chance(1, 2) ? v : -v);
    }
    static Poly non_unit(SplitMix64& rng) { return Poly({mpq_class(rng.uniform(-2, 2)), mpq_class(1)}); }
    static Poly multiplier(SplitMix64& rng) {
        if (rng.chance(1, 2))
            return Poly(rng.chance(1, 2) ? 1L : -1L);
        return Poly({mpq_class(rng.uniform(-1, 1)), mpq_class(rng.chance(1, 2) ? 1 : -1)});
    }
    static bool bounded(const Poly& p, const GenConfig& cfg) {
        if (p.degree() > cfg.degree_bound)
            return false;
        for (const auto& c : p.coeffs())
            if (!abs_le(c.get_num(), cfg.entry_bound) || c.get_den() > cfg.entry_bound)
                return false;
        return true;
    }
};

// Small entries for the hidden blocks; conjugation by the frame grows them.
template <BezoutRing R>
typename R::value_type sparse_element(SplitMix64& rng) {
    if (rng.chance(1, 2))
        return R::zero();
    return Sampler<R>::element(rng, 2, 1);
}

template <BezoutRing R>
Mat<R> sparse_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    Mat<R> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = sparse_element<R>(rng);
    return m;
}

template <BezoutRing R>
void paste(Mat<R>& dst, const Mat<R>& src, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j)
            dst(r0 + i, c0 + j) = src(i, j);
}

// Nilpotent matrix with a single Jordan chain of the given length.
template <BezoutRing R>
Mat<R> jordan_nilpotent(std::size_t size, std::size_t chain) {
    Mat<R> j(size, size);
    for (std::size_t i = 0; i + 1 < std::min(chain, size); ++i)
        j(i, i + 1) = R::one();
    return j;
}

// Unimodular P, Q framing A = P diag(D, 0) Q, B = Q^{-1} K P^{-1},
// C = B + Q^{-1} N P^{-1}. Then ANA = 0 iff the leading r x r block of N
// vanishes.
template <BezoutRing R>
struct Frame {
    Mat<R> p, p_inv, q, q_inv;
    std::vector<typename R::value_type> d;

    std::size_t rank() const { return d.size(); }

    Triple<R> assemble(const Mat<R>& k, const Mat<R>& nk) const {
        const std::size_t n = p.rows();
        Mat<R> a = p * pad_core(diagonal<R>(d), n) * q;
        Mat<R> b = q_inv * k * p_inv;
        Mat<R> c = b + q_inv * nk * p_inv;
        return {std::move(a), std::move(b), std::move(c), 0};
    }
};

template <BezoutRing R>
Frame<R> make_frame(SplitMix64& rng, std::size_t n, std::vector<typename R::value_type> d) {
    Frame<R> f;
    f.p = random_unimodular<R>(rng, n, static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n))));
    f.q = random_unimodular<R>(rng, n, static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n))));
    f.p_inv = inverse_over_ring(f.p);
    f.q_inv = inverse_over_ring(f.q);
    f.d = std::move(d);
    return f;
}

template <BezoutRing R>
std::vector<typename R::value_type> unit_diagonal(SplitMix64& rng, std::size_t r) {
    std::vector<typename R::value_type> d;
    for (std::size_t i = 0; i < r; ++i)
        d.push_back(Sampler<R>::unit(rng));
    return d;
}

// Perturbation with vanishing leading r x r block, so that ANA = 0.
template <BezoutRing R>
Mat<R> null_perturbation(SplitMix64& rng, std::size_t n, std::size_t r) {
    Mat<R> nk = sparse_matrix<R>(rng, n, n);
    paste(nk, Mat<R>(r, r), 0, 0);
    return nk;
}

template <BezoutRing R>
bool triple_within_bounds(const Triple<R>& t, const GenConfig& cfg) {
    return within_bounds(t.a, cfg) && within_bounds(t.b, cfg) && within_bounds(t.c, cfg);
}

[[noreturn]] void exhausted(const char* what, const GenConfig& cfg) {
    raise(Errc::generation_exhausted, std::string(what) + ": no acceptable instance after " +
                                          std::to_string(cfg.max_retries) + " draws (n=" + std::to_string(cfg.n) +
                                          ", seed=" + std::to_string(cfg.seed) + ")");
}

} // namespace

std::string_view engineered_failure(CorollaryVariant variant) noexcept {
    switch (variant) {
    case CorollaryVariant::cor22: return "R_r(A)=R_r(ABA)";
    case CorollaryVariant::cor23: return "R_r(B)=R_r(BA)";
    case CorollaryVariant::thm22: return "R_r(AB)=R_r(ABA)";
    case CorollaryVariant::cor24: return "R_r(A)=R_r(ABA)";
    }
    return "";
}

template <BezoutRing R>
bool within_bounds(const Mat<R>& m, const GenConfig& cfg) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!Sampler<R>::bounded(m(i, j), cfg))
                return false;
    return true;
}

template <BezoutRing R>
typename R::value_type random_element(SplitMix64& rng, long bound, long degree_bound) {
    return Sampler<R>::element(rng, bound, degree_bound);
}

template <BezoutRing R>
Mat<R> random_unimodular(SplitMix64& rng, std::size_t n, std::size_t steps) {
    Mat<R> m = Mat<R>::identity(n);
    if (n == 0)
        return m;
    if (n > 1) {
        for (std::size_t s = 0; s < steps; ++s) {
            const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
            auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
            if (j >= i)
                ++j;
            if (rng.chance(1, 4)) {
                m.swap_rows(i, j);
                continue;
            }
            const auto c = Sampler<R>::multiplier(rng);
            for (std::size_t col = 0; col < n; ++col)
                m(i, col) = m(i, col) + c * m(j, col);
        }
    }
    const auto row = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    const auto u = Sampler<R>::unit(rng);
    for (std::size_t col = 0; col < n; ++col)
        m(row, col) = u * m(row, col);
    return m;
}

template <BezoutRing R>
Mat<R> gen_group_invertible(const GenConfig& cfg) {
    if (cfg.core_rank > cfg.n)
        raise(Errc::dimension_mismatch, "core_rank exceeds n");
    SplitMix64 rng(cfg.seed);
    Mat<R> h = random_unimodular<R>(rng, cfg.n, cfg.n + 1);
    Mat<R> m = random_unimodular<R>(rng, cfg.core_rank, cfg.core_rank + 1);
    return h * pad_core(m, cfg.n) * inverse_over_ring(h);
}

template <BezoutRing R>
Mat<R> gen_uniform(SplitMix64& rng, std::size_t rows, std::size_t cols, const GenConfig& cfg) {
    Mat<R> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Sampler<R>::element(rng, cfg.entry_bound, cfg.degree_bound);
    return m;
}

template <BezoutRing R>
Mat<R> gen_mixed_square(SplitMix64& rng, const GenConfig& cfg) {
    const std::size_t n = cfg.n;
    const auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)));
    switch (rng.uniform(0, 4)) {
    case 0:
        return gen_uniform<R>(rng, n, n, cfg);
    case 1: {
        GenConfig small = cfg;
        small.entry_bound = std::min(cfg.entry_bound, 3L);
        small.degree_bound = std::min(cfg.degree_bound, 1L);
        return gen_uniform<R>(rng, n, r, small) * gen_uniform<R>(rng, r, n, small);
    }
    case 2: {
        Mat<R> h = random_unimodular<R>(rng, n, n);
        return h * pad_core(random_unimodular<R>(rng, r, r), n) * inverse_over_ring(h);
    }
    case 3: {
        // unimodular core plus a nilpotent Jordan chain
        Mat<R> h = random_unimodular<R>(rng, n, n);
        const auto core = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(r)));
        Mat<R> nil = jordan_nilpotent<R>(n - core, static_cast<std::size_t>(rng.uniform(1, 3)));
        return h * block_diag(random_unimodular<R>(rng, core, core), nil) * inverse_over_ring(h);
    }
    default: {
        // core scaled by a non-unit: group invertible over the fraction field only
        Mat<R> h = random_unimodular<R>(rng, n, n);
        Mat<R> core = random_unimodular<R>(rng, r, r);
        if (r > 0) {
            const auto s = Sampler<R>::non_unit(rng);
            for (std::size_t j = 0; j < r; ++j)
                core(0, j) = s * core(0, j);
        }
        return h * pad_core(core, n) * inverse_over_ring(h);
    }
    }
}

template <BezoutRing R>
Triple<R> gen_flanders_triple(const GenConfig& cfg, bool c_equals_b) {
    SplitMix64 rng(cfg.seed);
    const std::size_t n = cfg.n;
    // A nonsingular A forces N = 0, so the C != B regime keeps rank(A) < n.
    const long top = c_equals_b || n == 0 ? static_cast<long>(n) : static_cast<long>(n) - 1;
    for (std::size_t attempt = 0; attempt < cfg.max_retries; ++attempt) {
        const auto r = static_cast<std::size_t>(rng.uniform(0, top));
        std::vector<typename R::value_type> d;
        std::vector<std::size_t> active, inactive;
        for (std::size_t i = 0; i < r; ++i) {
            const bool unit = rng.chance(3, 4);
            d.push_back(unit ? Sampler<R>::unit(rng) : Sampler<R>::non_unit(rng));
            (unit && rng.chance(3, 4) ? active : inactive).push_back(i);
        }
        auto frame = make_frame<R>(rng, n, std::move(d));

        // Rows and columns of K at inactive core positions vanish; the
        // active block is unimodular. This makes D K and K D carry a
        // unimodular core, the group-invertible shape.
        Mat<R> k = sparse_matrix<R>(rng, n, n);
        for (auto i : inactive)
            for (std::size_t j = 0; j < n; ++j) {
                k(i, j) = R::zero();
                k(j, i) = R::zero();
            }
        Mat<R> core = random_unimodular<R>(rng, active.size(), active.size());
        for (std::size_t i = 0; i < active.size(); ++i)
            for (std::size_t j = 0; j < active.size(); ++j)
                k(active[i], active[j]) = core(i, j);

        Mat<R> nk(n, n);
        if (!c_equals_b) {
            nk = null_perturbation<R>(rng, n, r);
            // Usually keep CA's inactive columns clean; otherwise leave it to rejection.
            if (rng.chance(1, 2))
                for (auto i : inactive)
                    for (std::size_t row = r; row < n; ++row)
                        nk(row, i) = R::zero();
            if (nk.is_zero())
                continue;
        }

        auto t = frame.assemble(k, nk);
        if (!triple_within_bounds(t, cfg))
            continue;
        if (!(t.a * t.b * t.a == t.a * t.c * t.a))
            raise(Errc::internal_assertion, "generated triple violates ABA = ACA");
        if (!is_group_invertible(Mat<R>(t.a * t.b)) || !is_group_invertible(Mat<R>(t.c * t.a)))
            continue;
        t.retries = attempt;
        return t;
    }
    exhausted("gen_flanders_triple", cfg);
}

template <BezoutRing R>
Triple<R> gen_drazin_triple(const GenConfig& cfg, std::size_t chain, bool c_equals_b) {
    SplitMix64 rng(cfg.seed);
    const std::size_t n = cfg.n;
    if (n == 0)
        raise(Errc::dimension_mismatch, "gen_drazin_triple needs n >= 1");
    for (std::size_t attempt = 0; attempt < cfg.max_retries; ++attempt) {
        const long lo = static_cast<long>(std::clamp<std::size_t>(chain, 1, n));
        const auto r = static_cast<std::size_t>(rng.uniform(lo, static_cast<long>(n)));
        const auto nil_size = static_cast<std::size_t>(rng.uniform(static_cast<long>(std::min(chain, r)), static_cast<long>(r)));
        auto frame = make_frame<R>(rng, n, unit_diagonal<R>(rng, r));

        Mat<R> g = random_unimodular<R>(rng, r, r);
        Mat<R> k11 = g * block_diag(random_unimodular<R>(rng, r - nil_size, r - nil_size),
                                    jordan_nilpotent<R>(nil_size, chain)) *
                     inverse_over_ring(g);
        Mat<R> k = sparse_matrix<R>(rng, n, n);
        paste(k, k11, 0, 0);
        Mat<R> nk = c_equals_b ? Mat<R>(n, n) : null_perturbation<R>(rng, n, r);

        auto t = frame.assemble(k, nk);
        if (!triple_within_bounds(t, cfg))
            continue;
        if (!try_drazin(Mat<R>(t.a * t.b)))
            continue;
        t.retries = attempt;
        return t;
    }
    exhausted("gen_drazin_triple", cfg);
}

template <BezoutRing R>
Triple<R> gen_corollary_triple(const GenConfig& cfg, CorollaryVariant variant, bool holds) {
    const std::size_t n = cfg.n;
    if (variant == CorollaryVariant::thm22 && holds) {
        // The thm22 conditions are equivalent to group
        // invertibility of AB and CA once ABA = ACA.
        SplitMix64 rng(cfg.seed);
        return gen_flanders_triple<R>(cfg, rng.chance(1, 2));
    }
    if (!holds && n < 2)
        raise(Errc::dimension_mismatch, "engineered failures need n >= 2");

    SplitMix64 rng(cfg.seed);
    for (std::size_t attempt = 0; attempt < cfg.max_retries; ++attempt) {
        const long r_lo = holds ? 0 : 1;
        const long r_hi = holds ? static_cast<long>(n) : static_cast<long>(n) - 1;
        const auto r = static_cast<std::size_t>(rng.uniform(r_lo, r_hi));
        auto frame = make_frame<R>(rng, n, unit_diagonal<R>(rng, r));
        Mat<R> k = sparse_matrix<R>(rng, n, n);
        Mat<R> nk = rng.chance(1, 3) ? Mat<R>(n, n) : null_perturbation<R>(rng, n, r);

        const bool unimodular_core = holds || variant == CorollaryVariant::cor23;
        if (unimodular_core) {
            paste(k, random_unimodular<R>(rng, r, r), 0, 0);
        } else {
            // K11 = U diag(1, .., 1, 0) V has rank r - 1; U e_{r-1} is outside its column module.
            Mat<R> u = random_unimodular<R>(rng, r, r);
            Mat<R> ones = Mat<R>::identity(r);
            ones(r - 1, r - 1) = R::zero();
            paste(k, Mat<R>(u * ones * random_unimodular<R>(rng, r, r)), 0, 0);
            if (variant == CorollaryVariant::thm22 || variant == CorollaryVariant::cor24) {
                paste(k, u.block(0, r - 1, r, 1), 0, r);
                if (variant == CorollaryVariant::cor24)
                    paste(nk, Mat<R>(r, n - r), 0, r);
            }
        }

        if (variant == CorollaryVariant::cor23) {
            // Columns of K past r are combinations of the first r columns, so R_r(B) = R_r(BA).
            Mat<R> z = sparse_matrix<R>(rng, r, n - r);
            paste(k, Mat<R>(k.block(0, 0, n, r) * z), 0, r);
            if (!holds) {
                const auto row = static_cast<std::size_t>(rng.uniform(static_cast<long>(r), static_cast<long>(n) - 1));
                k(row, r) = k(row, r) + R::one();
            }
        }

        auto t = frame.assemble(k, nk);
        if (!triple_within_bounds(t, cfg))
            continue;
        t.retries = attempt;
        return t;
    }
    exhausted("gen_corollary_triple", cfg);
}

#define BEZOUT_INSTANTIATE_FORGE(R)                                                              \
    template bool within_bounds<R>(const Mat<R>&, const GenConfig&);                            \
    template typename R::value_type random_element<R>(SplitMix64&, long, long);                 \
    template Mat<R> random_unimodular<R>(SplitMix64&, std::size_t, std::size_t);                \
    template Mat<R> gen_group_invertible<R>(const GenConfig&);                                  \
    template Mat<R> gen_mixed_square<R>(SplitMix64&, const GenConfig&);                         \
    template Mat<R> gen_uniform<R>(SplitMix64&, std::size_t, std::size_t, const GenConfig&);    \
    template Triple<R> gen_flanders_triple<R>(const GenConfig&, bool);                          \
    template Triple<R> gen_drazin_triple<R>(const GenConfig&, std::size_t, bool);               \
    template Triple<R> gen_corollary_triple<R>(const GenConfig&, CorollaryVariant, bool);
BEZOUT_FOR_EACH_RING(BEZOUT_INSTANTIATE_FORGE)

} // namespace bezout
