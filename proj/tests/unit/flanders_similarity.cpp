#include "test_support.hpp"

#include "bezout/generalized_inverse.hpp"
#include "bezout/linalg.hpp"
#include "bezout/normal_forms.hpp"
#include "bezout/similarity.hpp"

using namespace bezout;
using namespace bezout::test;

namespace {

const ZMat swap_a{{0, 1}, {0, 0}};
const ZMat swap_b{{0, 0}, {1, 0}};

// AB = P (CA) P^{-1} holds, but ABA != ACA.
const ZMat sample_a{{1, 1}, {0, -1}};
const ZMat sample_b{{1, 1}, {0, 0}};
const ZMat sample_c{{1, -1}, {0, 0}};
const ZMat sample_p{{1, 1}, {0, 1}};

template <class F>
Errc code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::internal_assertion;
}

} // namespace

TEST_CASE("identity triple") {
    const auto i = ZMat::identity(3);
    const auto w = conjugate_witnesses(i, i, i);
    CHECK(w.w == i);
    CHECK(w.checks.product);
    CHECK(w.checks.ginv);
    CHECK(w.checks.projector);
    CHECK(w.checks.core);
}

TEST_CASE("swap example") {
    CHECK(swap_a * swap_b == ZMat{{1, 0}, {0, 0}});
    CHECK(swap_b * swap_a == ZMat{{0, 0}, {0, 1}});
    const auto w = similarity_witness(swap_a, swap_b, swap_b);
    CHECK(w.w == ZMat{{0, 1}, {1, 0}});
    CHECK(w.w * (swap_b * swap_a) * w.w_inv == swap_a * swap_b);
    CHECK(w.core_rank == 1);
    CHECK(w.ab_conjugator == ZMat::identity(2));
    CHECK(w.intertwiner_core == ZMat{{1}});

    const auto cw = conjugate_witnesses(swap_a, swap_b, swap_b);
    CHECK(cw.w == w.w);
    CHECK(group_inverse(ZMat(swap_a * swap_b)) == swap_a * swap_b);
}

TEST_CASE("C = B + N with ANA = 0") {
    const ZMat a{{1, 0}, {0, 0}};
    const ZMat b{{1, 0}, {1, 0}};
    const ZMat n{{0, 5}, {7, 0}};
    const ZMat c = b + n;
    CHECK((a * n * a).is_zero());
    CHECK_FALSE((a * n).is_zero());
    CHECK(a * b == ZMat{{1, 0}, {0, 0}});
    CHECK(c * a == ZMat{{1, 0}, {8, 0}});
    const auto w = conjugate_witnesses(a, b, c);
    CHECK(w.w == ZMat{{1, 0}, {-8, 1}});
    CHECK(w.ca_conjugator == ZMat{{1, 0}, {8, 1}});
    CHECK(w.intertwiner_core == ZMat{{1}});
    CHECK(verify_witness(a, b, c, w.w, ConjugationMode::ginv));
    CHECK(verify_witness(a, b, c, w.w, ConjugationMode::projector));
}

TEST_CASE("sample triple with AB ~ CA but ABA != ACA") {
    CHECK(sample_a * sample_b * sample_a == ZMat{{1, 0}, {0, 0}});
    CHECK(sample_a * sample_c * sample_a == ZMat{{1, 2}, {0, 0}});
    try {
        similarity_witness(sample_a, sample_b, sample_c);
        FAIL("expected hypothesis_violated");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::hypothesis_violated);
        const auto dump = parse_json(e.instance());
        CHECK(matrix_from_json<IntegerRing>(dump["ABA"]) == ZMat{{1, 0}, {0, 0}});
        CHECK(matrix_from_json<IntegerRing>(dump["ACA"]) == ZMat{{1, 2}, {0, 0}});
    }
    // P still conjugates CA onto AB.
    CHECK(verify_witness(sample_a, sample_b, sample_c, sample_p, ConjugationMode::product));
    CHECK_FALSE(verify_witness(sample_a, sample_b, sample_c, ZMat::identity(2), ConjugationMode::product));
    CHECK(code_of([] { cline_verify(sample_a, sample_b, sample_c); }) == Errc::hypothesis_violated);
}

TEST_CASE("verify_witness with W = I and B = C") {
    const ZMat a{{1, 1}, {0, 0}};
    const ZMat b{{1, 0}, {0, 1}};
    for (auto mode : {ConjugationMode::product, ConjugationMode::ginv, ConjugationMode::projector, ConjugationMode::core})
        CHECK(verify_witness(a, b, b, ZMat::identity(2), mode));
    CHECK(code_of([&] { verify_witness(a, b, b, ZMat{{2, 0}, {0, 1}}, ConjugationMode::product); }) ==
          Errc::not_invertible_over_ring);
    CHECK(code_of([&] { verify_witness(ZMat{{2, 0}, {0, 0}}, b, b, ZMat::identity(2), ConjugationMode::ginv); }) ==
          Errc::not_group_invertible);
}

TEST_CASE("AB not group invertible") {
    const ZMat b = ZMat::identity(2);
    CHECK(code_of([&] { similarity_witness(swap_a, b, b); }) == Errc::not_group_invertible);
    CHECK(code_of([&] { similarity_witness(ZMat{{2, 0}, {0, 0}}, b, b); }) == Errc::not_group_invertible);
}

TEST_CASE("power witness examples") {
    const auto i = ZMat::identity(2);
    const auto z = power_witness(swap_a, i, i, 2);
    CHECK(z.core_rank == 0);
    CHECK(is_unimodular(z.w));
    CHECK(code_of([&] { power_witness(swap_a, i, i, 1); }) == Errc::index_too_small);

    const auto base = similarity_witness(swap_a, swap_b, swap_b);
    CHECK(power_witness(swap_a, swap_b, swap_b, 1).w == base.w);
    const auto three = power_witness(swap_a, swap_b, swap_b, 3);
    const ZMat ab = swap_a * swap_b, ba = swap_b * swap_a;
    CHECK(three.w * ba.pow(3) * three.w_inv == ab.pow(3));
}

TEST_CASE("power witness at s = ind(AB) can be impossible") {
    // AB = 0 has index 1, BA = e12 has index 2; at s = 1 the ranks differ.
    const ZMat a{{0, 1}, {0, 0}};
    const ZMat b{{1, 0}, {0, 0}};
    CHECK((a * b).is_zero());
    CHECK(drazin(ZMat(a * b)).index == 1);
    CHECK(drazin(ZMat(b * a)).index == 2);
    CHECK(rank(ZMat(a * b)) != rank(ZMat(b * a)));
    CHECK(code_of([&] { power_witness(a, b, b, 1); }) == Errc::index_too_small);
    const auto w = power_witness(a, b, b, 2);
    CHECK(w.w * (b * a).pow(2) * w.w_inv == (a * b).pow(2));
}

TEST_CASE("Cline examples") {
    CHECK(cline_verify(swap_a, swap_b, swap_b).holds());
    const auto i = ZMat::identity(2);
    CHECK(cline_verify(i, i, i).holds());
    const auto nil = cline_verify(swap_a, i, i);
    CHECK(nil.holds());
    CHECK(nil.index_ab == 2);
    CHECK(nil.index_ca == 2);
    const ZMat dx = drazin(ZMat(swap_a * swap_b)).inverse;
    CHECK(swap_b * dx * dx * swap_a == ZMat{{0, 0}, {0, 1}});
}

TEST_CASE("corollary examples") {
    const auto i = ZMat::identity(2);
    for (auto v : {CorollaryVariant::cor22, CorollaryVariant::cor23, CorollaryVariant::thm22, CorollaryVariant::cor24}) {
        const auto out = corollary_check(i, i, i, v);
        CHECK_FALSE(out.report.failed_condition());
        REQUIRE(out.witness);
        CHECK(out.witness->w == i);
    }
    const auto sample = corollary_check(sample_a, sample_b, sample_c, CorollaryVariant::cor22);
    CHECK(sample.report.failed_condition() == std::optional<std::string>("R_r(A)=R_r(ABA)"));
    CHECK_FALSE(sample.witness);
    CHECK(column_hermite(sample_a).form == i);
    CHECK(column_hermite(ZMat(sample_a * sample_b * sample_a)).form == ZMat{{1, 0}, {0, 0}});
}

TEST_CASE("mode and variant names round-trip") {
    for (auto m : {ConjugationMode::product, ConjugationMode::ginv, ConjugationMode::projector, ConjugationMode::core})
        CHECK(parse_mode(mode_name(m)) == m);
    for (auto v : {CorollaryVariant::cor22, CorollaryVariant::cor23, CorollaryVariant::thm22, CorollaryVariant::cor24})
        CHECK(parse_variant(variant_name(v)) == v);
    CHECK_FALSE(parse_mode("bogus"));
}

namespace {

template <BezoutRing R>
void check_flanders(const Triple<R>& t) {
    const auto& [a, b, c, retries] = t;
    CAPTURE(show(a));
    CAPTURE(show(b));
    CAPTURE(show(c));
    const std::size_t n = a.rows();
    const Mat<R> x = a * b, y = c * a;
    REQUIRE(a * b * a == a * c * a);
    CHECK(x * a == a * y);
    CHECK(rank(x) == rank(y));

    const auto w = conjugate_witnesses(a, b, c);
    CHECK(w.w * w.w_inv == Mat<R>::identity(n));
    CHECK(w.w * y * w.w_inv == x);
    const auto xg = group_inverse(x), yg = group_inverse(y);
    CHECK(xg == w.w * yg * w.w_inv);
    CHECK(x * xg == w.w * y * yg * w.w_inv);
    CHECK(x * x * drazin(x).inverse == w.w * y * y * drazin(y).inverse * w.w_inv);

    // H2^{-1} Y Y^# B X^# H1 inverts the intertwiner core on the leading block.
    const auto h1 = w.ab_conjugator, h2 = w.ca_conjugator;
    const Mat<R> g = inverse_over_ring(h2) * y * yg * b * xg * h1;
    const std::size_t r = w.core_rank;
    CHECK(pad_core(w.intertwiner_core, n) * g == pad_core(Mat<R>::identity(r), n));
}

} // namespace

TEST_CASE("Flanders triples over every ring") {
    for_each_ring([]<class R>(R) {
        SplitMix64 rng(505 + static_cast<int>(R::kind));
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t n = 1 + trial % (R::kind == RingKind::polynomials ? 3 : 4);
            auto cfg = config(R::kind, n, rng.next());
            cfg.core_rank = rng.uniform(0, static_cast<long>(n));
            check_flanders(gen_flanders_triple<R>(cfg, trial % 2 == 0));
        }
    });
}

TEST_CASE("B = C recovers AB ~ BA") {
    SplitMix64 rng(606);
    for (int trial = 0; trial < 60; ++trial) {
        auto cfg = config(RingKind::integers, 1 + trial % 4, rng.next());
        cfg.core_rank = rng.uniform(0, static_cast<long>(cfg.n));
        const auto t = gen_flanders_triple<IntegerRing>(cfg, true);
        CHECK(t.b == t.c);
        const auto w = similarity_witness(t.a, t.b, t.b);
        CHECK(w.w * (t.b * t.a) * w.w_inv == t.a * t.b);
    }
}

TEST_CASE("Drazin triples: Cline identity and power witnesses above the index") {
    SplitMix64 rng(707);
    for (int trial = 0; trial < 40; ++trial) {
        auto cfg = config(RingKind::integers, 2 + trial % 3, rng.next());
        cfg.core_rank = rng.uniform(0, 1);
        const auto t = gen_drazin_triple<IntegerRing>(cfg, 1 + trial % 3, trial % 2 == 0);
        CAPTURE(show(t.a));
        CAPTURE(show(t.b));
        CAPTURE(show(t.c));
        const auto cl = cline_verify(t.a, t.b, t.c);
        CHECK(cl.holds());
        const std::size_t k = std::max<std::size_t>(cl.index_ab, 1);
        const std::size_t s = std::max(k + 1, cl.index_ca);
        const auto w = power_witness(t.a, t.b, t.c, s);
        const auto x = ZMat(t.a * t.b).pow(static_cast<unsigned>(s));
        const auto y = ZMat(t.c * t.a).pow(static_cast<unsigned>(s));
        CHECK(w.w * y * w.w_inv == x);
    }
}
