#include "test_support.hpp"

#include "bezout/linalg.hpp"
#include "bezout/normal_forms.hpp"
#include "bezout/oracle.hpp"

using namespace bezout;
using namespace bezout::test;

TEST_CASE("Hermite examples") {
    const auto u = column_hermite(ZMat{{1, 1}, {0, 1}});
    CHECK(u.form == ZMat::identity(2));
    CHECK(ZMat{{1, 1}, {0, 1}} * u.transform == u.form);

    const ZMat a{{2, 1}, {0, 0}};
    const auto h = column_hermite(a);
    CHECK(h.form == ZMat{{1, 0}, {0, 0}});
    CHECK(a * h.transform == h.form);
    CHECK(h.rank() == 1);

    const auto z = column_hermite(ZMat(2, 3));
    CHECK(z.form.is_zero());
    CHECK(z.transform == ZMat::identity(3));
    CHECK(z.rank() == 0);

    const auto r = row_hermite(a);
    CHECK(r.transform * a == r.form);
    CHECK(r.rank() == 1);
}

TEST_CASE("Smith examples") {
    const auto s = smith(ZMat{{2, 0}, {0, 3}});
    CHECK(s.diag == ZMat{{1, 0}, {0, 6}});
    CHECK(invariant_factors_by_minors(ZMat{{2, 0}, {0, 3}}) == std::vector<mpz_class>{1, 6});

    const auto z = smith(ZMat(2, 2));
    CHECK(z.diag.is_zero());
    CHECK(z.rank == 0);

    const auto n = smith(ZMat{{0, 1}, {0, 0}});
    CHECK(n.diag == ZMat{{1, 0}, {0, 0}});
    CHECK(n.left * n.diag * n.right == ZMat{{0, 1}, {0, 0}});
}

TEST_CASE("rank factorization examples") {
    const auto z = rank_factorization(ZMat(3, 3));
    CHECK(z.rank == 0);
    CHECK(z.left.cols() == 0);
    CHECK(z.right.rows() == 0);

    const auto i = rank_factorization(ZMat::identity(3));
    CHECK(i.rank == 3);
    CHECK(i.left == ZMat::identity(3));
    CHECK(i.right == ZMat::identity(3));

    const ZMat a{{1, 1}, {0, 0}};
    const auto f = rank_factorization(a);
    CHECK(f.rank == 1);
    CHECK(f.left * f.right == a);
    CHECK(f.left.rows() == 2);
    CHECK(f.left.cols() == 1);
    CHECK(f.left(1, 0) == 0);
    CHECK(f.right(0, 0) == f.right(0, 1));
}

TEST_CASE("module equality examples") {
    const ZMat x{{1, 1}, {0, 0}};
    CHECK(col_module_equal(x, x * x));
    CHECK_FALSE(col_module_equal(ZMat{{2, 0}, {0, 0}}, ZMat{{4, 0}, {0, 0}}));
    CHECK(col_module_contains(ZMat{{2, 0}, {0, 0}}, ZMat{{4, 0}, {0, 0}}));
    CHECK_FALSE(col_module_contains(ZMat{{4, 0}, {0, 0}}, ZMat{{2, 0}, {0, 0}}));
    CHECK(col_module_equal(QMat{{2, 0}, {0, 0}}, QMat{{4, 0}, {0, 0}}));
    CHECK(row_module_equal(ZMat{{1, 2}, {0, 0}}, ZMat{{-1, -2}, {3, 6}}));
}

TEST_CASE("polynomial Smith form") {
    // diag(x, x+1): gcd 1, product x^2+x
    const PMat a{{Poly{0, 1}, 0}, {0, Poly{1, 1}}};
    const auto s = smith(a);
    CHECK(s.diag == PMat{{1, 0}, {0, Poly{0, 1, 1}}});
    CHECK(s.left * s.diag * s.right == a);
}

namespace {

template <BezoutRing R>
void check_normal_forms(const Mat<R>& a, SplitMix64& rng) {
    CAPTURE(show(a));
    const auto h = column_hermite(a);
    CHECK(a * h.transform == h.form);
    CHECK(is_unimodular(h.transform));
    CHECK(column_hermite(h.form).form == h.form);

    const auto t = random_unimodular<R>(rng, a.cols(), 5);
    CHECK(column_hermite(a * t).form == h.form);
    CHECK(col_module_equal(a, a * t));

    const auto rh = row_hermite(a);
    CHECK(rh.transform * a == rh.form);
    CHECK(is_unimodular(rh.transform));

    const auto s = smith(a);
    CHECK(s.left * s.diag * s.right == a);
    CHECK(is_unimodular(s.left));
    CHECK(is_unimodular(s.right));
    const auto d = s.invariant_factors();
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(R::canonicalize(d[i]).associate == d[i]);
        if (i + 1 < d.size())
            CHECK(divides<R>(d[i], d[i + 1]));
    }
    for (std::size_t i = 0; i < s.diag.rows(); ++i)
        for (std::size_t j = 0; j < s.diag.cols(); ++j)
            if (i != j || i >= s.rank)
                CHECK(R::is_zero(s.diag(i, j)));

    CHECK(s.rank == h.rank());
    CHECK(s.rank == rh.rank());
    CHECK(s.rank == oracle::field_rank(a));

    const auto f = rank_factorization(a);
    CHECK(f.rank == s.rank);
    CHECK(f.left * f.right == a);
}

} // namespace

TEST_CASE("normal form invariants on random matrices") {
    for_each_ring([]<class R>(R) {
        SplitMix64 rng(101 + static_cast<int>(R::kind));
        GenConfig cfg = config(R::kind, 0, 0);
        for (int trial = 0; trial < 150; ++trial) {
            const std::size_t m = 1 + trial % 4, n = 1 + (trial / 4) % 4;
            const auto a = trial % 3 == 0 ? gen_uniform<R>(rng, m, 2, cfg) * gen_uniform<R>(rng, 2, n, cfg)
                                          : gen_uniform<R>(rng, m, n, cfg);
            check_normal_forms(a, rng);
        }
        check_normal_forms(Mat<R>(3, 2), rng);
    });
}

TEST_CASE("Smith invariant factors match determinantal divisors") {
    SplitMix64 rng(202);
    GenConfig cfg = config(RingKind::integers, 0, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + trial % 4, n = 1 + (trial / 4) % 4;
        const auto a = gen_uniform<IntegerRing>(rng, m, n, cfg);
        CAPTURE(show(a));
        CHECK(smith(a).invariant_factors() == invariant_factors_by_minors(a));
    }
}

TEST_CASE("module criterion agrees with the field on Q") {
    SplitMix64 rng(303);
    GenConfig cfg = config(RingKind::rationals, 0, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = gen_uniform<RationalRing>(rng, 3, 2, cfg);
        const auto b = gen_uniform<RationalRing>(rng, 3, 2, cfg);
        const bool same = oracle::field_rank(a) == oracle::field_rank(hstack(a, b)) &&
                          oracle::field_rank(b) == oracle::field_rank(hstack(a, b));
        CHECK(col_module_equal(a, b) == same);
    }
}
