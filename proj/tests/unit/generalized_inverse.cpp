#include "test_support.hpp"

#include "bezout/generalized_inverse.hpp"
#include "bezout/linalg.hpp"
#include "bezout/normal_forms.hpp"
#include "bezout/oracle.hpp"

using namespace bezout;
using namespace bezout::test;

TEST_CASE("group inverse examples") {
    CHECK(group_inverse(ZMat::identity(3)) == ZMat::identity(3));
    const ZMat e{{1, 1}, {0, 0}};
    CHECK(group_inverse(e) == e);
    CHECK(group_inverse(ZMat(2, 2)) == ZMat(2, 2));
    try {
        group_inverse(ZMat{{2, 0}, {0, 0}});
        FAIL("expected not_group_invertible");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_group_invertible);
    }
    CHECK(group_inverse(QMat{{2, 0}, {0, 0}}) == QMat{{mpq_class(1, 2), 0}, {0, 0}});
    CHECK_FALSE(is_group_invertible(ZMat{{0, 1}, {0, 0}}));
}

TEST_CASE("Drazin examples") {
    const auto nil = drazin(ZMat{{0, 1}, {0, 0}});
    CHECK(nil.index == 2);
    CHECK(nil.inverse.is_zero());

    const ZMat u{{2, 1}, {1, 1}};
    const auto inv = drazin(u);
    CHECK(inv.index == 0);
    CHECK(inv.inverse == inverse_over_ring(u));

    const ZMat e{{1, 1}, {0, 0}};
    const auto idem = drazin(e);
    CHECK(idem.index == 1);
    CHECK(idem.inverse == e);

    const auto zero = drazin(ZMat(2, 2));
    CHECK(zero.index == 1);
    CHECK(zero.inverse.is_zero());

    // det 2 is not a unit: no Drazin inverse over Z, index 0 over Q
    CHECK_FALSE(try_drazin(ZMat{{2, 0}, {0, 1}}).has_value());
    CHECK(drazin(QMat{{2, 0}, {0, 1}}).index == 0);
    try {
        drazin(ZMat{{2, 0}, {0, 0}});
        FAIL("expected not_drazin_invertible");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_drazin_invertible);
    }
}

TEST_CASE("Drazin index 3 with a core") {
    // J3 nilpotent block plus a unit core
    const ZMat x{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}};
    const auto d = drazin(x);
    CHECK(d.index == 3);
    CHECK(d.inverse == ZMat{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}});
    CHECK(is_drazin_inverse(x, d.inverse, 3));
    CHECK_FALSE(is_drazin_inverse(x, d.inverse, 2));
}

TEST_CASE("idempotent split examples") {
    CHECK(idempotent_split(ZMat{{1, 0}, {0, 0}}).conjugator == ZMat::identity(2));
    const ZMat e{{1, 1}, {0, 0}};
    const auto s = idempotent_split(e);
    CHECK(s.conjugator == ZMat{{1, 1}, {0, -1}});
    CHECK(s.conjugator_inv * e * s.conjugator == ZMat{{1, 0}, {0, 0}});
    CHECK(s.rank == 1);
    try {
        idempotent_split(ZMat{{1, 1}, {0, 1}});
        FAIL("expected not_idempotent");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_idempotent);
    }
}

TEST_CASE("core split examples") {
    const auto d = core_split(ZMat{{1, 0}, {0, 0}});
    CHECK(d.conjugator == ZMat::identity(2));
    CHECK(d.core == ZMat{{1}});
    CHECK(d.rank == 1);

    const auto e = core_split(ZMat{{1, 1}, {0, 0}});
    CHECK(e.conjugator == ZMat{{1, 1}, {0, -1}});
    CHECK(e.core == ZMat{{1}});

    const auto z = core_split(ZMat(3, 3));
    CHECK(z.rank == 0);
    CHECK(z.core.rows() == 0);
    CHECK(z.conjugator == ZMat::identity(3));
}

TEST_CASE("polynomial group inverse") {
    // x * diag(1, 0) has group inverse diag(1/x, 0) over Q(x) only
    const PMat e{{1, Poly{0, 1}}, {0, 0}};
    CHECK(group_inverse(e) == e);
    const PMat xe{{Poly{0, 1}, 0}, {0, 0}};
    CHECK_FALSE(try_group_inverse(xe).has_value());
    CHECK(oracle::fraction_field_oracle(xe).group_exists_in_field);
}

namespace {

template <BezoutRing R>
void check_against_oracle(const Mat<R>& x) {
    CAPTURE(show(x));
    const std::size_t n = x.rows();
    const auto rep = oracle::fraction_field_oracle(x);

    // both existence criteria, and the field verdict
    const bool module_criterion = col_module_equal(x, x * x);
    const auto f = rank_factorization(x);
    const bool factor_criterion = f.rank == 0 || R::is_unit(det(f.right * f.left));
    CHECK(module_criterion == factor_criterion);

    const auto g = try_group_inverse(x);
    CHECK(g.has_value() == module_criterion);
    CHECK(g.has_value() == rep.ring_group_exists());
    if (g) {
        CHECK(is_group_inverse(x, *g));
        CHECK(*g == *rep.group_inverse);

        const auto cs = core_split(x);
        CHECK(cs.conjugator * cs.conjugator_inv == Mat<R>::identity(n));
        CHECK(cs.conjugator * pad_core(cs.core, n) * cs.conjugator_inv == x);
        const auto ginv = cs.conjugator * pad_core(inverse_over_ring(cs.core), n) * cs.conjugator_inv;
        CHECK(is_group_inverse(x, ginv));
    }

    const auto d = try_drazin(x);
    CHECK(d.has_value() == rep.ring_drazin_exists());
    if (d) {
        CHECK(d->index == rep.drazin_index);
        CHECK(d->inverse == *rep.drazin_inverse);
        CHECK(is_drazin_inverse(x, d->inverse, d->index));
        if (d->index > 0)
            CHECK_FALSE(is_drazin_inverse(x, d->inverse, d->index - 1));
        const std::size_t k = std::max<std::size_t>(d->index, 1);
        for (std::size_t s = k; s <= k + 2; ++s) {
            const auto xs = x.pow(static_cast<unsigned>(s));
            const auto ds = d->inverse.pow(static_cast<unsigned>(s));
            CHECK(xs * ds == x * d->inverse);
            CHECK(ds * ds * xs == ds);
            CHECK(xs * xs * ds == xs);
            CHECK(is_group_inverse(xs, ds));
        }
    }
}

} // namespace

TEST_CASE("group and Drazin inverses agree with the fraction-field oracle") {
    for_each_ring([]<class R>(R) {
        SplitMix64 rng(404 + static_cast<int>(R::kind));
        const std::size_t max_n = R::kind == RingKind::polynomials ? 4 : 5;
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t n = 1 + trial % max_n;
            check_against_oracle(gen_mixed_square<R>(rng, config(R::kind, n, rng.next())));
        }
    });
}
