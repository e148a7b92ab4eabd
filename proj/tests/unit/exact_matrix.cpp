#include "test_support.hpp"

#include "bezout/linalg.hpp"
#include "bezout/normal_forms.hpp"
#include "bezout/oracle.hpp"

using namespace bezout;
using namespace bezout::test;

TEST_CASE("determinant examples") {
    CHECK(det(ZMat::identity(4)) == 1);
    CHECK(det(ZMat{{1, 1}, {0, -1}}) == -1);
    CHECK(det(ZMat{{1, 1}, {0, 1}}) == 1);
    CHECK(det(ZMat(0, 0)) == 1);
    CHECK(det(ZMat{{0, 2}, {3, 0}}) == -6);
}

TEST_CASE("inverse examples") {
    CHECK(inverse_over_ring(ZMat::identity(3)) == ZMat::identity(3));
    CHECK(inverse_over_ring(ZMat{{1, 1}, {0, 1}}) == ZMat{{1, -1}, {0, 1}});
    CHECK(inverse_over_ring(ZMat(0, 0)) == ZMat(0, 0));
    try {
        inverse_over_ring(ZMat{{2, 0}, {0, 1}});
        FAIL("expected not_invertible_over_ring");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_invertible_over_ring);
    }
    CHECK(inverse_over_ring(QMat{{2, 0}, {0, 1}}) == QMat{{mpq_class(1, 2), 0}, {0, 1}});
    try {
        inverse_over_ring(PMat{{Poly{0, 1}, 0}, {0, 1}});
        FAIL("x is not a unit in Q[x]");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_invertible_over_ring);
    }
}

TEST_CASE("solving in the column module") {
    const ZMat b{{3, -1}, {5, 8}};
    CHECK(solve_in_column_module(ZMat::identity(2), b) == b);
    CHECK(solve_in_column_module(ZMat{{2}}, ZMat{{4}}) == ZMat{{2}});
    try {
        solve_in_column_module(ZMat{{2}}, ZMat{{3}});
        FAIL("expected no_solution");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::no_solution);
    }
    CHECK_FALSE(try_solve_in_column_module(ZMat{{2}}, ZMat{{3}}).has_value());
    CHECK(solve_in_column_module(QMat{{2}}, QMat{{3}}) == QMat{{mpq_class(3, 2)}});
}

TEST_CASE("shape errors") {
    try {
        det(ZMat(2, 3));
        FAIL("expected not_square");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_square);
    }
    try {
        (void)(ZMat(2, 3) * ZMat(2, 3));
        FAIL("expected dimension_mismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::dimension_mismatch);
    }
}

TEST_CASE("determinant agrees with Leibniz expansion and is multiplicative") {
    for_each_ring([]<class R>(R) {
        SplitMix64 rng(11 + static_cast<int>(R::kind));
        GenConfig cfg = config(R::kind, 0, 0);
        for (int trial = 0; trial < 120; ++trial) {
            const std::size_t n = 1 + trial % 4;
            const auto a = gen_mixed_square<R>(rng, config(R::kind, n, rng.next()));
            const auto b = gen_uniform<R>(rng, n, n, cfg);
            CAPTURE(show(a));
            CHECK(det(a) == leibniz_det(a));
            CHECK(det(a * b) == det(a) * det(b));
        }
    });
}

TEST_CASE("inverse exists iff det is a unit, and both inversion paths agree") {
    for_each_ring([]<class R>(R) {
        SplitMix64 rng(23 + static_cast<int>(R::kind));
        int invertible = 0;
        for (int trial = 0; trial < 150; ++trial) {
            const std::size_t n = 1 + trial % 4;
            Mat<R> a = trial % 3 == 0 ? random_unimodular<R>(rng, n, 6)
                                      : gen_mixed_square<R>(rng, config(R::kind, n, rng.next()));
            CAPTURE(show(a));
            if (R::is_unit(det(a))) {
                ++invertible;
                const auto inv = inverse_over_ring(a);
                CHECK((a * inv).is_identity());
                CHECK((inv * a).is_identity());
                CHECK(detail::inverse_by_adjugate(a) == detail::inverse_by_hermite(a));
            } else {
                CHECK_THROWS_AS(inverse_over_ring(a), Error);
            }
        }
        CHECK(invertible > 40);
    });
}

TEST_CASE("solution check against the fraction field") {
    for_each_ring([]<class R>(R) {
        SplitMix64 rng(31 + static_cast<int>(R::kind));
        GenConfig cfg = config(R::kind, 0, 0);
        int solved = 0, refused = 0;
        for (int trial = 0; trial < 150; ++trial) {
            const std::size_t n = 1 + trial % 3;
            const auto a = gen_mixed_square<R>(rng, config(R::kind, n, rng.next()));
            const auto b = trial % 2 ? a * gen_uniform<R>(rng, n, 1, cfg) : gen_uniform<R>(rng, n, 1, cfg);
            CAPTURE(show(a));
            CAPTURE(show(b));
            if (const auto x = try_solve_in_column_module(a, b)) {
                ++solved;
                CHECK(a * *x == b);
            } else {
                ++refused;
                // Either inconsistent over the field or every field solution
                // with a unique answer is non-integral.
                const std::size_t ra = oracle::field_rank(a);
                const std::size_t rab = oracle::field_rank(hstack(a, b));
                if (ra == rab && ra == n) {
                    auto inv = oracle::fraction_field_oracle(a).field_drazin_inverse;
                    auto fb = oracle::to_field(b);
                    oracle::FieldMat<oracle::Field<R>> fx(n, std::vector<oracle::Field<R>>(1));
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t k = 0; k < n; ++k)
                            fx[i][0] = fx[i][0] + inv[i][k] * fb[k][0];
                    CHECK_FALSE(oracle::from_field<R>(fx).has_value());
                }
            }
        }
        CHECK(solved > 0);
        if (R::kind != RingKind::rationals)
            CHECK(refused > 0);
    });
}

TEST_CASE("elimination rank matches Hermite rank and field rank") {
    for_each_ring([]<class R>(R) {
        SplitMix64 rng(41 + static_cast<int>(R::kind));
        GenConfig cfg = config(R::kind, 0, 0);
        for (int trial = 0; trial < 120; ++trial) {
            const std::size_t m = 1 + trial % 4, n = 1 + (trial / 4) % 4;
            const auto a = trial % 2 ? gen_uniform<R>(rng, m, 2, cfg) * gen_uniform<R>(rng, 2, n, cfg)
                                     : gen_uniform<R>(rng, m, n, cfg);
            CAPTURE(show(a));
            CHECK(elimination_rank(a) == rank(a));
            CHECK(elimination_rank(a) == oracle::field_rank(a));
        }
    });
}
