#include "test_support.hpp"

using namespace bezout;
using namespace bezout::test;

namespace {

template <class F>
Errc code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::internal_assertion;
}

} // namespace

TEST_CASE("element syntax") {
    CHECK(element_to_json<IntegerRing>(-12) == Json("-12"));
    CHECK(element_to_json<RationalRing>(element_from_json<RationalRing>(Json("-3/6"))) == Json("-1/2"));
    CHECK(element_to_json<RationalRing>(mpq_class(4)) == Json("4"));
    CHECK(element_to_json<PolyRing>(Poly{mpq_class(1, 2), 0, 3}) == Json::parse(R"(["1/2","0","3"])"));
    CHECK(element_to_json<PolyRing>(Poly()) == Json::array());

    CHECK(element_from_json<IntegerRing>(Json(7)) == 7);
    CHECK(element_from_json<IntegerRing>(Json("123456789012345678901234567890")) ==
          mpz_class("123456789012345678901234567890"));
    CHECK(element_from_json<RationalRing>(Json("6/4")) == mpq_class(3, 2));
    CHECK(element_from_json<PolyRing>(Json("5")) == Poly(5));
    CHECK(element_from_json<PolyRing>(Json::parse(R"(["1", "0", "0"])")) == Poly{1});
}

TEST_CASE("matrix documents") {
    const ZMat m{{1, -2}, {0, 3}};
    const Json doc = matrix_to_json(m);
    CHECK(doc["ring"] == "int");
    CHECK(doc["rows"] == 2);
    CHECK(doc["cols"] == 2);
    CHECK(matrix_from_json<IntegerRing>(doc) == m);
    CHECK(document_ring(doc) == RingKind::integers);

    // reading an int document as rationals needs reinterpret
    CHECK(code_of([&] { matrix_from_json<RationalRing>(doc); }) == Errc::parse_error);
    CHECK(matrix_from_json<RationalRing>(doc, true) == QMat{{1, -2}, {0, 3}});
}

TEST_CASE("malformed inputs are parse errors") {
    const char* bad[] = {
        "not json",
        R"({"rows": 1, "cols": 1, "entries": [["1"]]})",
        R"({"ring": "gauss", "rows": 1, "cols": 1, "entries": [["1"]]})",
        R"({"ring": "int", "rows": 2, "cols": 1, "entries": [["1"]]})",
        R"({"ring": "int", "rows": 1, "cols": 2, "entries": [["1"]]})",
        R"({"ring": "int", "rows": 1, "cols": 1, "entries": [["1/2"]]})",
        R"({"ring": "int", "rows": 1, "cols": 1, "entries": [["abc"]]})",
        R"({"ring": "rat", "rows": 1, "cols": 1, "entries": [["1/0"]]})",
        R"({"ring": "int", "rows": -1, "cols": 1, "entries": []})",
        R"({"ring": "int", "rows": 1, "cols": 1, "entries": [[1.5]]})",
    };
    for (const char* text : bad) {
        CAPTURE(text);
        const Errc code = code_of([&] {
            const Json j = parse_json(text);
            switch (document_ring(j)) {
            case RingKind::integers: matrix_from_json<IntegerRing>(j); break;
            case RingKind::rationals: matrix_from_json<RationalRing>(j); break;
            case RingKind::polynomials: matrix_from_json<PolyRing>(j); break;
            }
        });
        CHECK((code == Errc::parse_error || code == Errc::division_by_zero));
    }
}

TEST_CASE("file round trip") {
    for_each_ring([]<class R>(R) {
        SplitMix64 rng(909 + static_cast<int>(R::kind));
        GenConfig cfg = config(R::kind, 0, 0);
        cfg.entry_bound = 1000;
        for (int trial = 0; trial < 100; ++trial) {
            const auto m = gen_uniform<R>(rng, trial % 4, 1 + trial % 3, cfg);
            const std::string text = format_matrix_file(m);
            CAPTURE(text);
            CHECK(parse_matrix_file<R>(text) == m);
            CHECK(format_matrix_file(parse_matrix_file<R>(text)) == text);
            CHECK(text.back() == '\n');
        }
    });
}
