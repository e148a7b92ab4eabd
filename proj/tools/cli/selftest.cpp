#include "selftest.hpp"

#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "bezout/errors.hpp"
#include "bezout/forge.hpp"
#include "bezout/generalized_inverse.hpp"
#include "bezout/linalg.hpp"
#include "bezout/normal_forms.hpp"
#include "bezout/oracle.hpp"
#include "bezout/similarity.hpp"
#include "cli.hpp"

namespace bezout::selftest {

namespace {

using Z = IntegerRing;
using Clock = std::chrono::steady_clock;

struct Counts {
    std::size_t flanders;
    std::size_t flanders_min; // accepted triples required
    std::size_t power;
    std::size_t cline;
    std::size_t oracle;
    std::size_t normal;
    std::size_t corollary;
};

Counts counts(Profile p) {
    if (p == Profile::full)
        return {600, 500, 150, 250, 600, 1000, 220};
    return {100, 80, 30, 50, 100, 150, 40};
}

const char* profile_name(Profile p) { return p == Profile::full ? "full" : "quick"; }

// Independent seed stream per criterion and sub-suite.
SplitMix64 stream(const Options& opt, int criterion, int sub = 0) {
    SplitMix64 mix(opt.seed);
    for (int i = 0; i < criterion * 16 + sub + 1; ++i)
        mix.next();
    return mix.fork();
}

// Scratch directory for the CLI round trips, removed on scope exit.
class ScratchDir {
public:
    ScratchDir() {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("bezout-selftest-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~ScratchDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    ScratchDir(const ScratchDir&) = delete;
    ScratchDir& operator=(const ScratchDir&) = delete;

    std::string path_string(const std::string& name) const { return (path_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const {
        auto p = path_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }

    template <BezoutRing R>
    std::string write(const std::string& name, const Mat<R>& m) const {
        return write(name, format_matrix_file(m));
    }

private:
    std::filesystem::path path_;
};

struct CliRun {
    int code = -1;
    Json doc;
};

CliRun invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun r;
    r.code = cli::run(args, out, err);
    try {
        r.doc = Json::parse(out.str());
    } catch (const nlohmann::json::exception&) {
        r.doc = out.str();
    }
    return r;
}

std::string error_kind(const Json& doc) {
    if (doc.is_object() && doc.contains("error"))
        return doc["error"].value("kind", "");
    return "";
}

template <BezoutRing R>
Json triple_json(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c) {
    return {{"ring", ring_tag(R::kind)}, {"A", matrix_to_json(a)}, {"B", matrix_to_json(b)}, {"C", matrix_to_json(c)}};
}

// Records the first failure only; later ones are counted.
struct Failures {
    std::size_t count = 0;
    Json first;

    void add(Json what) {
        if (count++ == 0)
            first = std::move(what);
    }
    void put(Json& details) const {
        details["failures"] = count;
        if (count)
            details["first_failure"] = first;
    }
};

// ---- criterion 1 -------------------------------------------------------

CriterionResult worked_example(const Options&) {
    CriterionResult res{1, "worked example: supplied P verifies, pipeline reports ABA != ACA", false, Json::object(), 0, 0.1};
    const Mat<Z> a{{1, 1}, {0, -1}};
    const Mat<Z> b{{1, 1}, {0, 0}};
    const Mat<Z> c{{1, -1}, {0, 0}};
    const Mat<Z> p{{1, 1}, {0, 1}};
    ScratchDir dir;
    const auto fa = dir.write("A.json", a), fb = dir.write("B.json", b), fc = dir.write("C.json", c),
               fp = dir.write("P.json", p);

    auto verify = invoke({"verify", "--mode", "product", fa, fb, fc, fp});
    const bool verified = verify.code == 0 && verify.doc.value("holds", false);

    auto pipeline = invoke({"witness", fa, fb, fc});
    const Mat<Z> aba_expected{{1, 0}, {0, 0}};
    const Mat<Z> aca_expected{{1, 2}, {0, 0}};
    bool mismatch_reported = pipeline.code == cli::hypothesis && error_kind(pipeline.doc) == "HypothesisViolated";
    if (mismatch_reported) {
        const Json& inst = pipeline.doc["error"]["instance"];
        mismatch_reported = inst.contains("ABA") && inst.contains("ACA") &&
                  matrix_from_json<Z>(inst["ABA"]) == aba_expected && matrix_from_json<Z>(inst["ACA"]) == aca_expected;
    }
    res.details["verify_product_exit"] = verify.code;
    res.details["verify_product_holds"] = verified;
    res.details["witness_exit"] = pipeline.code;
    res.details["witness_error"] = error_kind(pipeline.doc);
    res.details["ABA"] = matrix_to_json(Mat<Z>(a * b * a));
    res.details["ACA"] = matrix_to_json(Mat<Z>(a * c * a));
    res.pass = verified && mismatch_reported;
    return res;
}

// ---- criteria 2, 3 -----------------------------------------------------

struct FlandersCase {
    std::uint64_t seed;
    GenConfig cfg;
    bool c_equals_b;
};

std::vector<FlandersCase> flanders_cases(const Options& opt) {
    auto rng = stream(opt, 2);
    std::vector<FlandersCase> cases;
    for (std::size_t i = 0; i < counts(opt.profile).flanders; ++i) {
        GenConfig cfg;
        cfg.n = 1 + i % 5;
        cfg.seed = rng.next();
        cases.push_back({cfg.seed, cfg, i % 2 == 0});
    }
    return cases;
}

CriterionResult flanders_suite(const Options& opt) {
    CriterionResult res{2, "AB ~ CA witnesses on generated triples over Z", false, Json::object(), 0, 60};
    std::size_t accepted = 0, exhausted = 0, verified = 0, internal = 0, c_equals_b = 0, retries = 0;
    Failures fails;
    for (const auto& cs : flanders_cases(opt)) {
        Triple<Z> t;
        try {
            t = gen_flanders_triple<Z>(cs.cfg, cs.c_equals_b);
        } catch (const Error& e) {
            if (e.code() != Errc::generation_exhausted)
                throw;
            ++exhausted;
            continue;
        }
        ++accepted;
        retries += t.retries;
        c_equals_b += cs.c_equals_b;
        try {
            auto w = similarity_witness(t.a, t.b, t.c);
            const bool ok = w.w * w.w_inv == Mat<Z>::identity(cs.cfg.n) && t.a * t.b * w.w == w.w * t.c * t.a &&
                            within_bounds(t.a, cs.cfg) && within_bounds(t.b, cs.cfg) && within_bounds(t.c, cs.cfg);
            if (ok)
                ++verified;
            else
                fails.add({{"seed", cs.seed}, {"n", cs.cfg.n}, {"instance", triple_json(t.a, t.b, t.c)}});
        } catch (const Error& e) {
            internal += e.code() == Errc::internal_assertion;
            fails.add({{"seed", cs.seed}, {"n", cs.cfg.n}, {"error", errc_name(e.code())}, {"message", e.what()}});
        }
    }
    res.details = {{"instances", accepted + exhausted}, {"accepted", accepted},   {"c_equals_b", c_equals_b},
                   {"exhausted", exhausted},           {"verified", verified},   {"internal_assertions", internal},
                   {"rejected_draws", retries}};
    fails.put(res.details);
    res.pass = accepted >= counts(opt.profile).flanders_min && verified == accepted && internal == 0;
    return res;
}

CriterionResult group_inverse_suite(const Options& opt) {
    CriterionResult res{3, "same W conjugates group inverses, projectors and cores", false, Json::object(), 0, 0};
    std::size_t accepted = 0;
    std::size_t by_mode[3] = {0, 0, 0};
    const ConjugationMode modes[3] = {ConjugationMode::ginv, ConjugationMode::projector, ConjugationMode::core};
    Failures fails;
    for (const auto& cs : flanders_cases(opt)) {
        Triple<Z> t;
        try {
            t = gen_flanders_triple<Z>(cs.cfg, cs.c_equals_b);
        } catch (const Error& e) {
            if (e.code() != Errc::generation_exhausted)
                throw;
            continue;
        }
        ++accepted;
        try {
            auto w = similarity_witness(t.a, t.b, t.c);
            for (int m = 0; m < 3; ++m) {
                if (verify_witness(t.a, t.b, t.c, w.w, modes[m]))
                    ++by_mode[m];
                else
                    fails.add({{"seed", cs.seed}, {"mode", mode_name(modes[m])}, {"instance", triple_json(t.a, t.b, t.c)}});
            }
        } catch (const Error& e) {
            fails.add({{"seed", cs.seed}, {"error", errc_name(e.code())}, {"message", e.what()}});
        }
    }
    res.details = {{"instances", accepted},
                   {"ginv", by_mode[0]},
                   {"projector", by_mode[1]},
                   {"core", by_mode[2]}};
    fails.put(res.details);
    res.pass = accepted > 0 && by_mode[0] == accepted && by_mode[1] == accepted && by_mode[2] == accepted;
    return res;
}

// ---- criterion 4 -------------------------------------------------------

CriterionResult power_suite(const Options& opt) {
    CriterionResult res{4, "power witnesses and Cline's formula on nilpotent-plus-core triples", false, Json::object(), 0, 0};
    const auto cnt = counts(opt.profile);
    auto rng = stream(opt, 4);

    std::size_t triples = 0, draws = 0, k_outside = 0;
    std::size_t by_k[4] = {0, 0, 0, 0};
    std::size_t ca_above = 0;
    std::size_t ok[3] = {0, 0, 0};
    std::size_t too_small[3] = {0, 0, 0};
    std::size_t too_small_rank_proof = 0;
    std::size_t identities = 0, identity_checks = 0;
    Failures fails;
    Json first_too_small;

    while (triples < cnt.power && draws < cnt.power * 20) {
        GenConfig cfg;
        cfg.n = 2 + draws % 4;
        cfg.seed = rng.next();
        const std::size_t chain = 1 + draws % 3;
        const bool cb = draws % 2 == 0;
        ++draws;
        auto t = gen_drazin_triple<Z>(cfg, chain, cb);
        const Mat<Z> ab = t.a * t.b;
        const Mat<Z> ca = t.c * t.a;
        const auto dab = drazin(ab);
        const std::size_t k = dab.index;
        if (k < 1 || k > 3) {
            ++k_outside;
            continue;
        }
        ++triples;
        ++by_k[k];
        const std::size_t k_ca = drazin(ca).index;
        ca_above += k_ca > k;

        for (std::size_t off = 0; off < 3; ++off) {
            const std::size_t s = std::max<std::size_t>(k, 1) + off;
            const auto e = static_cast<unsigned>(s);
            const Mat<Z> abs = ab.pow(e), cas = ca.pow(e);

            // proof identities on (AB)^s
            ++identity_checks;
            const Mat<Z> dpow = dab.inverse.pow(e);
            auto g = try_group_inverse(abs);
            if (abs * dpow == ab * dab.inverse && g && *g == dpow)
                ++identities;
            else
                fails.add({{"seed", cfg.seed}, {"s", s}, {"what", "proof identity"}, {"instance", triple_json(t.a, t.b, t.c)}});

            try {
                auto w = power_witness(t.a, t.b, t.c, s);
                if (w.w * w.w_inv == Mat<Z>::identity(cfg.n) && abs * w.w == w.w * cas)
                    ++ok[off];
                else
                    fails.add({{"seed", cfg.seed}, {"s", s}, {"what", "witness check"}, {"instance", triple_json(t.a, t.b, t.c)}});
            } catch (const Error& err) {
                if (err.code() != Errc::index_too_small) {
                    fails.add({{"seed", cfg.seed}, {"s", s}, {"error", errc_name(err.code())}, {"message", err.what()}});
                    continue;
                }
                ++too_small[off];
                // Similar matrices have equal rank; differing field ranks rule out any witness.
                const bool impossible = oracle::field_rank(abs) != oracle::field_rank(cas);
                too_small_rank_proof += impossible;
                if (first_too_small.is_null())
                    first_too_small = {{"seed", cfg.seed},
                                       {"n", cfg.n},
                                       {"chain", chain},
                                       {"c_equals_b", cb},
                                       {"s", s},
                                       {"ind_AB", k},
                                       {"ind_CA", k_ca},
                                       {"rank_ABs", oracle::field_rank(abs)},
                                       {"rank_CAs", oracle::field_rank(cas)},
                                       {"instance", triple_json(t.a, t.b, t.c)}};
                fails.add({{"seed", cfg.seed}, {"s", s}, {"error", "IndexTooSmall"}, {"message", err.what()}});
            }
        }
    }

    // Cline's formula on Drazin-invertible triples, group-invertible ones included.
    auto crng = stream(opt, 4, 1);
    std::size_t cline_ok = 0, bound_ok = 0;
    for (std::size_t i = 0; i < cnt.cline; ++i) {
        GenConfig cfg;
        cfg.n = 1 + i % 5;
        cfg.seed = crng.next();
        auto t = gen_drazin_triple<Z>(cfg, i % 4, i % 2 == 1);
        try {
            const auto rep = cline_verify(t.a, t.b, t.c);
            cline_ok += rep.identity_holds;
            bound_ok += rep.index_bound_holds;
            if (!rep.holds())
                fails.add({{"seed", cfg.seed}, {"what", "cline"}, {"instance", triple_json(t.a, t.b, t.c)}});
        } catch (const Error& e) {
            fails.add({{"seed", cfg.seed}, {"what", "cline"}, {"error", errc_name(e.code())}, {"message", e.what()}});
        }
    }

    Json per_s = Json::array();
    const char* labels[3] = {"max(k,1)", "k+1", "k+2"};
    for (int off = 0; off < 3; ++off)
        per_s.push_back({{"s", labels[off]}, {"succeeded", ok[off]}, {"index_too_small", too_small[off]}});
    res.details = {{"triples", triples},
                   {"draws", draws},
                   {"skipped_index_outside_1_3", k_outside},
                   {"by_index", {{"1", by_k[1]}, {"2", by_k[2]}, {"3", by_k[3]}}},
                   {"ind_CA_exceeds_ind_AB", ca_above},
                   {"power_witness", per_s},
                   {"index_too_small_with_rank_obstruction", too_small_rank_proof},
                   {"proof_identities", {{"held", identities}, {"checked", identity_checks}}},
                   {"cline_triples", cnt.cline},
                   {"cline_identity", cline_ok},
                   {"cline_index_bound", bound_ok}};
    if (!first_too_small.is_null())
        res.details["first_index_too_small"] = first_too_small;
    fails.put(res.details);
    res.pass = triples >= cnt.power && ok[0] == triples && ok[1] == triples && ok[2] == triples &&
               identities == identity_checks && cline_ok == cnt.cline && bound_ok == cnt.cline;
    return res;
}

// ---- criterion 5 -------------------------------------------------------

template <BezoutRing R>
Json oracle_agreement(SplitMix64 rng, std::size_t count, std::size_t max_n, long degree_bound, bool& pass) {
    std::size_t agree = 0, group = 0, drazin_count = 0, field_only = 0, nontrivial_index = 0;
    Failures fails;
    for (std::size_t i = 0; i < count; ++i) {
        GenConfig cfg;
        cfg.n = 1 + i % max_n;
        cfg.degree_bound = degree_bound;
        cfg.seed = rng.next();
        SplitMix64 local(cfg.seed);
        const Mat<R> x = gen_mixed_square<R>(local, cfg);
        auto describe = [&](const char* what) {
            return Json{{"ring", ring_tag(R::kind)}, {"index", i}, {"seed", cfg.seed}, {"what", what}, {"x", matrix_to_json(x)}};
        };
        try {
            const auto rep = oracle::fraction_field_oracle(x);
            const auto g = try_group_inverse(x);
            const auto d = try_drazin(x);
            bool same = g.has_value() == rep.ring_group_exists() && d.has_value() == rep.ring_drazin_exists();
            if (same && g)
                same = *g == *rep.group_inverse && is_group_inverse(x, *g);
            if (same && d)
                same = d->inverse == *rep.drazin_inverse &&
                       d->index == rep.drazin_index && is_drazin_inverse(x, d->inverse, d->index);
            if (!same) {
                fails.add(describe("library and fraction-field oracle disagree"));
                continue;
            }
            ++agree;
            group += g.has_value();
            drazin_count += d.has_value();
            field_only += rep.group_exists_in_field && !rep.group_integral;
            nontrivial_index += d && d->index >= 2;
        } catch (const Error& e) {
            auto j = describe("exception");
            j["error"] = errc_name(e.code());
            j["message"] = e.what();
            fails.add(j);
        }
    }
    Json details = {{"matrices", count},
                    {"max_n", max_n},
                    {"agree", agree},
                    {"group_invertible", group},
                    {"drazin_invertible", drazin_count},
                    {"group_invertible_over_field_only", field_only},
                    {"drazin_index_at_least_2", nontrivial_index}};
    fails.put(details);
    pass = pass && agree == count;
    return details;
}

CriterionResult oracle_suite(const Options& opt) {
    CriterionResult res{5, "group/Drazin inverses agree with the fraction-field oracle", false, Json::object(), 0, 0};
    const auto n = counts(opt.profile).oracle;
    bool pass = true;
    res.details["int"] = oracle_agreement<IntegerRing>(stream(opt, 5, 0), n, 5, 2, pass);
    res.details["polyrat"] = oracle_agreement<PolyRing>(stream(opt, 5, 1), n, 4, 2, pass);
    res.pass = pass;
    return res;
}

// ---- criterion 6 -------------------------------------------------------

template <BezoutRing R>
bool divisibility_chain(const SmithResult<R>& s) {
    const auto d = s.invariant_factors();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
        if (!divides<R>(d[i], d[i + 1]))
            return false;
    for (const auto& v : d)
        if (!(canonicalize<R>(v).associate == v))
            return false;
    return true;
}

template <BezoutRing R>
Json normal_form_suite(SplitMix64 rng, std::size_t count, std::size_t max_dim, bool& pass) {
    std::size_t ok = 0;
    Failures fails;
    for (std::size_t i = 0; i < count; ++i) {
        GenConfig cfg;
        cfg.seed = rng.next();
        SplitMix64 local(cfg.seed);
        const auto rows = static_cast<std::size_t>(local.uniform(0, static_cast<long>(max_dim)));
        const auto cols = static_cast<std::size_t>(local.uniform(0, static_cast<long>(max_dim)));
        Mat<R> a;
        switch (i % 4) {
        case 0: a = gen_uniform<R>(local, rows, cols, cfg); break;
        case 1: {
            GenConfig small = cfg;
            small.entry_bound = 3;
            small.degree_bound = 1;
            const auto r = static_cast<std::size_t>(local.uniform(0, static_cast<long>(std::min(rows, cols))));
            a = gen_uniform<R>(local, rows, r, small) * gen_uniform<R>(local, r, cols, small);
            break;
        }
        case 2:
            cfg.n = rows;
            a = gen_mixed_square<R>(local, cfg);
            break;
        default: a = Mat<R>(rows, cols); break;
        }
        std::string broken;
        try {
            const auto h = column_hermite(a);
            const auto rh = row_hermite(a);
            const auto s = smith(a);
            const auto rf = rank_factorization(a);
            if (!(a * h.transform == h.form))
                broken = "A*T != H";
            else if (!is_unimodular(h.transform))
                broken = "det T is not a unit";
            else if (!(s.left * s.diag * s.right == a))
                broken = "U*S*V != A";
            else if (!is_unimodular(s.left) || !is_unimodular(s.right))
                broken = "det U or det V is not a unit";
            else if (!divisibility_chain(s))
                broken = "invariant factors do not form a canonical divisibility chain";
            else if (!(column_hermite(h.form).form == h.form))
                broken = "HNF is not idempotent";
            else if (!(rh.transform * a == rh.form))
                broken = "row Hermite reconstruction";
            else if (s.rank != h.rank() || s.rank != rh.rank() || s.rank != rf.rank ||
                     !(rf.left * rf.right == a) || s.rank != oracle::field_rank(a))
                broken = "rank notions disagree";
            else if (a.is_zero() && s.rank != 0)
                broken = "rank of a zero matrix is not 0";
        } catch (const Error& e) {
            broken = std::string(errc_name(e.code())) + ": " + e.what();
        }
        if (broken.empty())
            ++ok;
        else
            fails.add({{"ring", ring_tag(R::kind)}, {"index", i}, {"seed", cfg.seed}, {"what", broken}, {"a", matrix_to_json(a)}});
    }
    Json details = {{"matrices", count}, {"max_dim", max_dim}, {"ok", ok}};
    fails.put(details);
    pass = pass && ok == count;
    return details;
}

CriterionResult normal_forms_suite(const Options& opt) {
    CriterionResult res{6, "Hermite/Smith invariants and rank coincidence", false, Json::object(), 0, 0};
    const auto n = counts(opt.profile).normal;
    bool pass = true;
    res.details["int"] = normal_form_suite<IntegerRing>(stream(opt, 6, 0), n, 5, pass);
    res.details["rat"] = normal_form_suite<RationalRing>(stream(opt, 6, 1), n, 5, pass);
    res.details["polyrat"] = normal_form_suite<PolyRing>(stream(opt, 6, 2), n, 4, pass);

    bool zero_ok = true;
    for (std::size_t r = 0; r <= 3; ++r)
        for (std::size_t c = 0; c <= 3; ++c)
            zero_ok = zero_ok && smith(Mat<Z>(r, c)).rank == 0 && column_hermite(Mat<Z>(r, c)).rank() == 0 &&
                      rank_factorization(Mat<Z>(r, c)).rank == 0;
    res.details["rank_of_zero_is_0"] = zero_ok;
    res.pass = pass && zero_ok;
    return res;
}

// ---- criterion 7 -------------------------------------------------------

CriterionResult corollary_suite(const Options& opt) {
    CriterionResult res{7, "corollary condition checkers", false, Json::object(), 0, 0};
    const auto n = counts(opt.profile).corollary;
    bool pass = true;
    int sub = 0;
    ScratchDir dir;
    for (auto v : {CorollaryVariant::cor22, CorollaryVariant::cor23, CorollaryVariant::thm22, CorollaryVariant::cor24}) {
        auto rng = stream(opt, 7, sub++);
        std::size_t holds_ok = 0, fails_ok = 0;
        bool cli_checked = false, cli_ok = false;
        Failures fails;
        for (std::size_t i = 0; i < n; ++i) {
            GenConfig cfg;
            cfg.n = 2 + i % 4;
            cfg.seed = rng.next();
            try {
                auto t = gen_corollary_triple<Z>(cfg, v, true);
                auto out = corollary_check(t.a, t.b, t.c, v);
                if (!out.report.failed_condition() && out.report.ab_group_invertible && out.report.ca_group_invertible &&
                    out.witness && verify_witness(t.a, t.b, t.c, out.witness->w, ConjugationMode::product))
                    ++holds_ok;
                else
                    fails.add({{"seed", cfg.seed}, {"holds", true}, {"instance", triple_json(t.a, t.b, t.c)}});
            } catch (const Error& e) {
                fails.add({{"seed", cfg.seed}, {"holds", true}, {"error", errc_name(e.code())}, {"message", e.what()}});
            }
            try {
                auto t = gen_corollary_triple<Z>(cfg, v, false);
                auto out = corollary_check(t.a, t.b, t.c, v);
                const auto failed = out.report.failed_condition();
                if (failed && *failed == engineered_failure(v) && !out.witness)
                    ++fails_ok;
                else
                    fails.add({{"seed", cfg.seed}, {"holds", false}, {"failed", failed.value_or("none")},
                               {"instance", triple_json(t.a, t.b, t.c)}});
                if (!cli_checked) {
                    // The CLI turns the report into ConditionNotMet.
                    cli_checked = true;
                    auto r = invoke({"check", "--variant", std::string(variant_name(v)), dir.write("A.json", t.a),
                                     dir.write("B.json", t.b), dir.write("C.json", t.c)});
                    cli_ok = r.code == cli::hypothesis && error_kind(r.doc) == "ConditionNotMet" &&
                             r.doc["error"]["instance"].value("failed_condition", "") == engineered_failure(v);
                }
            } catch (const Error& e) {
                fails.add({{"seed", cfg.seed}, {"holds", false}, {"error", errc_name(e.code())}, {"message", e.what()}});
            }
        }
        Json d = {{"holding", n},
                  {"holding_verified", holds_ok},
                  {"failing", n},
                  {"failing_named_correctly", fails_ok},
                  {"engineered_failure", engineered_failure(v)},
                  {"cli_condition_not_met", cli_ok}};
        fails.put(d);
        res.details[std::string(variant_name(v))] = d;
        pass = pass && holds_ok == n && fails_ok == n && cli_ok;
    }
    res.pass = pass;
    return res;
}

// ---- criterion 8 -------------------------------------------------------

CriterionResult negative_paths(const Options&) {
    CriterionResult res{8, "negative-path exit codes", false, Json::object(), 0, 0};
    ScratchDir dir;
    const auto x = dir.write("X.json", Mat<Z>{{2, 0}, {0, 0}});
    auto ginv = invoke({"ginv", "--ring", "int", x});

    const auto pa = dir.write("A.json", Mat<Z>{{1, 1}, {0, -1}});
    const auto pb = dir.write("B.json", Mat<Z>{{1, 1}, {0, 0}});
    const auto pc = dir.write("C.json", Mat<Z>{{1, -1}, {0, 0}});
    auto hyp = invoke({"witness", pa, pb, pc});

    const auto bad_json = dir.write("bad1.json", "{\"ring\": \"int\", \"rows\": 2,");
    const auto bad_shape = dir.write("bad2.json", R"({"ring":"int","rows":2,"cols":2,"entries":[["1","2"]]})");
    const auto bad_entry = dir.write("bad3.json", R"({"ring":"int","rows":1,"cols":1,"entries":[["1/2"]]})");
    auto m1 = invoke({"rank", bad_json});
    auto m2 = invoke({"rank", bad_shape});
    auto m3 = invoke({"rank", bad_entry});
    auto m4 = invoke({"rank", dir.path_string("missing.json")});

    // swap example: A = [[0,1],[0,0]], B = C = [[0,0],[1,0]]
    const auto sa = dir.write("SA.json", Mat<Z>{{0, 1}, {0, 0}});
    const auto sb = dir.write("SB.json", Mat<Z>{{0, 0}, {1, 0}});
    auto fault = invoke({"--inject-fault", "witness_assertion", "witness", sa, sb, sb});
    bool replayable = false;
    if (fault.code == cli::internal && error_kind(fault.doc) == "InternalAssertion") {
        const Json& inst = fault.doc["error"]["instance"];
        if (inst.contains("A") && inst.contains("B") && inst.contains("C")) {
            auto replay = invoke({"witness", dir.write("RA.json", inst["A"].dump()), dir.write("RB.json", inst["B"].dump()),
                                  dir.write("RC.json", inst["C"].dump())});
            replayable = replay.code == cli::ok;
        }
    }
    res.details = {{"ginv_2_0_0_0_exit", ginv.code},
                   {"aba_ne_aca_exit", hyp.code},
                   {"malformed_exits", {m1.code, m2.code, m3.code, m4.code}},
                   {"injected_fault_exit", fault.code},
                   {"instance_dump_replays", replayable}};
    res.pass = ginv.code == cli::not_invertible && hyp.code == cli::hypothesis && m1.code == cli::bad_input &&
               m2.code == cli::bad_input && m3.code == cli::bad_input && m4.code == cli::bad_input &&
               fault.code == cli::internal && replayable;
    return res;
}

} // namespace

CriterionResult run_criterion(int id, const Options& opt, std::ostream* log) {
    static const std::function<CriterionResult(const Options&)> suites[criterion_count] = {
        worked_example, flanders_suite, group_inverse_suite, power_suite,
        oracle_suite,  normal_forms_suite, corollary_suite, negative_paths};
    if (id < 1 || id > criterion_count)
        raise(Errc::parse_error, "no criterion " + std::to_string(id));
    const auto start = Clock::now();
    CriterionResult res = suites[id - 1](opt);
    res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    res.details["profile"] = profile_name(opt.profile);
    if (res.budget_seconds > 0) {
        res.details["runtime_budget_seconds"] = res.budget_seconds;
        if (res.seconds >= res.budget_seconds)
            res.pass = false;
        res.details["within_runtime_budget"] = res.seconds < res.budget_seconds;
    }
    if (log)
        *log << "criterion " << id << ": " << (res.pass ? "PASS" : "FAIL") << " (" << res.seconds << " s)\n";
    return res;
}

std::vector<CriterionResult> run_all(const Options& opt, std::ostream* log) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criterion_count; ++id)
        out.push_back(run_criterion(id, opt, log));
    return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass)
            return false;
    return true;
}

Json summary(const Options& opt, const std::vector<CriterionResult>& results) {
    Json doc;
    doc["verb"] = "selftest";
    doc["profile"] = profile_name(opt.profile);
    doc["seed"] = opt.seed;
    Json arr = Json::array();
    for (const auto& r : results)
        arr.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"details", r.details}});
    doc["criteria"] = arr;
    doc["pass"] = all_passed(results);
    return doc;
}

} // namespace bezout::selftest
