#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bezout/fault.hpp"
#include "bezout/forge.hpp"
#include "bezout/generalized_inverse.hpp"
#include "bezout/linalg.hpp"
#include "bezout/matrix_io.hpp"
#include "bezout/normal_forms.hpp"
#include "bezout/similarity.hpp"
#include "selftest.hpp"

namespace bezout::cli {

int exit_code(Errc code) noexcept {
    switch (code) {
    case Errc::hypothesis_violated:
    case Errc::condition_not_met:
    case Errc::index_too_small:
    case Errc::not_idempotent:
        return hypothesis;
    case Errc::not_group_invertible:
    case Errc::not_drazin_invertible:
    case Errc::not_invertible_over_ring:
    case Errc::no_solution:
        return not_invertible;
    case Errc::internal_assertion:
        return internal;
    case Errc::division_by_zero:
    case Errc::not_divisible:
    case Errc::not_square:
    case Errc::dimension_mismatch:
    case Errc::generation_exhausted:
    case Errc::parse_error:
        return bad_input;
    }
    return internal;
}

namespace {

struct Options {
    std::string ring;
    std::string fault;
    std::vector<std::string> files;
    std::size_t s = 0;
    std::string variant = "cor22";
    std::string mode = "product";
    std::uint64_t seed = 1;
    std::string profile = "quick";

    // gen
    std::string kind = "flanders";
    std::size_t n = 3;
    long entry_bound = 9;
    long degree_bound = 2;
    std::size_t core_rank = 1;
    std::size_t chain = 2;
    bool c_equals_b = false;
    bool fails = false;
    std::string out_dir;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(Errc::parse_error, "cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

struct Inputs {
    RingKind ring = RingKind::integers;
    bool reinterpret = false;
    std::vector<Json> docs;
};

// All inputs must declare one ring unless --ring names the ring to read them in.
Inputs load(const Options& opt, std::size_t expected) {
    if (opt.files.size() != expected)
        raise(Errc::parse_error,
              "expected " + std::to_string(expected) + " matrix file(s), got " + std::to_string(opt.files.size()));
    Inputs in;
    std::optional<RingKind> forced;
    if (!opt.ring.empty()) {
        forced = parse_ring_tag(opt.ring);
        if (!forced)
            raise(Errc::parse_error, "unknown ring '" + opt.ring + "'");
    }
    for (const auto& path : opt.files) {
        Json doc = parse_json(read_file(path));
        const RingKind declared = document_ring(doc);
        if (!forced && !in.docs.empty() && declared != in.ring)
            raise(Errc::parse_error, "'" + path + "' declares ring '" + std::string(ring_tag(declared)) +
                                         "' but earlier inputs use '" + std::string(ring_tag(in.ring)) + "'");
        if (in.docs.empty())
            in.ring = declared;
        in.docs.push_back(std::move(doc));
    }
    if (forced) {
        in.ring = *forced;
        in.reinterpret = true;
    }
    return in;
}

template <class F>
decltype(auto) with_ring(RingKind kind, F&& f) {
    switch (kind) {
    case RingKind::integers: return f(IntegerRing{});
    case RingKind::rationals: return f(RationalRing{});
    case RingKind::polynomials: return f(PolyRing{});
    }
    return f(IntegerRing{});
}

template <BezoutRing R>
std::vector<Mat<R>> matrices(const Inputs& in) {
    std::vector<Mat<R>> out;
    for (const auto& doc : in.docs)
        out.push_back(matrix_from_json<R>(doc, in.reinterpret));
    return out;
}

template <BezoutRing R>
Json elements(const std::vector<typename R::value_type>& v) {
    Json arr = Json::array();
    for (const auto& e : v)
        arr.push_back(element_to_json<R>(e));
    return arr;
}

Json result(std::string_view verb, RingKind ring) {
    Json doc;
    doc["verb"] = verb;
    doc["ring"] = ring_tag(ring);
    return doc;
}

template <BezoutRing R>
Json witness_json(const SimilarityWitness<R>& w) {
    Json j;
    j["w"] = matrix_to_json(w.w);
    j["w_inv"] = matrix_to_json(w.w_inv);
    j["core_rank"] = w.core_rank;
    j["ab_conjugator"] = matrix_to_json(w.ab_conjugator);
    j["ca_conjugator"] = matrix_to_json(w.ca_conjugator);
    j["intertwiner_core"] = matrix_to_json(w.intertwiner_core);
    return j;
}

// Re-checks a witness before it is printed.
template <BezoutRing R>
void recheck(const Mat<R>& ab, const Mat<R>& ca, const SimilarityWitness<R>& w, const Json& dump) {
    if (!(w.w * w.w_inv == Mat<R>::identity(w.w.rows())) || !(ab * w.w == w.w * ca))
        throw Error(Errc::internal_assertion, "witness failed re-verification before output", dump.dump());
}

template <BezoutRing R>
Json triple_json(const Mat<R>& a, const Mat<R>& b, const Mat<R>& c) {
    Json j;
    j["ring"] = ring_tag(R::kind);
    j["A"] = matrix_to_json(a);
    j["B"] = matrix_to_json(b);
    j["C"] = matrix_to_json(c);
    return j;
}

int cmd_rank(const Options& opt, Json& doc) {
    auto in = load(opt, 1);
    return with_ring(in.ring, [&](auto tag) {
        using R = decltype(tag);
        auto x = matrices<R>(in)[0];
        const auto s = smith(x);
        const auto h = column_hermite(x);
        const auto rh = row_hermite(x);
        doc = result("rank", in.ring);
        doc["rank"] = s.rank;
        doc["rank_smith"] = s.rank;
        doc["rank_column_hermite"] = h.rank();
        doc["rank_row_hermite"] = rh.rank();
        if (s.rank != h.rank() || s.rank != rh.rank())
            throw Error(Errc::internal_assertion, "rank notions disagree", matrix_to_json(x).dump());
        return ok;
    });
}

int cmd_hnf(const Options& opt, Json& doc) {
    auto in = load(opt, 1);
    return with_ring(in.ring, [&](auto tag) {
        using R = decltype(tag);
        auto x = matrices<R>(in)[0];
        const auto h = column_hermite(x);
        if (!(x * h.transform == h.form))
            throw Error(Errc::internal_assertion, "A*T != H", matrix_to_json(x).dump());
        doc = result("hnf", in.ring);
        doc["form"] = matrix_to_json(h.form);
        doc["transform"] = matrix_to_json(h.transform);
        doc["pivot_rows"] = h.pivot_rows;
        doc["rank"] = h.rank();
        return ok;
    });
}

int cmd_smith(const Options& opt, Json& doc) {
    auto in = load(opt, 1);
    return with_ring(in.ring, [&](auto tag) {
        using R = decltype(tag);
        auto x = matrices<R>(in)[0];
        const auto s = smith(x);
        if (!(s.left * s.diag * s.right == x))
            throw Error(Errc::internal_assertion, "U*S*V != A", matrix_to_json(x).dump());
        doc = result("smith", in.ring);
        doc["left"] = matrix_to_json(s.left);
        doc["diag"] = matrix_to_json(s.diag);
        doc["right"] = matrix_to_json(s.right);
        doc["invariant_factors"] = elements<R>(s.invariant_factors());
        doc["rank"] = s.rank;
        return ok;
    });
}

int cmd_ginv(const Options& opt, Json& doc) {
    auto in = load(opt, 1);
    return with_ring(in.ring, [&](auto tag) {
        using R = decltype(tag);
        auto x = matrices<R>(in)[0];
        auto g = group_inverse(x);
        doc = result("ginv", in.ring);
        doc["group_inverse"] = matrix_to_json(g);
        doc["verified"] = is_group_inverse(x, g);
        return ok;
    });
}

int cmd_drazin(const Options& opt, Json& doc) {
    auto in = load(opt, 1);
    return with_ring(in.ring, [&](auto tag) {
        using R = decltype(tag);
        auto x = matrices<R>(in)[0];
        auto d = drazin(x);
        doc = result("drazin", in.ring);
        doc["index"] = d.index;
        doc["drazin_inverse"] = matrix_to_json(d.inverse);
        doc["verified"] = is_drazin_inverse(x, d.inverse, d.index);
        return ok;
    });
}

int cmd_witness(const Options& opt, Json& doc) {
    auto in = load(opt, 3);
    return with_ring(in.ring, [&](auto tag) {
        using R = decltype(tag);
        auto m = matrices<R>(in);
        const auto& [a, b, c] = std::tie(m[0], m[1], m[2]);
        auto w = conjugate_witnesses(a, b, c);
        recheck(Mat<R>(a * b), Mat<R>(c * a), w, triple_json(a, b, c));
        doc = result("witness", in.ring);
        doc["witness"] = witness_json(w);
        doc["checks"] = {{"product", w.checks.product},
                         {"ginv", w.checks.ginv},
                         {"projector", w.checks.projector},
                         {"core", w.checks.core}};
        return ok;
    });
}

int cmd_witness_power(const Options& opt, Json& doc) {
    auto in = load(opt, 3);
    return with_ring(in.ring, [&](auto tag) {
        using R = decltype(tag);
        auto m = matrices<R>(in);
        const auto& [a, b, c] = std::tie(m[0], m[1], m[2]);
        auto w = power_witness(a, b, c, opt.s);
        const auto e = static_cast<unsigned>(opt.s);
        recheck(Mat<R>((a * b).pow(e)), Mat<R>((c * a).pow(e)), w, triple_json(a, b, c));
        doc = result("witness-power", in.ring);
        doc["s"] = opt.s;
        doc["witness"] = witness_json(w);
        doc["checks"] = {{"power", true}};
        return ok;
    });
}

int cmd_verify(const Options& opt, Json& doc) {
    auto mode = parse_mode(opt.mode);
    if (!mode)
        raise(Errc::parse_error, "unknown mode '" + opt.mode + "'");
    auto in = load(opt, 4);
    return with_ring(in.ring, [&](auto tag) {
        using R = decltype(tag);
        auto m = matrices<R>(in);
        const bool holds = verify_witness(m[0], m[1], m[2], m[3], *mode);
        doc = result("verify", in.ring);
        doc["mode"] = mode_name(*mode);
        doc["holds"] = holds;
        return ok;
    });
}

int cmd_verify_cline(const Options& opt, Json& doc) {
    auto in = load(opt, 3);
    return with_ring(in.ring, [&](auto tag) {
        using R = decltype(tag);
        auto m = matrices<R>(in);
        const auto rep = cline_verify(m[0], m[1], m[2]);
        doc = result("verify-cline", in.ring);
        doc["identity_holds"] = rep.identity_holds;
        doc["index_ab"] = rep.index_ab;
        doc["index_ca"] = rep.index_ca;
        doc["index_bound_holds"] = rep.index_bound_holds;
        doc["holds"] = rep.holds();
        if (!rep.holds())
            throw Error(Errc::internal_assertion, "Cline identity or index bound fails",
                        triple_json(m[0], m[1], m[2]).dump());
        return ok;
    });
}

Json report_json(const HypothesisReport& rep) {
    Json conds = Json::array();
    for (const auto& [name, holds] : rep.conditions)
        conds.push_back({{"condition", name}, {"holds", holds}});
    return {{"aba_equals_aca", rep.aba_equals_aca},
            {"ab_group_invertible", rep.ab_group_invertible},
            {"ca_group_invertible", rep.ca_group_invertible},
            {"conditions", conds}};
}

int cmd_check(const Options& opt, Json& doc) {
    auto variant = parse_variant(opt.variant);
    if (!variant)
        raise(Errc::parse_error, "unknown variant '" + opt.variant + "'");
    auto in = load(opt, 3);
    return with_ring(in.ring, [&](auto tag) {
        using R = decltype(tag);
        auto m = matrices<R>(in);
        auto outcome = corollary_check(m[0], m[1], m[2], *variant);
        if (auto failed = outcome.report.failed_condition()) {
            Json instance = triple_json(m[0], m[1], m[2]);
            instance["variant"] = variant_name(*variant);
            instance["failed_condition"] = *failed;
            instance["report"] = report_json(outcome.report);
            throw Error(Errc::condition_not_met, "condition " + *failed + " does not hold", instance.dump());
        }
        recheck(Mat<R>(m[0] * m[1]), Mat<R>(m[2] * m[0]), *outcome.witness, triple_json(m[0], m[1], m[2]));
        doc = result("check", in.ring);
        doc["variant"] = variant_name(*variant);
        doc["report"] = report_json(outcome.report);
        doc["witness"] = witness_json(*outcome.witness);
        return ok;
    });
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        raise(Errc::parse_error, "cannot write '" + path.string() + "'");
    out << text;
}

int cmd_gen(const Options& opt, Json& doc) {
    GenConfig cfg;
    if (!opt.ring.empty()) {
        auto kind = parse_ring_tag(opt.ring);
        if (!kind)
            raise(Errc::parse_error, "unknown ring '" + opt.ring + "'");
        cfg.ring = *kind;
    }
    cfg.n = opt.n;
    cfg.seed = opt.seed;
    cfg.entry_bound = opt.entry_bound;
    cfg.degree_bound = opt.degree_bound;
    cfg.core_rank = opt.core_rank;

    Json config = {{"kind", opt.kind},         {"ring", ring_tag(cfg.ring)},
                   {"n", cfg.n},               {"seed", cfg.seed},
                   {"entry_bound", cfg.entry_bound}, {"degree_bound", cfg.degree_bound}};
    return with_ring(cfg.ring, [&](auto tag) {
        using R = decltype(tag);
        std::vector<std::pair<std::string, Mat<R>>> out;
        std::size_t retries = 0;
        auto triple = [&](Triple<R> t) {
            retries = t.retries;
            out = {{"A", t.a}, {"B", t.b}, {"C", t.c}};
        };
        if (opt.kind == "group") {
            config["core_rank"] = cfg.core_rank;
            out = {{"X", gen_group_invertible<R>(cfg)}};
        } else if (opt.kind == "mixed") {
            SplitMix64 rng(cfg.seed);
            out = {{"X", gen_mixed_square<R>(rng, cfg)}};
        } else if (opt.kind == "flanders") {
            config["c_equals_b"] = opt.c_equals_b;
            triple(gen_flanders_triple<R>(cfg, opt.c_equals_b));
        } else if (opt.kind == "drazin") {
            config["chain"] = opt.chain;
            config["c_equals_b"] = opt.c_equals_b;
            triple(gen_drazin_triple<R>(cfg, opt.chain, opt.c_equals_b));
        } else if (opt.kind == "corollary") {
            auto variant = parse_variant(opt.variant);
            if (!variant)
                raise(Errc::parse_error, "unknown variant '" + opt.variant + "'");
            config["variant"] = opt.variant;
            config["holds"] = !opt.fails;
            triple(gen_corollary_triple<R>(cfg, *variant, !opt.fails));
        } else {
            raise(Errc::parse_error, "unknown generator kind '" + opt.kind + "'");
        }

        doc = result("gen", cfg.ring);
        doc["config"] = config;
        doc["retries"] = retries;
        Json mats;
        for (const auto& [name, m] : out)
            mats[name] = matrix_to_json(m);
        doc["matrices"] = mats;
        if (!opt.out_dir.empty()) {
            std::filesystem::create_directories(opt.out_dir);
            Json files = Json::array();
            for (const auto& [name, m] : out) {
                auto path = std::filesystem::path(opt.out_dir) / (name + ".json");
                write_text(path, format_matrix_file(m));
                files.push_back(path.string());
            }
            doc["files"] = files;
        }
        return ok;
    });
}

int cmd_selftest(const Options& opt, Json& doc, std::ostream& err) {
    selftest::Options so;
    if (opt.profile == "quick")
        so.profile = selftest::Profile::quick;
    else if (opt.profile == "full")
        so.profile = selftest::Profile::full;
    else
        raise(Errc::parse_error, "unknown profile '" + opt.profile + "'");
    so.seed = opt.seed;
    auto results = selftest::run_all(so, &err);
    doc = selftest::summary(so, results);
    return selftest::all_passed(results) ? ok : selftest_failed;
}

bool flat(const Json& j) {
    if (!j.is_array())
        return j.is_primitive();
    for (const auto& e : j)
        if (!e.is_primitive() && !(e.is_array() && std::all_of(e.begin(), e.end(), [](const Json& x) { return x.is_primitive(); })))
            return false;
    return true;
}

// JSON with two-space indentation, keeping matrix rows on one line.
void pretty(std::ostream& out, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_object() && !j.empty()) {
        out << "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            out << pad << Json(it.key()).dump() << ": ";
            pretty(out, it.value(), indent + 2);
            out << (i + 1 < j.size() ? ",\n" : "\n");
        }
        out << std::string(static_cast<std::size_t>(indent), ' ') << "}";
    } else if (j.is_array() && !j.empty() && !flat(j)) {
        out << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out << pad;
            pretty(out, j[i], indent + 2);
            out << (i + 1 < j.size() ? ",\n" : "\n");
        }
        out << std::string(static_cast<std::size_t>(indent), ' ') << "]";
    } else {
        out << j.dump();
    }
}

void emit(std::ostream& out, const Json& doc) {
    pretty(out, doc, 0);
    out << "\n";
}

Json error_doc(std::string_view kind, const std::string& message, int code, const std::string& instance) {
    Json e;
    e["kind"] = kind;
    e["message"] = message;
    e["exit_code"] = code;
    if (!instance.empty()) {
        try {
            e["instance"] = Json::parse(instance);
        } catch (const nlohmann::json::exception&) {
            e["instance"] = instance;
        }
    }
    return Json{{"error", e}};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact similarity certificates for products of matrices over Bezout domains", "bezout"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--ring", opt.ring, "Ring to read inputs in: int, rat or polyrat")
        ->check(CLI::IsMember({"int", "rat", "polyrat"}));
    app.add_option("--inject-fault", opt.fault)->group("")->check(CLI::IsMember({"witness_assertion", "oracle_corruption"}));

    auto files = [&](CLI::App* sub, const char* what) {
        sub->add_option("files", opt.files, what)->required();
        return sub;
    };
    auto* rank_cmd = files(app.add_subcommand("rank", "Rank of X (Smith and both Hermite forms)"), "X");
    auto* hnf_cmd = files(app.add_subcommand("hnf", "Column Hermite form H = X T"), "X");
    auto* smith_cmd = files(app.add_subcommand("smith", "Smith form X = U S V"), "X");
    auto* ginv_cmd = files(app.add_subcommand("ginv", "Group inverse over the ring"), "X");
    auto* drazin_cmd = files(app.add_subcommand("drazin", "Drazin inverse and index"), "X");
    auto* witness_cmd = files(app.add_subcommand("witness", "W with AB = W (CA) W^-1"), "A B C");
    auto* power_cmd = files(app.add_subcommand("witness-power", "W with (AB)^s = W (CA)^s W^-1"), "A B C");
    power_cmd->add_option("--s", opt.s, "Exponent s")->required();
    auto* verify_cmd = files(app.add_subcommand("verify", "Check a supplied witness W"), "A B C W");
    verify_cmd->add_option("--mode", opt.mode)->check(CLI::IsMember({"product", "ginv", "projector", "core"}));
    auto* cline_cmd = files(app.add_subcommand("verify-cline", "(CA)^D = C [(AB)^D]^2 A and the index bound"), "A B C");
    auto* check_cmd = files(app.add_subcommand("check", "Column-module conditions of a corollary"), "A B C");
    check_cmd->add_option("--variant", opt.variant)->check(CLI::IsMember({"cor22", "cor23", "thm22", "cor24"}));

    auto* gen_cmd = app.add_subcommand("gen", "Generate a reproducible instance bundle");
    gen_cmd->add_option("--kind", opt.kind)->check(CLI::IsMember({"flanders", "drazin", "corollary", "group", "mixed"}));
    gen_cmd->add_option("--seed", opt.seed);
    gen_cmd->add_option("--n", opt.n)->check(CLI::Range(0, 64));
    gen_cmd->add_option("--entry-bound", opt.entry_bound)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--degree-bound", opt.degree_bound)->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--core-rank", opt.core_rank);
    gen_cmd->add_option("--chain", opt.chain);
    gen_cmd->add_flag("--c-equals-b", opt.c_equals_b);
    gen_cmd->add_option("--variant", opt.variant)->check(CLI::IsMember({"cor22", "cor23", "thm22", "cor24"}));
    gen_cmd->add_flag("--fails", opt.fails, "Engineer a failing corollary condition");
    gen_cmd->add_option("--out-dir", opt.out_dir, "Also write one matrix file per matrix");

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest_cmd->add_option("--profile", opt.profile)->check(CLI::IsMember({"quick", "full"}));
    selftest_cmd->add_option("--seed", opt.seed);

    std::vector<std::string> argv_store{"bezout"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store)
        argv.push_back(a.c_str());

    Json doc;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "bezout: " << e.what() << "\n";
        emit(out, error_doc("UsageError", e.what(), bad_input, ""));
        return bad_input;
    }

    std::optional<fault::ScopedFault> injected;
    if (opt.fault == "witness_assertion")
        injected.emplace(fault::Fault::witness_assertion);
    else if (opt.fault == "oracle_corruption")
        injected.emplace(fault::Fault::oracle_corruption);

    int code = ok;
    try {
        if (rank_cmd->parsed())
            code = cmd_rank(opt, doc);
        else if (hnf_cmd->parsed())
            code = cmd_hnf(opt, doc);
        else if (smith_cmd->parsed())
            code = cmd_smith(opt, doc);
        else if (ginv_cmd->parsed())
            code = cmd_ginv(opt, doc);
        else if (drazin_cmd->parsed())
            code = cmd_drazin(opt, doc);
        else if (witness_cmd->parsed())
            code = cmd_witness(opt, doc);
        else if (power_cmd->parsed())
            code = cmd_witness_power(opt, doc);
        else if (verify_cmd->parsed())
            code = cmd_verify(opt, doc);
        else if (cline_cmd->parsed())
            code = cmd_verify_cline(opt, doc);
        else if (check_cmd->parsed())
            code = cmd_check(opt, doc);
        else if (gen_cmd->parsed())
            code = cmd_gen(opt, doc);
        else if (selftest_cmd->parsed())
            code = cmd_selftest(opt, doc, err);
    } catch (const Error& e) {
        code = exit_code(e.code());
        err << "bezout: " << errc_name(e.code()) << ": " << e.what() << "\n";
        emit(out, error_doc(errc_name(e.code()), e.what(), code, e.instance()));
        return code;
    } catch (const std::exception& e) {
        err << "bezout: " << e.what() << "\n";
        emit(out, error_doc("InternalAssertion", e.what(), internal, ""));
        return internal;
    }
    emit(out, doc);
    return code;
}

} // namespace bezout::cli
