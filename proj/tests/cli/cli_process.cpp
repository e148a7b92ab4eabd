// Runs the installed-style binary as a child process and checks exit codes
// and output documents.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct Proc {
    int code = -1;
    std::string out;
};

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s)
        q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

Proc sh(const std::string& args) {
    const std::string cmd = quote(BEZOUT_CLI_PATH) + " " + args + " 2>/dev/null";
    Proc p;
    FILE* f = ::popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), f)) > 0)
        p.out.append(buf.data(), got);
    const int status = ::pclose(f);
    p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return p;
}

struct Dir {
    fs::path path = fs::temp_directory_path() / ("bezout-proc-" + std::to_string(::getpid()));
    Dir() { fs::create_directories(path); }
    ~Dir() { fs::remove_all(path); }
    std::string put(const std::string& name, const std::string& text) {
        std::ofstream(path / name) << text;
        return quote((path / name).string());
    }
};

std::string int_matrix(const char* rows, int n) {
    return std::string(R"({"ring":"int","rows":)") + std::to_string(n) + R"(,"cols":)" + std::to_string(n) +
           R"(,"entries":)" + rows + "}";
}

} // namespace

TEST_CASE("documented examples through the binary") {
    Dir d;
    const auto a = d.put("a.json", int_matrix(R"([["0","1"],["0","0"]])", 2));
    const auto b = d.put("b.json", int_matrix(R"([["0","0"],["1","0"]])", 2));
    auto w = sh("witness " + a + " " + b + " " + b);
    CHECK(w.code == 0);
    const auto doc = nlohmann::json::parse(w.out);
    CHECK(doc["witness"]["w"]["entries"] == nlohmann::json::parse(R"([["0","1"],["1","0"]])"));

    const auto pa = d.put("pa.json", int_matrix(R"([["1","1"],["0","-1"]])", 2));
    const auto pb = d.put("pb.json", int_matrix(R"([["1","1"],["0","0"]])", 2));
    const auto pc = d.put("pc.json", int_matrix(R"([["1","-1"],["0","0"]])", 2));
    const auto pp = d.put("pp.json", int_matrix(R"([["1","1"],["0","1"]])", 2));
    auto v = sh("verify --mode product " + pa + " " + pb + " " + pc + " " + pp);
    CHECK(v.code == 0);
    CHECK(nlohmann::json::parse(v.out)["holds"] == true);
    CHECK(sh("witness " + pa + " " + pb + " " + pc).code == 2);

    CHECK(sh("ginv " + d.put("x.json", int_matrix(R"([["2","0"],["0","0"]])", 2))).code == 3);
    CHECK(sh("ginv " + d.put("bad.json", "[1,2")).code == 4);
    CHECK(sh("--inject-fault witness_assertion witness " + a + " " + b + " " + b).code == 5);
    CHECK(sh("--help").code == 0);
}

TEST_CASE("quick selftest is deterministic") {
    auto first = sh("selftest --profile quick --seed 3");
    auto second = sh("selftest --profile quick --seed 3");
    CHECK(first.out == second.out);
    CHECK(first.code == second.code);
    CHECK_FALSE(first.out.empty());
    const auto doc = nlohmann::json::parse(first.out);
    CHECK(doc.contains("criteria"));
}

TEST_CASE("corrupted oracle makes the selftest fail and name the instance") {
    auto p = sh("--inject-fault oracle_corruption selftest --profile full");
    CHECK(p.code != 0);
    const auto doc = nlohmann::json::parse(p.out);
    bool named = false;
    for (const auto& c : doc["criteria"])
        if (c["criterion"] == 5) {
            CHECK(c["pass"] == false);
            named = c["details"]["int"]["first_failure"].contains("x") &&
                    c["details"]["int"]["first_failure"].contains("seed");
        }
    CHECK(named);
}
