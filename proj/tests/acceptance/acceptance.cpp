// One PASS/FAIL line per acceptance criterion, full profile.
#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "selftest.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria 1-8"};
    int only = 0;
    std::uint64_t seed = 1;
    bool verbose = false;
    app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 8));
    app.add_option("--seed", seed, "Base seed");
    app.add_flag("--verbose", verbose, "Print the details document of every criterion");
    CLI11_PARSE(app, argc, argv);

    bezout::selftest::Options opt;
    opt.profile = bezout::selftest::Profile::full;
    opt.seed = seed;

    bool all = true;
    for (int id = 1; id <= bezout::selftest::criterion_count; ++id) {
        if (only != 0 && id != only)
            continue;
        std::ostringstream log;
        const auto r = bezout::selftest::run_criterion(id, opt, &log);
        all = all && r.pass;
        std::cout << "criterion " << id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  ["
                  << std::fixed << std::setprecision(3) << r.seconds << " s";
        if (r.budget_seconds > 0)
            std::cout << ", limit " << r.budget_seconds << " s";
        std::cout << "]\n";
        if (!r.pass || verbose)
            std::cout << "  details: " << r.details.dump() << "\n";
    }
    return all ? 0 : 1;
}
