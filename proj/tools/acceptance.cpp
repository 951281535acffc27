// Runs the acceptance criteria in order and prints one PASS/FAIL line per
// criterion on stdout; failing checks are listed on stderr.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "tncodes/verify.hpp"

namespace {

using tncodes::SuiteReport;

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;  // 0: no limit
    std::function<std::vector<SuiteReport>()> run;
};

}  // namespace

int main()
{
    constexpr std::uint64_t kGrid = std::uint64_t{1} << 13;
    const std::vector<Criterion> criteria{
        {1, "published examples, brute force and closed form", 10, [] { return std::vector{tncodes::verify_examples()}; }},
        {2, "closed forms equal brute force on the q^k <= 2^13 grid", 300,
         [&] { return std::vector{tncodes::verify_grid(kGrid, 1)}; }},
        {3, "character and Gauss-sum identities", 60, [] { return std::vector{tncodes::verify_identities()}; }},
        {4, "Lambda value frequencies for f = 2", 0, [] { return std::vector{tncodes::verify_lambda_f2()}; }},
        {5, "Griesmer, Singleton and distance bounds", 0, [&] { return std::vector{tncodes::verify_bounds(kGrid)}; }},
        {6, "binary f = 3 family and s_m", 0, [] { return std::vector{tncodes::verify_binary_f3()}; }},
        {7, "secret-sharing ratio verdicts", 0, [] { return std::vector{tncodes::verify_secret_sharing()}; }},
        {8, "output independent of worker count", 0, [] { return std::vector{tncodes::verify_determinism()}; }},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        std::vector<SuiteReport> reports;
        std::string error;
        try {
            reports = c.run();
        } catch (const std::exception& ex) {
            error = ex.what();
        }
        double seconds = 0;
        std::size_t passed = 0, total = 0;
        bool ok = error.empty();
        for (const SuiteReport& r : reports) {
            seconds += r.seconds;
            passed += r.passed();
            total += r.checks.size();
            ok = ok && r.ok();
            for (const auto& chk : r.checks)
                if (!chk.ok) std::cerr << "criterion " << c.id << ": FAIL " << chk.name << ": " << chk.detail << "\n";
        }
        const bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
        if (!in_time) std::cerr << "criterion " << c.id << ": exceeded " << c.limit_seconds << " s\n";
        if (!error.empty()) std::cerr << "criterion " << c.id << ": exception: " << error << "\n";
        ok = ok && in_time;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1f s", seconds);
        std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << " (" << passed << "/"
                  << total << " checks, " << timing << ")" << std::endl;
        failed += ok ? 0 : 1;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
