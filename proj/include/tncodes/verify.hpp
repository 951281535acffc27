#pragma once

// Verification suites: each compares an implemented result against an
// independent route (direct summation, exhaustive enumeration, or a literal
// published value) and reports every comparison.

#include <cstdint>
#include <string>
#include <vector>

namespace tncodes {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;  // what differed, empty on success
};

struct SuiteReport {
    std::string name;
    std::vector<CheckResult> checks;
    double seconds = 0;

    bool ok() const;
    std::size_t passed() const;
};

/// Published parameters and enumerators, by brute force and by closed form.
SuiteReport verify_examples();
/// Closed forms against brute force and direct sums over every tower with
/// q^k <= max_size and every prime p, p^2 <= max_size; also distribution
/// invariance in a != 0.
SuiteReport verify_grid(std::uint64_t max_size, unsigned workers);
/// Character orthogonality, Gauss-sum identities, semi-primitive values,
/// lifting, and the auxiliary character-sum identities.
SuiteReport verify_identities();
/// Value distribution of Lambda for f = 2.
SuiteReport verify_lambda_f2();
/// Griesmer, Singleton, and closed lower bounds on d.
SuiteReport verify_bounds(std::uint64_t max_size);
/// Binary f = 3 family: closed form, Walsh spectrum, brute force; s_m recurrence.
SuiteReport verify_binary_f3();
/// Exact w_min / w_max ratio tests.
SuiteReport verify_secret_sharing();
/// `code` output does not depend on the worker count.
SuiteReport verify_determinism();

}  // namespace tncodes
