#pragma once

// Records and subcommands behind the command-line tool. Every command writes
// data to `out`, diagnostics to `err`, and returns the process exit code.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tncodes/theory.hpp"

namespace tncodes {

enum class OutputFormat { json, csv, text };

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 12;

struct RunConfig {
    std::string subcommand;
    std::uint32_t p = 2;
    std::uint32_t e = 1;
    std::uint32_t f = 1;
    std::uint32_t k = 1;
    std::optional<std::uint32_t> m;  // field degree for `field` and `gauss`; defaults to e * k
    std::uint64_t a = 0;
    bool punctured = false;
    std::optional<std::uint64_t> budget;
    unsigned workers = 1;
    std::optional<OutputFormat> format;  // per-command default when absent
    std::uint64_t j = 1;       // character index for `gauss`
    std::string suite;         // examples | lemmas | grid
    std::string filter;        // search row filter
    std::uint32_t max_p = 0;   // search: largest prime, 0 for every prime the budget allows
};

/// p prime, e, f, k positive, f | k. Throws ParameterError.
void validate_tower_args(const RunConfig& cfg);

struct CodeRecord {
    TowerSpec tower;
    std::uint64_t a_label = 0;
    bool punctured = false;
    WeightDistribution dist;
    TheoryReport theory;

    /// Present iff a closed form applied: whether it equals `dist`.
    std::optional<bool> theory_match() const;
};

CodeRecord make_code_record(const TowerContext& ctx, std::uint64_t a_label, bool punctured, unsigned workers);
CodeRecord make_code_record(const TowerSpec& T, std::uint64_t a_label, bool punctured, std::uint64_t budget,
                            unsigned workers);

nlohmann::ordered_json to_json(const CodeRecord& r);
std::string to_text(const CodeRecord& r);
std::string csv_header();
std::string csv_row(const CodeRecord& r);

/// Towers with k > f >= 1, f | k and q^k <= max_size, in (p, e, f, k) order.
std::vector<TowerSpec> admissible_towers(std::uint64_t max_size, const std::vector<std::uint32_t>& primes);

int cmd_field(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_code(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gauss(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace tncodes
