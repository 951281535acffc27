#include "tncodes/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <thread>

#include "tncodes/verify.hpp"

namespace tncodes {

namespace {

using nlohmann::ordered_json;

OutputFormat format_or(const RunConfig& cfg, OutputFormat fallback)
{
    return cfg.format.value_or(fallback);
}

std::string join(const std::vector<std::uint64_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
    return s;
}

ordered_json weights_json(const WeightDistribution& d)
{
    ordered_json arr = ordered_json::array();
    for (const auto& [w, c] : d.counts)
        if (w > 0) arr.push_back({{"w", w}, {"count", c}});
    return arr;
}

std::string rational(const mpq_class& q)
{
    return q.get_str();
}

}  // namespace

void validate_tower_args(const RunConfig& cfg)
{
    if (!is_prime(cfg.p)) throw ParameterError("p = " + std::to_string(cfg.p) + " is not prime");
    if (cfg.e == 0 || cfg.f == 0 || cfg.k == 0) throw ParameterError("e, f, k must be positive");
    if (cfg.k % cfg.f) throw ParameterError("f = " + std::to_string(cfg.f) + " does not divide k = " + std::to_string(cfg.k));
    if (cfg.workers == 0) throw ParameterError("workers must be positive");
}

std::optional<bool> CodeRecord::theory_match() const
{
    if (!theory.predicted) return std::nullopt;
    return *theory.predicted == dist;
}

CodeRecord make_code_record(const TowerContext& ctx, std::uint64_t a_label, bool punctured, unsigned workers)
{
    CodeRecord r;
    r.tower = ctx.tower();
    r.a_label = a_label;
    r.punctured = punctured;
    DefiningSet D = build_defining_set(ctx, a_label);
    if (punctured) D = puncture(ctx, D);
    r.dist = brute_weight_distribution(ctx, D, workers);
    r.theory = analyze(ctx, D, r.dist);
    return r;
}

CodeRecord make_code_record(const TowerSpec& T, std::uint64_t a_label, bool punctured, std::uint64_t budget,
                            unsigned workers)
{
    const TowerContext ctx(T, budget);
    return make_code_record(ctx, a_label, punctured, workers);
}

nlohmann::ordered_json to_json(const CodeRecord& r)
{
    const TowerSpec& T = r.tower;
    const TheoryReport& t = r.theory;
    ordered_json j;
    j["params"] = {{"p", T.p}, {"e", T.e}, {"f", T.f}, {"k", T.k}, {"q", T.q()}, {"a", r.a_label}, {"punctured", r.punctured}};
    j["n"] = r.dist.n;
    j["dim"] = r.dist.dim;
    j["dmin"] = r.dist.dmin();
    j["weights"] = weights_json(r.dist);
    j["enumerator"] = enumerator(r.dist).to_string();

    ordered_json th;
    th["applicable"] = t.applicable.ok;
    th["reason"] = t.applicable.reason;
    th["route"] = t.route.empty() ? ordered_json(nullptr) : ordered_json(t.route);
    th["predicted"] = t.predicted ? weights_json(*t.predicted) : ordered_json(nullptr);
    const auto match = r.theory_match();
    th["match"] = match ? ordered_json(*match) : ordered_json(nullptr);
    th["distance_lower_bound"] = t.distance_lower_bound ? ordered_json(t.distance_lower_bound->get_si()) : ordered_json(nullptr);
    th["griesmer_verdict"] = to_string(t.griesmer_verdict);
    th["griesmer_met"] = t.griesmer_met;
    th["griesmer_length"] = griesmer_min_length(T.q(), r.dist.dim, r.dist.dmin()).get_si();
    th["singleton_slack"] = t.singleton_slack;
    th["ss_ok"] = t.secret_sharing.ok;
    th["ss_ratio"] = r.dist.dmin() ? ordered_json(rational(t.secret_sharing.ratio)) : ordered_json(nullptr);
    th["ss_threshold"] = r.dist.dmin() ? ordered_json(rational(t.secret_sharing.threshold)) : ordered_json(nullptr);
    th["literature"] = t.literature_label;
    j["theory"] = th;
    return j;
}

std::string to_text(const CodeRecord& r)
{
    const TowerSpec& T = r.tower;
    const TheoryReport& t = r.theory;
    std::ostringstream os;
    os << "tower " << T.to_string() << ", q = " << T.q() << ", a = " << r.a_label << (r.punctured ? ", punctured" : "")
       << "\n";
    os << "code " << params_string(r.dist) << "  " << enumerator(r.dist).to_string() << "\n";
    if (t.applicable.ok) {
        os << "closed form: " << t.route << " (" << t.applicable.reason << "), "
           << (r.theory_match().value_or(false) ? "matches" : "DOES NOT match") << " brute force\n";
    } else {
        os << "closed form: inapplicable, " << t.applicable.reason << "\n";
    }
    if (t.distance_lower_bound) os << "lower bound on d: " << t.distance_lower_bound->get_str() << "\n";
    os << "Griesmer: " << to_string(t.griesmer_verdict) << (t.griesmer_met ? ", met with equality" : "")
       << "; Singleton slack " << t.singleton_slack << "\n";
    if (r.dist.dmin())
        os << "w_min/w_max = " << rational(t.secret_sharing.ratio) << (t.secret_sharing.ok ? " > " : " <= ")
           << rational(t.secret_sharing.threshold) << "\n";
    if (!t.literature_label.empty()) os << "literature: " << t.literature_label << "\n";
    return os.str();
}

std::string csv_header()
{
    return "p,e,f,k,a,n,dim,dmin,weights,freqs,griesmer_met,singleton_slack,ss_ok,theory_match";
}

std::string csv_row(const CodeRecord& r)
{
    std::vector<std::uint64_t> ws, cs;
    for (const auto& [w, c] : r.dist.counts)
        if (w > 0) {
            ws.push_back(w);
            cs.push_back(c);
        }
    const auto match = r.theory_match();
    std::ostringstream os;
    os << r.tower.p << ',' << r.tower.e << ',' << r.tower.f << ',' << r.tower.k << ',' << r.a_label << ',' << r.dist.n << ','
       << r.dist.dim << ',' << r.dist.dmin() << ',' << join(ws) << ',' << join(cs) << ','
       << (r.theory.griesmer_met ? "true" : "false") << ',' << r.theory.singleton_slack << ','
       << (r.theory.secret_sharing.ok ? "true" : "false") << ','
       << (match ? (*match ? "true" : "false") : "inapplicable");
    return os.str();
}

std::vector<TowerSpec> admissible_towers(std::uint64_t max_size, const std::vector<std::uint32_t>& primes)
{
    std::vector<TowerSpec> out;
    for (std::uint32_t p : primes)
        for (std::uint32_t e = 1;; ++e) {
            const auto q = checked_pow(p, e);
            if (!q || *q * *q > max_size) break;
            for (std::uint32_t f = 1;; ++f) {
                const auto qf2 = checked_pow(*q, 2 * f);
                if (!qf2 || *qf2 > max_size) break;
                for (std::uint32_t k = 2 * f;; k += f) {
                    const auto qk = checked_pow(*q, k);
                    if (!qk || *qk > max_size) break;
                    out.push_back({p, e, f, k});
                }
            }
        }
    return out;
}

// ---------------------------------------------------------------------------

int cmd_field(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    validate_tower_args(cfg);
    const std::uint32_t m = cfg.m.value_or(cfg.e * cfg.k);
    const FieldTable F(cfg.p, m, cfg.budget.value_or(kDefaultFieldBudget));
    // alpha has order q^m - 1 by construction; confirm on the table.
    std::uint64_t alpha_order = 1;
    for (FieldElement x = F.alpha(); x != F.one(); x = F.mul(x, F.alpha())) ++alpha_order;

    ordered_json j;
    j["p"] = cfg.p;
    j["m"] = m;
    j["size"] = F.size();
    j["modulus"] = poly::to_string(F.modulus());
    j["alpha_order"] = alpha_order;
    ordered_json subs = ordered_json::array();
    for (std::uint32_t d = 1; d <= m; ++d) {
        if (m % d) continue;
        const std::uint64_t size = *checked_pow(cfg.p, d);
        ordered_json contains = ordered_json::array();
        for (std::uint32_t c = 1; c < d; ++c)
            if (d % c == 0) contains.push_back(c);
        subs.push_back({{"degree", d},
                        {"size", size},
                        {"generator", "alpha^" + std::to_string(F.order() / (size - 1) % F.order())},
                        {"contains_degrees", contains}});
    }
    j["subfields"] = subs;

    if (format_or(cfg, OutputFormat::text) == OutputFormat::json) {
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "F_" << F.size() << " = F_" << cfg.p << "[x]/(" << j["modulus"].get<std::string>() << ")\n";
    out << "alpha = x, multiplicative order " << alpha_order << "\n";
    out << "subfields:\n";
    for (const auto& s : subs) {
        out << "  F_" << s["size"].get<std::uint64_t>() << " (degree " << s["degree"].get<std::uint32_t>()
            << ") generated by " << s["generator"].get<std::string>();
        if (!s["contains_degrees"].empty()) {
            out << ", contains degrees";
            for (const auto& c : s["contains_degrees"]) out << " " << c.get<std::uint32_t>();
        }
        out << "\n";
    }
    return 0;
}

int cmd_code(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    validate_tower_args(cfg);
    const TowerSpec T{cfg.p, cfg.e, cfg.f, cfg.k};
    const CodeRecord r = make_code_record(T, cfg.a, cfg.punctured, cfg.budget.value_or(kDefaultFieldBudget), cfg.workers);
    switch (format_or(cfg, OutputFormat::json)) {
    case OutputFormat::json: out << to_json(r).dump(2) << "\n"; break;
    case OutputFormat::csv: out << csv_header() << "\n" << csv_row(r) << "\n"; break;
    case OutputFormat::text: out << to_text(r); break;
    }
    return 0;
}

int cmd_gauss(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    validate_tower_args(cfg);
    const std::uint32_t m = cfg.m.value_or(cfg.e * cfg.k);
    const FieldTable F(cfg.p, m, cfg.budget.value_or(kDefaultFieldBudget));
    if (cfg.j >= F.order()) throw ParameterError("character index j must lie in [0, " + std::to_string(F.order()) + ")");
    const CycloInt G = gauss_sum_direct(F, cfg.j);
    const std::uint64_t ord = F.order() / gcd_u64(cfg.j, F.order());
    const mpz_class r = static_cast<unsigned long>(F.size());
    const mpz_class norm = (G * G.conj()).as_rational_integer();
    const bool ok = ord == 1 ? G.try_rational() == mpz_class(-1) : norm == r;

    ordered_json j;
    j["p"] = cfg.p;
    j["m"] = m;
    j["r"] = F.size();
    j["j"] = cfg.j;
    j["character_order"] = ord;
    j["ring"] = G.order();
    ordered_json coeffs = ordered_json::array();
    const CycloInt c = G.canonical();
    std::size_t last = 0;
    for (std::size_t i = 0; i < c.coeffs().size(); ++i)
        if (c.coeff(static_cast<std::uint32_t>(i)) != 0) last = i + 1;
    for (std::size_t i = 0; i < last; ++i) coeffs.push_back(c.coeff(static_cast<std::uint32_t>(i)).get_si());
    j["coefficients"] = coeffs;
    const auto value = G.try_rational();
    j["value"] = value ? ordered_json(value->get_si()) : ordered_json(nullptr);
    j["norm"] = norm.get_si();
    j["norm_ok"] = ok;

    if (format_or(cfg, OutputFormat::text) == OutputFormat::json) {
        out << j.dump(2) << "\n";
    } else {
        out << "G(psi_" << cfg.j << ", chi) over F_" << F.size() << ", character order " << ord << "\n";
        out << "in Z[zeta_" << G.order() << "]: " << G.to_string() << "\n";
        if (value) out << "value " << value->get_str() << "\n";
        out << "G * conj(G) = " << norm.get_str() << (ord == 1 ? "" : " (expected " + r.get_str() + ")") << "\n";
    }
    if (!ok) err << "Gauss sum modulus check failed\n";
    return ok ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::vector<SuiteReport> reports;
    if (cfg.suite == "examples") {
        reports.push_back(verify_examples());
    } else if (cfg.suite == "lemmas") {
        reports.push_back(verify_identities());
        reports.push_back(verify_lambda_f2());
        reports.push_back(verify_binary_f3());
    } else if (cfg.suite == "grid") {
        const std::uint64_t size = cfg.budget.value_or(std::uint64_t{1} << 13);
        reports.push_back(verify_grid(size, cfg.workers));
        reports.push_back(verify_bounds(size));
    } else {
        throw ParameterError("unknown suite '" + cfg.suite + "' (expected examples, lemmas or grid)");
    }

    bool all = true;
    if (format_or(cfg, OutputFormat::text) == OutputFormat::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& rep : reports) {
            ordered_json checks = ordered_json::array();
            for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
            arr.push_back({{"suite", rep.name}, {"passed", rep.passed()}, {"total", rep.checks.size()}, {"checks", checks}});
            all = all && rep.ok();
        }
        out << arr.dump(2) << "\n";
    } else {
        for (const auto& rep : reports) {
            for (const auto& c : rep.checks) {
                out << (c.ok ? "PASS " : "FAIL ") << c.name;
                if (!c.ok) out << ": " << c.detail;
                out << "\n";
            }
            out << rep.name << ": " << rep.passed() << "/" << rep.checks.size() << " passed\n";
            all = all && rep.ok();
        }
    }
    if (!all) err << "verification failed\n";
    return all ? 0 : 1;
}

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    if (cfg.workers == 0) throw ParameterError("workers must be positive");
    static const std::vector<std::string> filters{"", "griesmer-met", "two-weight", "inapplicable", "ss-ok"};
    if (std::find(filters.begin(), filters.end(), cfg.filter) == filters.end())
        throw ParameterError("unknown filter '" + cfg.filter + "'");
    const std::uint64_t budget = cfg.budget.value_or(kDefaultSearchBudget);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t p = 2; std::uint64_t{p} * p <= budget; ++p)
        if (is_prime(p) && (cfg.max_p == 0 || p <= cfg.max_p)) primes.push_back(p);
    const std::vector<TowerSpec> towers = admissible_towers(budget, primes);

    std::vector<std::vector<CodeRecord>> rows(towers.size());
    auto run = [&](unsigned id) {
        for (std::size_t i = id; i < towers.size(); i += cfg.workers) {
            const TowerContext ctx(towers[i], budget);
            for (std::uint64_t a = towers[i].f == 1 ? 1 : 0; a < ctx.q(); ++a)
                rows[i].push_back(make_code_record(ctx, a, false, 1));
        }
    };
    if (cfg.workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < cfg.workers; ++id) pool.emplace_back(run, id);
        for (auto& th : pool) th.join();
    }

    auto keep = [&](const CodeRecord& r) {
        if (cfg.filter == "griesmer-met") return r.theory.griesmer_met;
        if (cfg.filter == "two-weight") return r.dist.nonzero_weights().size() == 2;
        if (cfg.filter == "inapplicable") return !r.theory.applicable.ok;
        if (cfg.filter == "ss-ok") return r.theory.secret_sharing.ok;
        return true;
    };
    const OutputFormat fmt = format_or(cfg, OutputFormat::csv);
    ordered_json arr = ordered_json::array();
    if (fmt == OutputFormat::csv) out << csv_header() << "\n";
    for (const auto& group : rows)
        for (const auto& r : group) {
            if (!keep(r)) continue;
            if (fmt == OutputFormat::csv) out << csv_row(r) << "\n";
            else if (fmt == OutputFormat::text) out << to_text(r) << "\n";
            else arr.push_back(to_json(r));
        }
    if (fmt == OutputFormat::json) out << arr.dump(2) << "\n";
    return 0;
}

}  // namespace tncodes
