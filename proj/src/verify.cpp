#include "tncodes/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

#include "tncodes/errors.hpp"
#include "tncodes/report.hpp"
#include "tncodes/theory.hpp"

namespace tncodes {

bool SuiteReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

std::size_t SuiteReport::passed() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; }));
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string describe(const WeightDistribution& d)
{
    return params_string(d) + " " + enumerator(d).to_string();
}

CheckResult compare(std::string name, const WeightDistribution& got, const WeightDistribution& want)
{
    CheckResult c{std::move(name), got == want, {}};
    if (!c.ok) c.detail = "got " + describe(got) + ", expected " + describe(want);
    return c;
}

CheckResult expect(std::string name, bool ok, std::string detail = {})
{
    return {std::move(name), ok, ok ? std::string{} : std::move(detail)};
}

/// Runs `body` on every check name and turns an exception into a failed check.
CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body)
{
    try {
        return body();
    } catch (const std::exception& ex) {
        return {name, false, std::string("exception: ") + ex.what()};
    }
}

WeightDistribution brute(const TowerContext& ctx, std::uint64_t a, bool punctured = false)
{
    DefiningSet D = build_defining_set(ctx, a);
    if (punctured) D = puncture(ctx, D);
    return brute_weight_distribution(ctx, D);
}

WeightDistribution literal_dist(std::uint64_t n, std::uint32_t dim, std::map<std::uint64_t, std::uint64_t> nonzero)
{
    WeightDistribution d;
    d.n = n;
    d.dim = dim;
    d.counts = std::move(nonzero);
    d.counts[0] = 1;
    return d;
}

std::string tower_label(const TowerSpec& T)
{
    std::ostringstream os;
    os << "(p,e,f,k)=(" << T.p << "," << T.e << "," << T.f << "," << T.k << ")";
    return os.str();
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t bound)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p <= bound; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// (p, m) with p <= max_p and p^m <= max_size, m >= 1.
std::vector<std::pair<std::uint32_t, std::uint32_t>> small_fields(std::uint32_t max_p, std::uint64_t max_size)
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t p : primes_up_to(max_p))
        for (std::uint32_t m = 1;; ++m) {
            const auto r = checked_pow(p, m);
            if (!r || *r > max_size) break;
            out.emplace_back(p, m);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Grid

std::vector<CheckResult> grid_tower(const TowerSpec& T, std::uint64_t budget)
{
    std::vector<CheckResult> out;
    const std::string label = tower_label(T);
    const TowerContext ctx(T, budget);
    const std::uint64_t q = ctx.q();
    const ClosedForms closed(ctx);
    const bool delta_ok = delta_closed_applies(T).ok;
    const bool lambda_ok = lambda_closed_applies(T).ok;

    if (delta_ok) {
        const WeightDistribution b0 = brute(ctx, 0);
        out.push_back(guarded(label + " a=0 Gauss form", [&] { return compare(label + " a=0 Gauss form", closed.distribution_thm1(false), b0); }));
        const WeightDistribution bp = brute(ctx, 0, true);
        out.push_back(guarded(label + " punctured Gauss form", [&] { return compare(label + " punctured Gauss form", closed.distribution_thm1(true), bp); }));
        if (T.f == 2) {
            out.push_back(compare(label + " a=0 f=2 distribution", dist_prop1(q, T.k), b0));
            out.push_back(compare(label + " punctured f=2 distribution", dist_remark2(q, T.k), bp));
        }
        out.push_back(expect(label + " a=0 length", closed_length(T, false) == static_cast<unsigned long>(b0.n),
                             "closed length " + closed_length(T, false).get_str() + " vs " + std::to_string(b0.n)));
    }

    const WeightDistribution b1 = brute(ctx, 1);
    out.push_back(expect(label + " a!=0 length", closed_length(T, true) == static_cast<unsigned long>(b1.n),
                         "closed length " + closed_length(T, true).get_str() + " vs " + std::to_string(b1.n)));
    if (lambda_ok) {
        out.push_back(guarded(label + " a!=0 Gauss form", [&] { return compare(label + " a!=0 Gauss form", closed.distribution_thm2(), b1); }));
        if (T.f <= 2) out.push_back(compare(label + " a!=0 f<=2 distribution", dist_thm2(q, T.f, T.k), b1));
        if (q == 2 && T.f == 3) out.push_back(compare(label + " a!=0 binary f=3 distribution", dist_thm3(T.k), b1));
    }
    {
        CheckResult inv{label + " distribution independent of a!=0", true, {}};
        for (std::uint64_t a = 2; a < q && inv.ok; ++a) {
            const WeightDistribution ba = brute(ctx, a);
            if (!(ba == b1)) {
                inv.ok = false;
                inv.detail = "a=" + std::to_string(a) + " gives " + describe(ba) + ", a=1 gives " + describe(b1);
            }
        }
        out.push_back(inv);
    }

    // Pointwise in b: direct grouped sums against the closed expressions.
    if (delta_ok || lambda_ok) {
        out.push_back(guarded(label + " pointwise sums", [&] {
            const DirectSums direct(ctx);
            CheckResult c{label + " pointwise sums", true, {}};
            std::map<std::uint64_t, std::pair<mpz_class, mpz_class>> by_residue;
            for (std::uint32_t t = 0; t < ctx.order() && c.ok; ++t) {
                const FieldElement b = FieldElement::exp(t);
                const auto g = direct.groups(b);
                const std::uint64_t s = closed.residue(b);
                auto it = by_residue.find(s);
                if (it == by_residue.end()) {
                    const mpz_class d = delta_ok ? closed.delta(b).value : mpz_class(0);
                    const mpz_class l = lambda_ok ? closed.lambda(b).value : mpz_class(0);
                    it = by_residue.emplace(s, std::make_pair(d, l)).first;
                }
                const auto& [cd, cl] = it->second;
                std::ostringstream why;
                if (delta_ok) {
                    const mpz_class dd = direct.delta(g).value;
                    if (dd != cd) why << "Delta(alpha^" << t << ") direct " << dd << " closed " << cd;
                    else if (nb_from_delta(T, cd) != static_cast<unsigned long>(direct.count_nb(g, 0)))
                        why << "N_b(alpha^" << t << ") from Delta " << nb_from_delta(T, cd) << " counted " << direct.count_nb(g, 0);
                }
                if (lambda_ok && why.str().empty()) {
                    const mpz_class dl = direct.lambda(g, 1).value;
                    if (dl != cl) why << "Lambda(alpha^" << t << ") direct " << dl << " closed " << cl;
                    else if (nb_from_lambda(T, cl) != static_cast<unsigned long>(direct.count_nb(g, 1)))
                        why << "N_b(alpha^" << t << ") from Lambda " << nb_from_lambda(T, cl) << " counted " << direct.count_nb(g, 1);
                }
                if (!why.str().empty()) {
                    c.ok = false;
                    c.detail = why.str();
                }
            }
            return c;
        }));
    }
    return out;
}

std::vector<TowerSpec> grid_towers(std::uint64_t max_size)
{
    std::vector<std::uint32_t> primes;
    for (std::uint32_t p = 2; std::uint64_t{p} * p <= max_size; ++p)
        if (is_prime(p)) primes.push_back(p);
    return admissible_towers(max_size, primes);
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteReport verify_examples()
{
    const auto t0 = Clock::now();
    SuiteReport rep{"examples", {}, 0};
    struct Example {
        std::uint64_t q;
        std::uint32_t f, k;
        std::uint64_t a;
        WeightDistribution want;
    };
    // Published parameters and enumerators, copied as printed.
    const std::vector<Example> examples{
        {4, 2, 4, 0, literal_dist(51, 4, {{36, 204}, {48, 51}})},
        {3, 2, 6, 0, literal_dist(182, 6, {{108, 182}, {126, 546}})},
        {2, 2, 4, 1, literal_dist(10, 4, {{4, 5}, {6, 10}})},
        {2, 2, 6, 1, literal_dist(42, 6, {{20, 42}, {36, 21}})},
        {4, 2, 4, 1, literal_dist(68, 4, {{48, 51}, {52, 204}})},
        {2, 3, 6, 1, literal_dist(36, 6, {{16, 27}, {20, 36}})},
    };
    for (const Example& ex : examples) {
        std::uint32_t p = 2, e = 1;
        for (std::uint32_t cand = 2; cand <= ex.q; ++cand)
            if (is_prime(cand)) {
                std::uint64_t v = cand;
                std::uint32_t m = 1;
                while (v < ex.q) v *= cand, ++m;
                if (v == ex.q) {
                    p = cand;
                    e = m;
                    break;
                }
            }
        const TowerSpec T{p, e, ex.f, ex.k};
        const std::string label = "example (q,f,k,a)=(" + std::to_string(ex.q) + "," + std::to_string(ex.f) + "," +
                                  std::to_string(ex.k) + "," + std::to_string(ex.a) + ")";
        const TowerContext ctx(T);
        rep.checks.push_back(compare(label + " brute force", brute(ctx, ex.a), ex.want));
        rep.checks.push_back(guarded(label + " closed form", [&] {
            const ClosedForms closed(ctx);
            const WeightDistribution got = ex.a == 0 ? closed.distribution_thm1(false) : closed.distribution_thm2();
            return compare(label + " closed form", got, ex.want);
        }));
        rep.checks.push_back(guarded(label + " published formula", [&] {
            WeightDistribution got;
            if (ex.a == 0) got = dist_prop1(ex.q, ex.k);
            else if (ex.f <= 2) got = dist_thm2(ex.q, ex.f, ex.k);
            else got = dist_thm3(ex.k);
            return compare(label + " published formula", got, ex.want);
        }));
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

SuiteReport verify_grid(std::uint64_t max_size, unsigned workers)
{
    const auto t0 = Clock::now();
    SuiteReport rep{"grid", {}, 0};
    if (workers == 0) throw ParameterError("workers must be positive");
    const std::vector<TowerSpec> towers = grid_towers(max_size);
    const std::uint64_t budget = std::max(max_size, kDefaultFieldBudget);
    std::vector<std::vector<CheckResult>> results(towers.size());
    auto run = [&](unsigned id) {
        for (std::size_t i = id; i < towers.size(); i += workers) {
            try {
                results[i] = grid_tower(towers[i], budget);
            } catch (const std::exception& ex) {
                results[i] = {{tower_label(towers[i]), false, std::string("exception: ") + ex.what()}};
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < workers; ++id) pool.emplace_back(run, id);
        for (auto& th : pool) th.join();
    }
    for (auto& r : results)
        for (auto& c : r) rep.checks.push_back(std::move(c));
    rep.checks.push_back(expect("grid covers " + std::to_string(towers.size()) + " towers", !towers.empty(), "no towers"));
    rep.seconds = seconds_since(t0);
    return rep;
}

SuiteReport verify_identities()
{
    const auto t0 = Clock::now();
    SuiteReport rep{"identities", {}, 0};

    // Orthogonality of additive and multiplicative characters, evaluated one value at a time.
    for (auto [p, m] : small_fields(13, 1u << 7)) {
        const FieldTable F(p, m);
        const std::string label = "F_" + std::to_string(F.size());
        bool add_ok = true, mult_ok = true;
        for (std::uint32_t i = 1; i < F.size() && add_ok; ++i) {
            CycloInt s(p);
            for (std::uint32_t x = 0; x < F.size(); ++x) s += eval_add_char({&F, m, F.from_coords(i)}, F.from_coords(x));
            add_ok = s.is_zero();
        }
        for (std::uint64_t j = 1; j < F.order() && mult_ok; ++j) {
            CycloInt s(F.order());
            for (std::uint32_t t = 0; t < F.order(); ++t) s += eval_mult_char({&F, m, j}, F.exp(t));
            mult_ok = s.is_zero();
        }
        rep.checks.push_back(expect(label + " additive orthogonality", add_ok, "nonzero sum"));
        rep.checks.push_back(expect(label + " multiplicative orthogonality", mult_ok, "nonzero sum"));
    }

    // Gauss sums: trivial character, modulus, conjugate. One character per
    // Galois orbit of orders: j = (r-1)/d has order d.
    for (auto [p, m] : small_fields(13, 1u << 12)) {
        const FieldTable F(p, m);
        const std::string label = "F_" + std::to_string(F.size());
        const auto g0 = gauss_sum_direct(F, 0).try_rational();
        rep.checks.push_back(expect(label + " G(trivial) = -1", g0 && *g0 == -1, "got " + gauss_sum_direct(F, 0).to_string()));
        bool norm_ok = true, conj_ok = true;
        std::string why;
        const mpz_class r = static_cast<unsigned long>(F.size());
        for (std::uint64_t d : divisors(F.order())) {
            if (d == 1) continue;
            const std::uint64_t j = F.order() / d;
            const CycloInt G = gauss_sum_direct(F, j);
            const CycloInt GG = G * G.conj();
            if (GG.try_rational() != std::optional<mpz_class>(r)) {
                norm_ok = false;
                why = "j=" + std::to_string(j);
            }
            const CycloInt Gbar = gauss_sum_direct(F, F.order() - j);
            const bool minus = p != 2 && j % 2 == 1;  // psi_j(-1)
            if (!(Gbar == (minus ? -G.conj() : G.conj()))) {
                conj_ok = false;
                why = "j=" + std::to_string(j);
            }
            if (!norm_ok || !conj_ok) break;
        }
        rep.checks.push_back(expect(label + " G * conj(G) = r", norm_ok, why));
        rep.checks.push_back(expect(label + " G(conj psi) = psi(-1) conj(G(psi))", conj_ok, why));
    }

    // Semi-primitive values for every (p, N, gamma) with r = p^{2 j gamma} <= 2^12.
    {
        CheckResult c{"semi-primitive Gauss sums, r <= 4096", true, {}};
        std::size_t cases = 0;
        for (std::uint32_t p : primes_up_to(64)) {
            for (std::uint32_t j = 1;; ++j) {
                const auto r1 = checked_pow(p, 2 * j);
                if (!r1 || *r1 > 4096) break;
                for (std::uint64_t N : divisors(*checked_pow(p, j) + 1)) {
                    if (N < 3 || semiprimitive_exponent(p, N) != j) continue;
                    for (std::uint32_t gamma = 1;; ++gamma) {
                        const auto r = checked_pow(p, 2 * j * gamma);
                        if (!r || *r > 4096) break;
                        const FieldTable F(p, 2 * j * gamma);
                        for (std::uint64_t s = 1; s < N && c.ok; ++s) {
                            ++cases;
                            const auto direct = gauss_sum_direct(F, F.order() / N * s).try_rational();
                            const mpz_class want = gauss_sum_semiprimitive(p, N, gamma, s).value();
                            if (direct != std::optional<mpz_class>(want)) {
                                c.ok = false;
                                c.detail = "p=" + std::to_string(p) + " N=" + std::to_string(N) + " gamma=" +
                                           std::to_string(gamma) + " s=" + std::to_string(s) + ": expected " + want.get_str();
                            }
                        }
                    }
                }
            }
        }
        c.name += " (" + std::to_string(cases) + " cases)";
        rep.checks.push_back(c);
    }

    // Lifting: base fields up to 2^8, extension degree t in {2, 3}. Each
    // extension table serves every base it lifts.
    for (std::uint32_t p : primes_up_to(13)) {
        std::map<std::uint32_t, std::vector<std::uint32_t>> bases_of;  // extension degree -> base degrees
        for (std::uint32_t d = 1;; ++d) {
            const auto base = checked_pow(p, d);
            if (!base || *base > 256) break;
            for (std::uint32_t t : {2u, 3u}) bases_of[d * t].push_back(d);
        }
        for (const auto& [m, bases] : bases_of) {
            const auto size = checked_pow(p, m);
            if (!size || *size > (std::uint64_t{1} << 24)) continue;
            const FieldTable E(p, m, std::uint64_t{1} << 24);
            for (std::uint32_t d : bases) {
                const LiftedGaussSums lifted(E, d);
                const SubfieldView base = E.subfield(d);
                CheckResult c{"lift F_" + std::to_string(base.size) + " -> F_" + std::to_string(E.size()), true, {}};
                for (std::uint64_t j = 0; j < lifted.base_group_order() && c.ok; ++j)
                    if (!(lifted(j) == davenport_hasse_lift(gauss_sum_direct(base, j), m / d))) {
                        c.ok = false;
                        c.detail = "j=" + std::to_string(j);
                    }
                rep.checks.push_back(c);
            }
        }
    }

    // Monomial character sums through Gauss sums.
    for (const TowerSpec& T : admissible_towers(1u << 10, primes_up_to(31))) {
        const FieldTable F(T.p, T.e * T.k);
        CheckResult c{"monomial sum " + tower_label(T), true, {}};
        for (std::uint32_t t = 0; t < F.order() && c.ok; t += 1 + F.order() / 64) {
            const FieldElement b = F.exp(t);
            if (!(monomial_char_sum_direct(F, T.e, T.f, b) == monomial_char_sum_gauss(F, T.e, T.f, b))) {
                c.ok = false;
                c.detail = "b=alpha^" + std::to_string(t);
            }
        }
        rep.checks.push_back(c);
    }

    // sum_c chi(a0 c^m + a1) through Gauss sums.
    for (auto [p, m] : small_fields(13, 64)) {
        const FieldTable F(p, m);
        CheckResult c{"power sum F_" + std::to_string(F.size()), true, {}};
        for (std::uint64_t e : divisors(F.order()))
            for (std::uint32_t t0 = 0; t0 < F.order() && c.ok; t0 += 1 + F.order() / 8)
                for (std::uint32_t i1 = 0; i1 < F.size() && c.ok; i1 += 1 + F.size() / 8) {
                    const FieldElement a0 = F.exp(t0), a1 = F.from_coords(i1);
                    if (!(power_char_sum_direct(F, e, a0, a1) == power_char_sum_gauss(F, e, a0, a1))) {
                        c.ok = false;
                        c.detail = "m=" + std::to_string(e) + " a0=alpha^" + std::to_string(t0);
                    }
                }
        rep.checks.push_back(c);
    }

    // Sums of (q+1)-th roots of unity over odd and even exponents.
    for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u, 25u, 27u, 49u, 81u, 121u, 125u}) {
        CheckResult c{"root-of-unity sums q=" + std::to_string(q), true, {}};
        for (std::uint64_t s = 1; s <= q && c.ok; ++s) {
            if (s == (q + 1) / 2) continue;
            const auto [odd, even] = unity_power_sums(q, s);
            if (odd.try_rational() != std::optional<mpz_class>(0) || even.try_rational() != std::optional<mpz_class>(-1)) {
                c.ok = false;
                c.detail = "s=" + std::to_string(s) + ": " + odd.to_string() + ", " + even.to_string();
            }
        }
        rep.checks.push_back(c);
    }

    rep.seconds = seconds_since(t0);
    return rep;
}

SuiteReport verify_lambda_f2()
{
    const auto t0 = Clock::now();
    SuiteReport rep{"lambda f=2", {}, 0};
    for (const TowerSpec& T : std::vector<TowerSpec>{{2, 1, 2, 4}, {2, 1, 2, 6}, {3, 1, 2, 6}, {2, 2, 2, 4}}) {
        const std::string label = tower_label(T);
        const TowerContext ctx(T);
        const DirectSums direct(ctx);
        const auto predicted = lambda_distribution_f2(T);
        const auto display = lambda_distribution_f2_display(T);
        for (std::uint64_t a = 1; a < ctx.q(); ++a) {
            std::map<mpz_class, std::uint64_t> seen;
            for (std::uint32_t t = 0; t < ctx.order(); ++t) ++seen[direct.lambda(FieldElement::exp(t), a).value];
            auto show = [](const std::map<mpz_class, std::uint64_t>& m) {
                std::string s;
                for (const auto& [v, c] : m) s += v.get_str() + " x" + std::to_string(c) + " ";
                return s;
            };
            const std::string name = label + " a=" + std::to_string(a);
            rep.checks.push_back(expect(name + " Lambda values", predicted == seen, "direct " + show(seen) + "predicted " + show(predicted)));
            rep.checks.push_back(expect(name + " Lambda two-value form", display == seen, "direct " + show(seen) + "display " + show(display)));
            const std::uint64_t few = (ctx.qk() - 1) / (ctx.q() + 1);
            std::vector<std::uint64_t> freq;
            for (const auto& [v, c] : seen) freq.push_back(c);
            std::sort(freq.begin(), freq.end());
            rep.checks.push_back(expect(name + " Lambda frequencies", freq == std::vector<std::uint64_t>{few, ctx.q() * few},
                                        "direct " + show(seen)));
        }
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

SuiteReport verify_bounds(std::uint64_t max_size)
{
    const auto t0 = Clock::now();
    SuiteReport rep{"bounds", {}, 0};

    for (auto [p, e, k] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
             {2, 1, 3}, {2, 1, 4}, {3, 1, 2}, {3, 1, 3}, {2, 2, 2}}) {
        const TowerSpec T{p, e, 1, k};
        const TowerContext ctx(T);
        const WeightDistribution d = brute(ctx, 1);
        rep.checks.push_back(expect("f=1 " + tower_label(T) + " meets Griesmer", griesmer_met(ctx.q(), d.n, d.dim, d.dmin()),
                                    describe(d) + ", Griesmer length " + griesmer_min_length(ctx.q(), d.dim, d.dmin()).get_str()));
    }
    {
        const TowerContext ctx({2, 2, 2, 4});
        const WeightDistribution d = brute(ctx, 0, true);
        rep.checks.push_back(expect("punctured q=4 k=4 is [17,4,12]", params(d).n == 17 && params(d).dim == 4 && params(d).d == 12, describe(d)));
        rep.checks.push_back(expect("punctured q=4 k=4 meets Griesmer", griesmer_met(4, d.n, d.dim, d.dmin()), describe(d)));
    }

    for (const TowerSpec& T : grid_towers(max_size)) {
        const std::string label = tower_label(T);
        rep.checks.push_back(guarded(label + " bounds", [&] {
            const TowerContext ctx(T, std::max(max_size, kDefaultFieldBudget));
            CheckResult c{label + " bounds", true, {}};
            auto check = [&](const WeightDistribution& d, std::optional<mpz_class> bound, const char* what) {
                if (!c.ok) return;
                if (bound && *bound > static_cast<unsigned long>(d.dmin())) {
                    c.ok = false;
                    c.detail = std::string(what) + ": d=" + std::to_string(d.dmin()) + " below bound " + bound->get_str();
                } else if (singleton_slack(d.n, d.dim, d.dmin()) < 0) {
                    c.ok = false;
                    c.detail = std::string(what) + ": violates Singleton, " + describe(d);
                }
            };
            if (T.f > 1) {
                check(brute(ctx, 0), dmin_bound_thm1(T), "a=0");
                check(brute(ctx, 0, true), dmin_bound_remark1(T), "punctured");
            }
            check(brute(ctx, 1), lambda_closed_applies(T).ok ? std::optional<mpz_class>(dmin_bound_thm2(T)) : std::nullopt, "a!=0");
            return c;
        }));
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

SuiteReport verify_binary_f3()
{
    const auto t0 = Clock::now();
    SuiteReport rep{"binary f=3", {}, 0};
    for (std::uint32_t k : {6u, 9u, 12u}) {
        const TowerContext ctx({2, 1, 3, k});
        const std::string label = "q=2 f=3 k=" + std::to_string(k);
        const WeightDistribution b = brute(ctx, 1);
        rep.checks.push_back(compare(label + " closed form vs brute force", dist_thm3(k), b));
        rep.checks.push_back(compare(label + " Walsh spectrum vs brute force", walsh_distribution(ctx), b));
        const auto spec = walsh_spectrum(ctx);
        CheckResult c{label + " fast Walsh transform vs term-by-term sums", true, {}};
        for (std::uint32_t s = 0; s < ctx.order() && c.ok; ++s) {
            const std::int64_t w = walsh_direct(ctx, FieldElement::exp(s));
            if (spec[s] != w) {
                c.ok = false;
                c.detail = "omega=alpha^" + std::to_string(s) + ": " + std::to_string(spec[s]) + " vs " + std::to_string(w);
            }
        }
        rep.checks.push_back(c);
    }
    // (1 + sqrt(-7))^m = x + y sqrt(-7) multiplied out in Z[sqrt(-7)].
    CheckResult c{"s_m = 2 Re((1 + sqrt(-7))^m), m <= 12", true, {}};
    mpz_class x = 1, y = 0;
    for (std::uint32_t m = 0; m <= 12; ++m) {
        if (re_seq(m) != 2 * x) {
            c.ok = false;
            c.detail = "m=" + std::to_string(m) + ": " + re_seq(m).get_str() + " vs " + mpz_class(2 * x).get_str();
            break;
        }
        const mpz_class nx = x - 7 * y, ny = x + y;
        x = nx;
        y = ny;
    }
    rep.checks.push_back(c);
    rep.seconds = seconds_since(t0);
    return rep;
}

SuiteReport verify_secret_sharing()
{
    const auto t0 = Clock::now();
    SuiteReport rep{"secret sharing", {}, 0};
    struct Case {
        TowerSpec T;
        std::uint64_t a;
        mpq_class ratio;  // w_min / w_max as published for the family
    };
    auto z = [](std::uint64_t q, std::int64_t ex) { return mpz_class(*checked_pow(q, static_cast<std::uint32_t>(ex))); };
    std::vector<Case> cases;
    auto add_prop1 = [&](std::uint32_t p, std::uint32_t e, std::uint32_t k) {
        const std::uint64_t q = *checked_pow(p, e);
        const mpq_class r = k % 4 == 0 ? mpq_class(z(q, k - 1) - z(q, k / 2 - 1), z(q, k - 1) + z(q, k / 2))
                                       : mpq_class(z(q, k - 1) - z(q, k / 2), z(q, k - 1) + z(q, k / 2 - 1));
        cases.push_back({{p, e, 2, k}, 0, r});
    };
    auto add_thm2 = [&](std::uint32_t p, std::uint32_t e, std::uint32_t f, std::uint32_t k) {
        const std::uint64_t q = *checked_pow(p, e);
        mpq_class r = 1;
        if (f == 2)
            r = k % 4 == 0 ? mpq_class(z(q, k) - z(q, k / 2), z(q, k) + z(q, k / 2 - 1))
                           : mpq_class(z(q, k) - z(q, k / 2 - 1), z(q, k) + z(q, k / 2));
        cases.push_back({{p, e, f, k}, 1, r});
    };
    for (auto [p, e, k] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
             {2, 1, 4}, {3, 1, 4}, {2, 2, 4}, {2, 1, 8}, {2, 1, 6}, {3, 1, 6}, {2, 2, 6}, {2, 1, 10}})
        add_prop1(p, e, k);
    for (auto [p, e, k] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
             {2, 1, 4}, {2, 2, 4}, {2, 1, 8}, {2, 1, 6}, {3, 1, 6}, {2, 1, 10}})
        add_thm2(p, e, 2, k);
    for (auto [p, e, k] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{{2, 1, 3}, {3, 1, 3}, {2, 2, 2}, {5, 1, 3}})
        add_thm2(p, e, 1, k);

    for (Case& cs : cases) {
        cs.ratio.canonicalize();
        const std::string name = tower_label(cs.T) + " a=" + std::to_string(cs.a);
        const TowerContext ctx(cs.T);
        const WeightDistribution d = brute(ctx, cs.a);
        const SecretSharingVerdict v = secret_sharing_check(d, ctx.q());
        rep.checks.push_back(expect(name + " ratio", v.ratio == cs.ratio,
                                    "enumerated " + v.ratio.get_str() + ", family formula " + cs.ratio.get_str()));
        // Strict inequality: the k = 4 members of the a = 0 family sit exactly on the threshold.
        const bool expected_ok = !(cs.a == 0 && cs.T.k == 4);
        rep.checks.push_back(expect(name + (expected_ok ? " passes" : " fails at the boundary"), v.ok == expected_ok,
                                    "ratio " + v.ratio.get_str() + " vs threshold " + v.threshold.get_str()));
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

SuiteReport verify_determinism()
{
    const auto t0 = Clock::now();
    SuiteReport rep{"determinism", {}, 0};
    auto run = [](RunConfig cfg, unsigned workers) {
        cfg.workers = workers;
        std::ostringstream out, err;
        const int rc = cfg.subcommand == "search" ? cmd_search(cfg, out, err) : cmd_code(cfg, out, err);
        return std::to_string(rc) + "\n" + out.str();
    };
    std::vector<RunConfig> configs;
    for (auto [p, e, f, k, a] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t, std::uint64_t>>{
             {2, 2, 2, 4, 0}, {3, 1, 2, 6, 1}, {2, 1, 3, 9, 1}, {5, 1, 1, 4, 2}, {2, 1, 2, 12, 0}}) {
        for (OutputFormat fmt : {OutputFormat::json, OutputFormat::csv, OutputFormat::text}) {
            RunConfig cfg;
            cfg.subcommand = "code";
            cfg.p = p, cfg.e = e, cfg.f = f, cfg.k = k, cfg.a = a;
            cfg.format = fmt;
            configs.push_back(cfg);
        }
    }
    {
        RunConfig cfg;
        cfg.subcommand = "search";
        cfg.budget = 256;
        configs.push_back(cfg);
    }
    for (const RunConfig& cfg : configs) {
        const std::string one = run(cfg, 1), four = run(cfg, 4);
        std::string name = cfg.subcommand;
        if (cfg.subcommand == "code")
            name += " " + tower_label({cfg.p, cfg.e, cfg.f, cfg.k}) + " a=" + std::to_string(cfg.a) + " format " +
                    std::string(std::array{"json", "csv", "text"}[static_cast<int>(*cfg.format)]);
        rep.checks.push_back(expect(name + " identical for 1 and 4 workers", one == four, "outputs differ"));
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

}  // namespace tncodes
