#pragma once

// Closed-form weight distributions of defining-set codes, the exponential sums
// behind them (by direct summation and through Gauss sums), distance bounds,
// and the secret-sharing ratio test.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tncodes/codes.hpp"
#include "tncodes/cyclo.hpp"

namespace tncodes {

/// An exponential sum as an exact integer together with the cyclotomic
/// expression it was read off: numerator reduces to value * denominator.
struct ExpSumValue {
    mpz_class value;
    CycloInt numerator;
    mpz_class denominator = 1;
};

// ---------------------------------------------------------------------------
// Direct sums. For x in F_{q^k} write u(x) = Tr_{q^f/q}(N_{q^k/q^f}(x)) and
// v_b(x) = Tr_{q^k/q}(b x); chi is the canonical additive character of F_q.

/// Omega(b) = sum_x sum_{y in F_q^*} chi(y u(x)) chi(v_b(x)), term by term.
CycloInt omega_literal(const TowerContext& ctx, FieldElement b);
/// Delta(b) = sum_{z in F_q^*} Omega(b z), term by term.
ExpSumValue delta_literal(const TowerContext& ctx, FieldElement b);
/// Lambda(b) = sum_x sum_{y,z in F_q^*} chi(a y) chi(y u(x)) chi(z v_b(x)), term by term.
ExpSumValue lambda_literal(const TowerContext& ctx, FieldElement b, std::uint64_t a_label);

/// The same triple sums after grouping x by the pair (u(x), v_b(x)); the
/// inner sums over y and z are still evaluated character by character.
class DirectSums {
public:
    explicit DirectSums(const TowerContext& ctx);

    /// Group sizes |{x : u(x) = u, v_b(x) = v}| indexed [u * q + v] by q-index.
    std::vector<std::uint64_t> groups(FieldElement b) const;

    ExpSumValue delta(FieldElement b) const;
    ExpSumValue lambda(FieldElement b, std::uint64_t a_label) const;
    /// |{x in F_{q^k} : u(x) + a = 0, v_b(x) = 0}| by counting.
    std::uint64_t count_nb(FieldElement b, std::uint64_t a_label) const;

    /// The same quantities from group sizes already computed for some b.
    ExpSumValue delta(const std::vector<std::uint64_t>& g) const;
    ExpSumValue lambda(const std::vector<std::uint64_t>& g, std::uint64_t a_label) const;
    std::uint64_t count_nb(const std::vector<std::uint64_t>& g, std::uint64_t a_label) const;

private:
    ExpSumValue combine(const std::vector<std::uint64_t>& g, std::uint32_t a_qindex) const;

    const TowerContext* ctx_;
    std::vector<CycloInt> inner_;  // sum_{y in F_q^*} chi(y w), by q-index w
};

// ---------------------------------------------------------------------------
// Closed forms through Gauss sums of phi, a character of order
// M = (q^f - 1)/(q - 1) of F_{q^f}.

/// Why a closed form does or does not apply.
struct Applicability {
    bool ok = false;
    std::string reason;
};

Applicability delta_closed_applies(const TowerSpec& T);   // k > f > 1
Applicability lambda_closed_applies(const TowerSpec& T);  // gcd(k/f, q-1) = 1

class ClosedForms {
public:
    explicit ClosedForms(const TowerContext& ctx);

    /// sum_{j=1}^{M-1} phi^j(-1) G(phi^j, chi_1)^{k/f-1} conj(phi)^j(beta^s) for
    /// N_{q^k/q^f}(b) = beta^s; depends only on s mod M and is an integer.
    const mpz_class& phi_sum(std::uint64_t s) const;
    /// The same sum as an element of Z[zeta_{pM}]. Memoized per residue; not
    /// safe to call concurrently on one object.
    const CycloInt& phi_sum_cyclo(std::uint64_t s) const;
    /// Exponent s of N_{q^k/q^f}(b) = beta^s, reduced mod M.
    std::uint64_t residue(FieldElement b) const;

    /// G(phi^j, chi_1), using the semi-primitive evaluation when it applies.
    CycloInt gauss(std::uint64_t j) const;
    /// Whether gauss(j) came from the semi-primitive evaluation.
    bool gauss_is_semiprimitive(std::uint64_t j) const;

    ExpSumValue delta(FieldElement b) const;
    ExpSumValue lambda(FieldElement b) const;
    /// Weight of c_b for a = 0 from the Gauss-sum expression.
    mpz_class weight_thm1(FieldElement b) const;
    /// Weight of c_b for a != 0 from the Gauss-sum expression.
    mpz_class weight_thm2(FieldElement b) const;

    WeightDistribution distribution_thm1(bool punctured = false) const;
    WeightDistribution distribution_thm2() const;

    std::uint64_t M() const { return M_; }

private:
    const TowerContext* ctx_;
    std::uint64_t M_;
    std::uint32_t kf_;
    int sigma_;  // (-1)^{k/f - 1}
    std::vector<CycloInt> gauss_;
    std::vector<CycloInt> gauss_pow_;  // G(phi^j, chi_1)^{k/f - 1}
    std::vector<bool> semiprimitive_;
    mutable std::map<std::uint64_t, CycloInt> cyclo_sums_;
    mutable std::map<std::uint64_t, mpz_class> sums_;
};

/// N_b = |{x : u(x) = 0, v_b(x) = 0}| recovered from Delta(b) (a = 0, x = 0 counted).
mpz_class nb_from_delta(const TowerSpec& T, const mpz_class& delta);
/// N_b = |{x : u(x) + a = 0, v_b(x) = 0}| recovered from Lambda(b) (a != 0).
mpz_class nb_from_lambda(const TowerSpec& T, const mpz_class& lambda);

// ---------------------------------------------------------------------------
// Published distributions in closed form.

/// Length (q^k-1)(q^f-q)/(q(q^f-1)) for a = 0, q^{f-1}(q^k-1)/(q^f-1) for a != 0.
mpz_class closed_length(const TowerSpec& T, bool a_nonzero);

WeightDistribution dist_prop1(std::uint64_t q, std::uint32_t k);    // a = 0, f = 2
WeightDistribution dist_remark2(std::uint64_t q, std::uint32_t k);  // punctured, f = 2
/// a != 0 with f in {1, 2}. Throws ParameterError otherwise.
WeightDistribution dist_thm2(std::uint64_t q, std::uint32_t f, std::uint32_t k);
/// q = 2, f = 3, 3 | k, k > 3; coinciding weights merged.
WeightDistribution dist_thm3(std::uint32_t k);

/// s_m = 2 Re((1 + sqrt(-7))^m): s_0 = s_1 = 2, s_m = 2 s_{m-1} - 8 s_{m-2}.
mpz_class re_seq(std::uint32_t m);

/// Values of Lambda(b) over b != 0 for f = 2 with their frequencies, from the
/// per-class sums t_s (separate even and odd q cases).
std::map<mpz_class, std::uint64_t> lambda_distribution_f2(const TowerSpec& T);
/// The same distribution written as the uniform two-value display.
std::map<mpz_class, std::uint64_t> lambda_distribution_f2_display(const TowerSpec& T);

/// Walsh transform of g(x) = Tr_{2^f/2}(N(x)) at every omega != 0, indexed by
/// the exponent of omega. Requires q = 2.
std::vector<std::int64_t> walsh_spectrum(const TowerContext& ctx);
/// sum_x (-1)^{g(x) + Tr(omega x)} term by term, for checking.
std::int64_t walsh_direct(const TowerContext& ctx, FieldElement omega);
/// {(2n + g^(omega))/4 : omega != 0} together with the zero word.
WeightDistribution walsh_distribution(const TowerContext& ctx);

// ---------------------------------------------------------------------------
// Bounds and ratios.

/// Lower bounds on d, rounded down.
mpz_class dmin_bound_thm1(const TowerSpec& T);
mpz_class dmin_bound_remark1(const TowerSpec& T);
mpz_class dmin_bound_thm2(const TowerSpec& T);

/// sum_{i<l} ceil(d / q^i).
mpz_class griesmer_min_length(std::uint64_t q, std::uint32_t l, std::uint64_t d);

enum class GriesmerVerdict { optimal, almost_optimal_checked, not_optimal, unknown };
std::string to_string(GriesmerVerdict v);

/// optimal: no [n, l, d+1] code passes the Griesmer bound.
/// almost_optimal_checked: [n, l, d+1] passes it but [n, l, d+2] does not.
/// not_optimal: the code itself violates the bound.
GriesmerVerdict is_griesmer_optimal(std::uint64_t q, std::uint64_t n, std::uint32_t l, std::uint64_t d);
bool griesmer_met(std::uint64_t q, std::uint64_t n, std::uint32_t l, std::uint64_t d);
std::int64_t singleton_slack(std::uint64_t n, std::uint32_t l, std::uint64_t d);

struct SecretSharingVerdict {
    bool ok = false;
    mpq_class ratio;      // w_min / w_max
    mpq_class threshold;  // (q-1)/q
};
/// w_min q > w_max (q-1). Throws ParameterError for the zero code.
SecretSharingVerdict secret_sharing_check(const WeightDistribution& dist, std::uint64_t q);

// ---------------------------------------------------------------------------

struct TheoryReport {
    TowerSpec tower;
    std::uint64_t a_label = 0;
    bool punctured = false;
    Applicability applicable;
    std::string route;  // which closed form produced `predicted`
    std::optional<WeightDistribution> predicted;
    std::optional<mpz_class> distance_lower_bound;
    GriesmerVerdict griesmer_verdict = GriesmerVerdict::unknown;
    bool griesmer_met = false;
    std::int64_t singleton_slack = 0;
    SecretSharingVerdict secret_sharing;
    std::string literature_label;  // optimality claim published for these parameters, if any
};

/// Closed-form prediction plus bound verdicts for the code whose exhaustive
/// distribution is `brute`.
TheoryReport analyze(const TowerContext& ctx, const DefiningSet& D, const WeightDistribution& brute);

}  // namespace tncodes
