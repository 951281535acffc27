#include "tncodes/theory.hpp"

#include <algorithm>

namespace tncodes {

namespace {

mpz_class zpow(std::uint64_t base, std::uint32_t e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

mpz_class exact_div(const mpz_class& a, const mpz_class& b, const char* what)
{
    if (b == 0 || a % b != 0) throw ConsistencyError(std::string(what) + ": division is not exact");
    return a / b;
}

std::uint64_t to_u64(const mpz_class& v, const char* what)
{
    if (v < 0 || !v.fits_ulong_p()) throw ConsistencyError(std::string(what) + ": value out of range");
    return v.get_ui();
}

/// Distribution from a weight histogram over all q^k values of b (b = 0
/// included), with the kernel of b -> c_b factored out as in brute force.
WeightDistribution finalize(std::uint64_t n, std::uint64_t q, std::uint32_t k,
                            const std::map<std::uint64_t, std::uint64_t>& hist)
{
    const std::uint64_t kernel = hist.count(0) ? hist.at(0) : 0;
    std::uint32_t kdim = 0;
    for (std::uint64_t v = 1; v < kernel; v *= q) ++kdim;
    if (kernel == 0 || *checked_pow(q, kdim) != kernel) throw ConsistencyError("kernel size is not a power of q");
    WeightDistribution d;
    d.n = n;
    d.dim = k - kdim;
    for (const auto& [w, c] : hist) {
        if (c % kernel) throw ConsistencyError("weight class not a union of kernel cosets");
        d.counts[w] = c / kernel;
    }
    return d;
}

WeightDistribution two_weight(const mpz_class& n, std::uint32_t k, const mpz_class& w1, const mpz_class& c1,
                              const mpz_class& w2, const mpz_class& c2)
{
    WeightDistribution d;
    d.n = to_u64(n, "length");
    d.dim = k;
    d.counts[0] = 1;
    d.counts[to_u64(w1, "weight")] += to_u64(c1, "frequency");
    d.counts[to_u64(w2, "weight")] += to_u64(c2, "frequency");
    return d;
}

void require_prime_power(std::uint64_t q)
{
    if (q < 2) throw ParameterError("q must be a prime power");
    std::uint64_t p = 2;
    while (q % p) ++p;
    std::uint64_t r = q;
    while (r % p == 0) r /= p;
    if (r != 1) throw ParameterError("q must be a prime power");
}

/// floor((X - Y q^{h/2}) / C) for C > 0, Y >= 0, exact for odd h.
mpz_class floor_sub_sqrt(const mpz_class& X, const mpz_class& Y, std::uint32_t h, std::uint64_t q, const mpz_class& C)
{
    mpz_class num;
    if (h % 2 == 0) {
        num = X - Y * zpow(q, h / 2);
    } else {
        const mpz_class Z = Y * zpow(q, (h - 1) / 2);
        const mpz_class sq = Z * Z * q;
        mpz_class t;
        mpz_sqrt(t.get_mpz_t(), sq.get_mpz_t());
        // Y q^{h/2} lies strictly between t and t + 1 unless it is an integer.
        num = X - t;
        if (t * t != sq) num -= 1;
    }
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), C.get_mpz_t());
    return out;
}

std::uint32_t count_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return (a + b) % p; }

}  // namespace

// ---------------------------------------------------------------------------

CycloInt omega_literal(const TowerContext& ctx, FieldElement b)
{
    const FieldTable& F = ctx.field();
    const TowerSpec& T = ctx.tower();
    const std::uint32_t p = T.p, ek = T.top_degree(), ef = T.e * T.f;
    std::vector<std::int64_t> counts(p, 0);
    for (std::uint32_t i = 0; i < F.size(); ++i) {
        const FieldElement x = F.from_coords(i);
        const std::uint32_t u = ctx.qindex(F.trace(F.norm(x, ek, ef), ef, T.e));
        const std::uint32_t v = ctx.qindex(F.trace(F.mul(b, x), ek, T.e));
        for (std::uint32_t y = 1; y < ctx.q(); ++y) ++counts[count_add(ctx.qtrace(ctx.qmul(y, u)), ctx.qtrace(v), p)];
    }
    return CycloInt::from_counts(p, counts);
}

ExpSumValue delta_literal(const TowerContext& ctx, FieldElement b)
{
    CycloInt acc(ctx.tower().p);
    for (std::uint32_t z = 1; z < ctx.q(); ++z) acc += omega_literal(ctx, ctx.field().mul(b, ctx.from_qindex(z)));
    return {acc.as_rational_integer(), acc, 1};
}

ExpSumValue lambda_literal(const TowerContext& ctx, FieldElement b, std::uint64_t a_label)
{
    const FieldTable& F = ctx.field();
    const TowerSpec& T = ctx.tower();
    const std::uint32_t p = T.p, ek = T.top_degree(), ef = T.e * T.f;
    const std::uint32_t a = ctx.label_qindex(a_label);
    std::vector<std::int64_t> counts(p, 0);
    for (std::uint32_t i = 0; i < F.size(); ++i) {
        const FieldElement x = F.from_coords(i);
        const std::uint32_t u = ctx.qindex(F.trace(F.norm(x, ek, ef), ef, T.e));
        const std::uint32_t v = ctx.qindex(F.trace(F.mul(b, x), ek, T.e));
        for (std::uint32_t y = 1; y < ctx.q(); ++y) {
            const std::uint32_t ty = count_add(ctx.qtrace(ctx.qmul(y, a)), ctx.qtrace(ctx.qmul(y, u)), p);
            for (std::uint32_t z = 1; z < ctx.q(); ++z) ++counts[count_add(ty, ctx.qtrace(ctx.qmul(z, v)), p)];
        }
    }
    const CycloInt s = CycloInt::from_counts(p, counts);
    return {s.as_rational_integer(), s, 1};
}

DirectSums::DirectSums(const TowerContext& ctx) : ctx_(&ctx)
{
    const std::uint32_t p = ctx.tower().p;
    const auto q = static_cast<std::uint32_t>(ctx.q());
    inner_.reserve(q);
    for (std::uint32_t w = 0; w < q; ++w) {
        std::vector<std::int64_t> counts(p, 0);
        for (std::uint32_t y = 1; y < q; ++y) ++counts[ctx.qtrace(ctx.qmul(y, w))];
        inner_.push_back(CycloInt::from_counts(p, counts));
    }
}

std::vector<std::uint64_t> DirectSums::groups(FieldElement b) const
{
    const TowerContext& ctx = *ctx_;
    const auto q = static_cast<std::uint32_t>(ctx.q());
    const std::uint32_t N = ctx.order();
    std::vector<std::uint64_t> g(std::size_t{q} * q, 0);
    ++g[0];  // x = 0
    if (b.is_zero()) {
        for (std::uint32_t t = 0; t < N; ++t) ++g[std::size_t{ctx.norm_trace(t)} * q];
        return g;
    }
    std::uint32_t bt = b.exponent();
    for (std::uint32_t t = 0; t < N; ++t) {
        ++g[std::size_t{ctx.norm_trace(t)} * q + ctx.top_trace(bt)];
        if (++bt == N) bt = 0;
    }
    return g;
}

ExpSumValue DirectSums::combine(const std::vector<std::uint64_t>& g, std::uint32_t a_qindex) const
{
    const TowerContext& ctx = *ctx_;
    const std::uint32_t p = ctx.tower().p;
    const auto q = static_cast<std::uint32_t>(ctx.q());
    CycloInt total(p);
    for (std::uint32_t u = 0; u < q; ++u) {
        CycloInt row(p);
        for (std::uint32_t v = 0; v < q; ++v) {
            const std::uint64_t c = g[std::size_t{u} * q + v];
            if (c) row += inner_[v] * mpz_class(static_cast<unsigned long>(c));
        }
        if (row.is_zero()) continue;
        total += inner_[ctx.qadd(a_qindex, u)] * row;
    }
    return {total.as_rational_integer(), total, 1};
}

ExpSumValue DirectSums::delta(FieldElement b) const
{
    return delta(groups(b));
}

ExpSumValue DirectSums::lambda(FieldElement b, std::uint64_t a_label) const
{
    return lambda(groups(b), a_label);
}

std::uint64_t DirectSums::count_nb(FieldElement b, std::uint64_t a_label) const
{
    return count_nb(groups(b), a_label);
}

ExpSumValue DirectSums::delta(const std::vector<std::uint64_t>& g) const
{
    return combine(g, 0);
}

ExpSumValue DirectSums::lambda(const std::vector<std::uint64_t>& g, std::uint64_t a_label) const
{
    return combine(g, ctx_->label_qindex(a_label));
}

std::uint64_t DirectSums::count_nb(const std::vector<std::uint64_t>& g, std::uint64_t a_label) const
{
    const std::uint32_t u = ctx_->qneg(ctx_->label_qindex(a_label));
    return g[std::size_t{u} * ctx_->q()];
}

// ---------------------------------------------------------------------------

Applicability delta_closed_applies(const TowerSpec& T)
{
    if (T.f < 2) return {false, "needs f > 1 (f = " + std::to_string(T.f) + ")"};
    if (T.k <= T.f) return {false, "needs k > f (k = " + std::to_string(T.k) + ", f = " + std::to_string(T.f) + ")"};
    return {true, "k > f > 1"};
}

Applicability lambda_closed_applies(const TowerSpec& T)
{
    const std::uint64_t g = gcd_u64(T.k / T.f, T.q() - 1);
    if (g != 1) return {false, "needs gcd(k/f, q-1) = 1 (it is " + std::to_string(g) + ")"};
    return {true, "gcd(k/f, q-1) = 1"};
}

ClosedForms::ClosedForms(const TowerContext& ctx) : ctx_(&ctx)
{
    const TowerSpec& T = ctx.tower();
    const std::uint64_t q = ctx.q(), qf = ctx.qf();
    M_ = (qf - 1) / (q - 1);
    kf_ = T.k / T.f;
    sigma_ = (kf_ % 2 == 1) ? 1 : -1;
    const auto ring = static_cast<std::uint32_t>(T.p * M_);
    const SubfieldView sub = ctx.field().subfield(T.e * T.f);
    gauss_.assign(M_, CycloInt(ring));
    semiprimitive_.assign(M_, false);
    for (std::uint64_t j = 1; j < M_; ++j) {
        const std::uint64_t d = M_ / gcd_u64(j, M_);
        if (d >= 3) {
            if (auto jp = semiprimitive_exponent(T.p, d)) {
                const std::uint32_t gamma = T.e * T.f / (2 * *jp);
                gauss_[j] = CycloInt::scalar(ring, gauss_sum_semiprimitive(T.p, d, gamma, 1).value());
                semiprimitive_[j] = true;
                continue;
            }
        }
        gauss_[j] = gauss_sum_direct(sub, (q - 1) * j).lift(ring);
    }
    gauss_pow_.reserve(M_);
    for (const CycloInt& g : gauss_) gauss_pow_.push_back(g.pow(kf_ - 1));
}

CycloInt ClosedForms::gauss(std::uint64_t j) const
{
    if (j == 0 || j >= M_) throw ParameterError("character index out of range");
    return gauss_[j];
}

bool ClosedForms::gauss_is_semiprimitive(std::uint64_t j) const
{
    if (j == 0 || j >= M_) throw ParameterError("character index out of range");
    return semiprimitive_[j];
}

std::uint64_t ClosedForms::residue(FieldElement b) const
{
    if (b.is_zero()) throw ParameterError("b must be nonzero");
    return b.exponent() % M_;
}

const CycloInt& ClosedForms::phi_sum_cyclo(std::uint64_t s) const
{
    s %= M_;
    if (auto it = cyclo_sums_.find(s); it != cyclo_sums_.end()) return it->second;
    const TowerSpec& T = ctx_->tower();
    const std::uint64_t p = T.p;
    const auto ring = static_cast<std::uint32_t>(p * M_);
    // -1 = beta^{(q^f-1)/2} for odd p.
    const std::uint64_t h = (p == 2) ? 0 : ((ctx_->qf() - 1) / 2) % M_;
    CycloInt acc(ring);
    for (std::uint64_t j = 1; j < M_; ++j) {
        const std::uint64_t shift = (j * h % M_ + M_ - j * s % M_) % M_;
        acc += gauss_pow_[j].shifted(static_cast<std::int64_t>(p * shift));
    }
    return cyclo_sums_.emplace(s, std::move(acc)).first->second;
}

const mpz_class& ClosedForms::phi_sum(std::uint64_t s) const
{
    s %= M_;
    auto it = sums_.find(s);
    if (it == sums_.end()) it = sums_.emplace(s, phi_sum_cyclo(s).as_rational_integer()).first;
    return it->second;
}

ExpSumValue ClosedForms::delta(FieldElement b) const
{
    const std::uint64_t q = ctx_->q(), qf = ctx_->qf();
    const auto ring = static_cast<std::uint32_t>(ctx_->tower().p * M_);
    CycloInt num = CycloInt::scalar(ring, 1) + phi_sum_cyclo(residue(b)) * mpz_class(sigma_);
    num *= mpz_class(static_cast<unsigned long>(qf)) * (q - 1) * (q - 1);
    const mpz_class den = static_cast<unsigned long>(qf - 1);
    const mpz_class value = exact_div(num.as_rational_integer(), den, "Delta");
    return {value, num, den};
}

ExpSumValue ClosedForms::lambda(FieldElement b) const
{
    const std::uint64_t q = ctx_->q(), qf = ctx_->qf();
    const auto ring = static_cast<std::uint32_t>(ctx_->tower().p * M_);
    const mpz_class qfz = static_cast<unsigned long>(qf);
    CycloInt num = CycloInt::scalar(ring, qfz * (1 - mpz_class(static_cast<unsigned long>(q))));
    num -= phi_sum_cyclo(residue(b)) * (mpz_class(sigma_) * (q - 1) * qfz);
    const mpz_class den = static_cast<unsigned long>(qf - 1);
    const mpz_class value = exact_div(num.as_rational_integer(), den, "Lambda");
    return {value, num, den};
}

mpz_class ClosedForms::weight_thm1(FieldElement b) const
{
    const TowerSpec& T = ctx_->tower();
    const mpz_class q = static_cast<unsigned long>(ctx_->q()), qf = static_cast<unsigned long>(ctx_->qf());
    const mpz_class qk = zpow(ctx_->q(), T.k);
    const mpz_class num = (q - 1) * qk * (qf - q) - sigma_ * qf * (q - 1) * (q - 1) * phi_sum(residue(b));
    return exact_div(num, q * q * (qf - 1), "weight");
}

mpz_class ClosedForms::weight_thm2(FieldElement b) const
{
    const TowerSpec& T = ctx_->tower();
    if (b.is_zero()) throw ParameterError("b must be nonzero");
    if (T.f == 1) return zpow(ctx_->q(), T.k - 1);
    const mpz_class q = static_cast<unsigned long>(ctx_->q()), qf = static_cast<unsigned long>(ctx_->qf());
    const mpz_class num = (q - 1) * zpow(ctx_->q(), T.f + T.k - 2) +
                          sigma_ * (q - 1) * zpow(ctx_->q(), T.f - 2) * phi_sum(residue(b));
    return exact_div(num, qf - 1, "weight");
}

WeightDistribution ClosedForms::distribution_thm1(bool punctured) const
{
    const TowerSpec& T = ctx_->tower();
    if (!delta_closed_applies(T).ok) throw ParameterError("closed form needs k > f > 1");
    const std::uint64_t q = ctx_->q();
    std::uint64_t n = to_u64(closed_length(T, false), "length");
    if (punctured) n /= q - 1;
    // The weight of c_b depends only on the exponent of b mod M, and each
    // residue class holds (q^k - 1)/M values of b.
    const std::uint64_t per = ctx_->order() / M_;
    std::map<std::uint64_t, std::uint64_t> hist{{0, 1}};
    for (std::uint64_t s = 0; s < M_; ++s) {
        std::uint64_t w = to_u64(weight_thm1(FieldElement::exp(static_cast<std::uint32_t>(s))), "weight");
        if (punctured) {
            if (w % (q - 1)) throw ConsistencyError("punctured weight is not an integer");
            w /= q - 1;
        }
        hist[w] += per;
    }
    return finalize(n, q, T.k, hist);
}

WeightDistribution ClosedForms::distribution_thm2() const
{
    const TowerSpec& T = ctx_->tower();
    if (!lambda_closed_applies(T).ok) throw ParameterError("closed form needs gcd(k/f, q-1) = 1");
    const std::uint64_t per = ctx_->order() / M_;
    std::map<std::uint64_t, std::uint64_t> hist{{0, 1}};
    for (std::uint64_t s = 0; s < M_; ++s)
        hist[to_u64(weight_thm2(FieldElement::exp(static_cast<std::uint32_t>(s))), "weight")] += per;
    return finalize(to_u64(closed_length(T, true), "length"), ctx_->q(), T.k, hist);
}

mpz_class nb_from_delta(const TowerSpec& T, const mpz_class& delta)
{
    const mpz_class q = static_cast<unsigned long>(T.q()), qf = static_cast<unsigned long>(T.qf());
    const mpz_class qk = zpow(T.q(), T.k);
    return exact_div(qk * (qf - 1) + (q - 1) * (qf - qk) + (qf - 1) * delta, q * q * (qf - 1), "N_b");
}

mpz_class nb_from_lambda(const TowerSpec& T, const mpz_class& lambda)
{
    const mpz_class q = static_cast<unsigned long>(T.q()), qf = static_cast<unsigned long>(T.qf());
    const mpz_class qk = zpow(T.q(), T.k);
    return exact_div(qk * (qf - 1) + (qk - qf) + (qf - 1) * lambda, q * q * (qf - 1), "N_b");
}

// ---------------------------------------------------------------------------

mpz_class closed_length(const TowerSpec& T, bool a_nonzero)
{
    const std::uint64_t q = T.q();
    const mpz_class qk = zpow(q, T.k), qf = zpow(q, T.f);
    if (a_nonzero) return exact_div(zpow(q, T.f - 1) * (qk - 1), qf - 1, "length");
    return exact_div((qk - 1) * (qf - q), q * (qf - 1), "length");
}

WeightDistribution dist_prop1(std::uint64_t q, std::uint32_t k)
{
    require_prime_power(q);
    if (k % 2 || k <= 2) throw ParameterError("needs even k > 2");
    const mpz_class Q = static_cast<unsigned long>(q), qk = zpow(q, k);
    const mpz_class n = (qk - 1) / (Q + 1);
    const mpz_class few = (qk - 1) / (Q + 1), many = Q * (qk - 1) / (Q + 1);
    if (k % 4 == 0)
        return two_weight(n, k, (Q - 1) * (zpow(q, k - 1) - zpow(q, k / 2 - 1)) / (Q + 1), many,
                          (Q - 1) * (zpow(q, k - 1) + zpow(q, k / 2)) / (Q + 1), few);
    return two_weight(n, k, (Q - 1) * (zpow(q, k - 1) - zpow(q, k / 2)) / (Q + 1), few,
                      (Q - 1) * (zpow(q, k - 1) + zpow(q, k / 2 - 1)) / (Q + 1), many);
}

WeightDistribution dist_remark2(std::uint64_t q, std::uint32_t k)
{
    require_prime_power(q);
    if (k % 2 || k <= 2) throw ParameterError("needs even k > 2");
    const mpz_class Q = static_cast<unsigned long>(q), qk = zpow(q, k);
    const mpz_class n = (qk - 1) / (Q * Q - 1);
    const mpz_class few = (qk - 1) / (Q + 1), many = Q * (qk - 1) / (Q + 1);
    if (k % 4 == 0)
        return two_weight(n, k, (zpow(q, k - 1) - zpow(q, k / 2 - 1)) / (Q + 1), many,
                          (zpow(q, k - 1) + zpow(q, k / 2)) / (Q + 1), few);
    return two_weight(n, k, (zpow(q, k - 1) - zpow(q, k / 2)) / (Q + 1), few,
                      (zpow(q, k - 1) + zpow(q, k / 2 - 1)) / (Q + 1), many);
}

WeightDistribution dist_thm2(std::uint64_t q, std::uint32_t f, std::uint32_t k)
{
    require_prime_power(q);
    if (f != 1 && f != 2) throw ParameterError("closed display exists for f = 1 and f = 2 only");
    if (k == 0 || k % f) throw ParameterError("needs f | k");
    if (gcd_u64(k / f, q - 1) != 1) throw ParameterError("needs gcd(k/f, q-1) = 1");
    const mpz_class Q = static_cast<unsigned long>(q), qk = zpow(q, k);
    if (f == 1) {
        WeightDistribution d;
        d.n = to_u64((qk - 1) / (Q - 1), "length");
        d.dim = k;
        d.counts = {{0, 1}, {to_u64(zpow(q, k - 1), "weight"), to_u64(qk - 1, "frequency")}};
        return d;
    }
    const mpz_class n = Q * (qk - 1) / (Q * Q - 1);
    const mpz_class few = (qk - 1) / (Q + 1), many = Q * (qk - 1) / (Q + 1);
    if (k % 4 == 0)
        return two_weight(n, k, (qk - zpow(q, k / 2)) / (Q + 1), few, (qk + zpow(q, k / 2 - 1)) / (Q + 1), many);
    return two_weight(n, k, (qk - zpow(q, k / 2 - 1)) / (Q + 1), many, (qk + zpow(q, k / 2)) / (Q + 1), few);
}

mpz_class re_seq(std::uint32_t m)
{
    mpz_class prev = 2, cur = 2;  // s_0, s_1
    if (m == 0) return prev;
    for (std::uint32_t i = 2; i <= m; ++i) {
        mpz_class next = 2 * cur - 8 * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

WeightDistribution dist_thm3(std::uint32_t k)
{
    if (k % 3 || k <= 3) throw ParameterError("needs 3 | k and k > 3");
    const std::uint32_t m = k / 3;
    const mpz_class top = zpow(2, k + 1), total = zpow(2, k) - 1;
    WeightDistribution d;
    d.n = to_u64(4 * total / 7, "length");
    d.dim = k;
    d.counts[0] = 1;
    d.counts[to_u64(exact_div(top + 6 * re_seq(m - 1), 7, "weight"), "weight")] += to_u64(total / 7, "frequency");
    d.counts[to_u64(exact_div(top - 8 * re_seq(m - 2), 7, "weight"), "weight")] += to_u64(3 * total / 7, "frequency");
    d.counts[to_u64(exact_div(top - re_seq(m), 7, "weight"), "weight")] += to_u64(3 * total / 7, "frequency");
    return d;
}

namespace {

void require_lambda_f2(const TowerSpec& T)
{
    if (T.f != 2 || T.k % 2) throw ParameterError("needs f = 2 and even k");
    if (!lambda_closed_applies(T).ok) throw ParameterError("needs gcd(k/2, q-1) = 1");
}

}  // namespace

std::map<mpz_class, std::uint64_t> lambda_distribution_f2(const TowerSpec& T)
{
    require_lambda_f2(T);
    const std::uint64_t q = T.q();
    const auto N = static_cast<std::uint32_t>(q + 1);
    const std::uint32_t h = T.k / 2 - 1;
    // g_j = G(phi^j, chi_1)^{k/2-1}: the trivial character gives -1, the others
    // are semi-primitive with r = q^2 (p^e = -1 mod q + 1, gamma = 1).
    std::vector<mpz_class> g(N);
    mpz_pow_ui(g[0].get_mpz_t(), mpz_class(-1).get_mpz_t(), h);
    for (std::uint32_t j = 1; j < N; ++j) {
        const mpz_class G = gauss_sum_semiprimitive(T.p, N, 1, j).value();
        mpz_pow_ui(g[j].get_mpz_t(), G.get_mpz_t(), h);
    }
    // t_s = sum_j g_j zeta_{q+1}^{s j}; Lambda(b_s) = (-1)^{k/2} q^2 t_s / (q + 1).
    const mpz_class sign = (T.k / 2) % 2 ? -1 : 1;
    const mpz_class per = (zpow(q, T.k) - 1) / N;
    std::map<mpz_class, std::uint64_t> out;
    for (std::uint32_t s = 0; s < N; ++s) {
        CycloInt t(N);
        for (std::uint32_t j = 0; j < N; ++j)
            t += CycloInt::scalar(N, g[j]).shifted(static_cast<std::int64_t>((std::uint64_t{s} * j) % N));
        const mpz_class v = exact_div(sign * zpow(q, 2) * t.as_rational_integer(), mpz_class(N), "Lambda");
        out[v] += to_u64(per, "frequency");
    }
    return out;
}

std::map<mpz_class, std::uint64_t> lambda_distribution_f2_display(const TowerSpec& T)
{
    require_lambda_f2(T);
    const std::uint64_t q = T.q();
    const std::uint32_t k = T.k;
    const mpz_class Q = static_cast<unsigned long>(q), qk = zpow(q, k);
    const mpz_class s0 = (k / 2) % 2 ? -1 : 1;
    const mpz_class v1 = exact_div(-Q * Q + s0 * zpow(q, k / 2 + 2), Q + 1, "Lambda");
    const mpz_class v2 = exact_div(-Q * Q - s0 * zpow(q, k / 2 + 1), Q + 1, "Lambda");
    std::map<mpz_class, std::uint64_t> out;
    out[v1] += to_u64((qk - 1) / (Q + 1), "frequency");
    out[v2] += to_u64(Q * (qk - 1) / (Q + 1), "frequency");
    return out;
}

// ---------------------------------------------------------------------------

namespace {

void require_binary(const TowerContext& ctx)
{
    if (ctx.q() != 2) throw ParameterError("the Walsh transform needs q = 2");
}

}  // namespace

std::vector<std::int64_t> walsh_spectrum(const TowerContext& ctx)
{
    require_binary(ctx);
    const FieldTable& F = ctx.field();
    const std::uint32_t k = ctx.tower().k, N = ctx.order();
    std::vector<std::int64_t> a(F.size(), 1);  // x = 0 has g = 0
    for (std::uint32_t t = 0; t < N; ++t) a[F.alpha_power(t)] = ctx.norm_trace(t) ? -1 : 1;
    for (std::size_t len = 1; len < a.size(); len <<= 1)
        for (std::size_t i = 0; i < a.size(); i += 2 * len)
            for (std::size_t j = i; j < i + len; ++j) {
                const std::int64_t u = a[j], v = a[j + len];
                a[j] = u + v;
                a[j + len] = u - v;
            }
    // Tr(omega x) = sum_i x_i Tr(omega alpha^i): omega selects the mask of those traces.
    std::vector<std::int64_t> out(N);
    for (std::uint32_t s = 0; s < N; ++s) {
        std::uint32_t mask = 0;
        for (std::uint32_t i = 0; i < k; ++i) mask |= (ctx.top_trace((s + i) % N) ? 1u : 0u) << i;
        out[s] = a[mask];
    }
    return out;
}

std::int64_t walsh_direct(const TowerContext& ctx, FieldElement omega)
{
    require_binary(ctx);
    const FieldTable& F = ctx.field();
    const TowerSpec& T = ctx.tower();
    std::int64_t acc = 0;
    for (std::uint32_t i = 0; i < F.size(); ++i) {
        const FieldElement x = F.from_coords(i);
        const std::uint32_t g = F.prime_value(F.trace(F.norm(x, T.k, T.f), T.f, 1));
        const std::uint32_t tr = F.prime_value(F.trace(F.mul(omega, x), T.k, 1));
        acc += (g ^ tr) ? -1 : 1;
    }
    return acc;
}

WeightDistribution walsh_distribution(const TowerContext& ctx)
{
    const std::vector<std::int64_t> spec = walsh_spectrum(ctx);
    std::uint64_t n = 0;
    for (std::uint32_t t = 0; t < ctx.order(); ++t) n += ctx.norm_trace(t) != 0;
    std::map<std::uint64_t, std::uint64_t> hist{{0, 1}};
    for (std::int64_t v : spec) {
        const std::int64_t num = 2 * static_cast<std::int64_t>(n) + v;
        if (num < 0 || num % 4) throw ConsistencyError("Walsh value gives a non-integral weight");
        ++hist[static_cast<std::uint64_t>(num / 4)];
    }
    return finalize(n, 2, ctx.tower().k, hist);
}

// ---------------------------------------------------------------------------

mpz_class dmin_bound_thm1(const TowerSpec& T)
{
    if (!delta_closed_applies(T).ok) throw ParameterError("bound needs k > f > 1");
    const std::uint64_t q = T.q();
    const mpz_class Q = static_cast<unsigned long>(q), qf = zpow(q, T.f);
    const mpz_class Y = (Q - 1) * (qf - Q);
    return floor_sub_sqrt(Y * zpow(q, T.k - 2), Y, T.k + T.f - 4, q, qf - 1);
}

mpz_class dmin_bound_remark1(const TowerSpec& T)
{
    if (!delta_closed_applies(T).ok) throw ParameterError("bound needs k > f > 1");
    const std::uint64_t q = T.q();
    const mpz_class Q = static_cast<unsigned long>(q), qf = zpow(q, T.f);
    const mpz_class Y = qf - Q;
    return floor_sub_sqrt(Y * zpow(q, T.k - 2), Y, T.k + T.f - 4, q, qf - 1);
}

mpz_class dmin_bound_thm2(const TowerSpec& T)
{
    if (!lambda_closed_applies(T).ok) throw ParameterError("bound needs gcd(k/f, q-1) = 1");
    const std::uint64_t q = T.q();
    if (T.f == 1) return zpow(q, T.k - 1);
    const mpz_class Q = static_cast<unsigned long>(q), qf = zpow(q, T.f);
    return floor_sub_sqrt((Q - 1) * zpow(q, T.f + T.k - 2), qf - Q, T.k + T.f - 4, q, qf - 1);
}

mpz_class griesmer_min_length(std::uint64_t q, std::uint32_t l, std::uint64_t d)
{
    if (q < 2) throw ParameterError("q must be at least 2");
    mpz_class sum = 0, qi = 1;
    const mpz_class D = static_cast<unsigned long>(d);
    for (std::uint32_t i = 0; i < l; ++i) {
        mpz_class c;
        mpz_cdiv_q(c.get_mpz_t(), D.get_mpz_t(), qi.get_mpz_t());
        sum += c;
        if (c <= 1 && d > 0) {
            sum += l - i - 1;  // every remaining term is 1
            break;
        }
        if (d == 0) break;
        qi *= static_cast<unsigned long>(q);
    }
    return sum;
}

std::string to_string(GriesmerVerdict v)
{
    switch (v) {
    case GriesmerVerdict::optimal: return "optimal";
    case GriesmerVerdict::almost_optimal_checked: return "almost_optimal_checked";
    case GriesmerVerdict::not_optimal: return "not_optimal";
    case GriesmerVerdict::unknown: return "unknown";
    }
    return "unknown";
}

GriesmerVerdict is_griesmer_optimal(std::uint64_t q, std::uint64_t n, std::uint32_t l, std::uint64_t d)
{
    if (l == 0 || d == 0) return GriesmerVerdict::unknown;
    const mpz_class N = static_cast<unsigned long>(n);
    if (griesmer_min_length(q, l, d) > N) return GriesmerVerdict::not_optimal;
    if (griesmer_min_length(q, l, d + 1) > N) return GriesmerVerdict::optimal;
    if (griesmer_min_length(q, l, d + 2) > N) return GriesmerVerdict::almost_optimal_checked;
    return GriesmerVerdict::unknown;
}

bool griesmer_met(std::uint64_t q, std::uint64_t n, std::uint32_t l, std::uint64_t d)
{
    return l > 0 && d > 0 && griesmer_min_length(q, l, d) == static_cast<unsigned long>(n);
}

std::int64_t singleton_slack(std::uint64_t n, std::uint32_t l, std::uint64_t d)
{
    return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(l) - static_cast<std::int64_t>(d) + 1;
}

SecretSharingVerdict secret_sharing_check(const WeightDistribution& dist, std::uint64_t q)
{
    const std::uint64_t wmin = dist.dmin(), wmax = dist.max_weight();
    if (wmin == 0) throw ParameterError("the zero code has no nonzero weights");
    SecretSharingVerdict v;
    v.ratio = mpq_class(static_cast<unsigned long>(wmin), static_cast<unsigned long>(wmax));
    v.ratio.canonicalize();
    v.threshold = mpq_class(static_cast<unsigned long>(q - 1), static_cast<unsigned long>(q));
    v.threshold.canonicalize();
    v.ok = mpz_class(static_cast<unsigned long>(wmin)) * q > mpz_class(static_cast<unsigned long>(wmax)) * (q - 1);
    return v;
}

// ---------------------------------------------------------------------------

namespace {

std::string literature_label(const TowerSpec& T, bool a_nonzero, bool punctured)
{
    const std::uint64_t q = T.q();
    if (!a_nonzero) {
        if (punctured && T.f == 2 && T.k == 4) return "published as optimal, meeting the Griesmer bound";
        if (!punctured && T.f == 2 && T.k == 4 && q == 4) return "published as matching the best known [51,4,36]";
        return "";
    }
    if (T.f == 1) return "published as optimal, meeting the Griesmer bound";
    if (T.f == 2 && q == 2 && (T.k == 4 || T.k == 6)) return "published as optimal, meeting the Griesmer bound";
    if (T.f == 2 && q == 4 && T.k == 4) return "published as nearly optimal; best known is [68,4,50]";
    if (T.f == 3 && q == 2 && T.k == 6) return "published as optimal, meeting the Griesmer bound";
    return "";
}

}  // namespace

TheoryReport analyze(const TowerContext& ctx, const DefiningSet& D, const WeightDistribution& brute)
{
    const TowerSpec& T = ctx.tower();
    TheoryReport r;
    r.tower = T;
    r.a_label = D.a_label;
    r.punctured = D.punctured;
    const bool a_nonzero = D.a_label != 0;
    const std::uint64_t q = T.q();

    if (!a_nonzero) {
        r.applicable = delta_closed_applies(T);
        if (r.applicable.ok) {
            if (T.f == 2) {
                r.predicted = D.punctured ? dist_remark2(q, T.k) : dist_prop1(q, T.k);
                r.route = D.punctured ? "punctured-f2" : "a0-f2";
            } else {
                r.predicted = ClosedForms(ctx).distribution_thm1(D.punctured);
                r.route = D.punctured ? "a0-gauss-punctured" : "a0-gauss";
            }
            r.distance_lower_bound = D.punctured ? dmin_bound_remark1(T) : dmin_bound_thm1(T);
        }
    } else {
        r.applicable = lambda_closed_applies(T);
        if (r.applicable.ok) {
            if (T.f <= 2) {
                r.predicted = dist_thm2(q, T.f, T.k);
                r.route = T.f == 1 ? "a1-f1" : "a1-f2";
            } else if (q == 2 && T.f == 3 && T.k > 3) {
                r.predicted = dist_thm3(T.k);
                r.route = "a1-f3-binary";
            } else {
                r.predicted = ClosedForms(ctx).distribution_thm2();
                r.route = "a1-gauss";
            }
            r.distance_lower_bound = dmin_bound_thm2(T);
        }
    }

    const std::uint64_t d = brute.dmin();
    r.griesmer_verdict = is_griesmer_optimal(q, brute.n, brute.dim, d);
    r.griesmer_met = griesmer_met(q, brute.n, brute.dim, d);
    r.singleton_slack = singleton_slack(brute.n, brute.dim, d);
    if (d > 0) r.secret_sharing = secret_sharing_check(brute, q);
    r.literature_label = literature_label(T, a_nonzero, D.punctured);
    return r;
}

}  // namespace tncodes
