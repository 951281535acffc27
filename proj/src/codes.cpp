#include "tncodes/codes.hpp"

#include <algorithm>
#include <thread>

namespace tncodes {

TowerContext::TowerContext(const TowerSpec& tower, std::uint64_t budget) : tower_(tower)
{
    tower.validate(budget);
    field_ = std::make_shared<const FieldTable>(tower.p, tower.top_degree(), budget);
    const FieldTable& F = *field_;
    const std::uint32_t e = tower.e, ek = tower.top_degree();
    q_ = tower.q();
    qf_ = tower.qf();
    gamma_step_ = static_cast<std::uint32_t>(F.order() / (q_ - 1));

    qtrace_.resize(q_);
    for (std::uint32_t i = 0; i < q_; ++i) qtrace_[i] = F.prime_value(F.trace(from_qindex(i), e, 1));

    // Tr_{q^k/q} is F_p-linear in the coordinates: fill it over coordinate
    // indices from the traces of the basis 1, alpha, ..., alpha^{ek-1}.
    std::vector<std::uint32_t> basis(ek);
    for (std::uint32_t i = 0; i < ek; ++i) basis[i] = qindex(F.trace(F.exp(i), ek, e));
    std::vector<std::uint32_t> by_coords(F.size(), 0);
    for (std::uint32_t idx = 1; idx < F.size(); ++idx) {
        std::uint32_t low = 0, pw = 1, w = idx;
        while (w % tower.p == 0) {
            w /= tower.p;
            pw *= tower.p;
            ++low;
        }
        by_coords[idx] = qadd(by_coords[idx - pw], basis[low]);
    }
    top_trace_.resize(F.order());
    for (std::uint32_t t = 0; t < F.order(); ++t) top_trace_[t] = by_coords[F.alpha_power(t)];

    // N_{q^k/q^f}(alpha^t) = beta^t with beta = alpha^((q^k-1)/(q^f-1)).
    const std::uint32_t nf = static_cast<std::uint32_t>(qf_ - 1);
    const std::uint32_t beta_step = F.order() / nf;
    std::vector<std::uint32_t> sub_trace(nf);
    for (std::uint32_t s = 0; s < nf; ++s) sub_trace[s] = qindex(F.trace(F.exp(std::uint64_t{s} * beta_step), e * tower.f, e));
    norm_trace_.resize(F.order());
    for (std::uint32_t t = 0; t < F.order(); ++t) norm_trace_[t] = sub_trace[t % nf];

    label_qindex_.resize(q_);
    for (std::uint64_t label = 0; label < q_; ++label) {
        FieldElement acc = F.zero();
        std::uint64_t rest = label;
        for (std::uint32_t i = 0; i < e; ++i) {
            const FieldElement gi = F.exp(std::uint64_t{gamma_step_} * i);
            acc = F.add(acc, F.mul(F.from_prime(static_cast<std::uint32_t>(rest % tower.p)), gi));
            rest /= tower.p;
        }
        label_qindex_[label] = qindex(acc);
    }
}

std::uint32_t TowerContext::qindex(FieldElement x) const
{
    if (x.is_zero()) return 0;
    if (x.exponent() % gamma_step_ != 0) throw ParameterError("element is not in F_q");
    return 1 + x.exponent() / gamma_step_;
}

FieldElement TowerContext::from_qindex(std::uint32_t i) const
{
    if (i >= q_) throw ParameterError("q-index out of range");
    return i == 0 ? FieldElement::zero() : FieldElement::exp((i - 1) * gamma_step_);
}

std::uint32_t TowerContext::qadd(std::uint32_t i, std::uint32_t j) const
{
    return qindex(field_->add(from_qindex(i), from_qindex(j)));
}

std::uint32_t TowerContext::qneg(std::uint32_t i) const
{
    return qindex(field_->neg(from_qindex(i)));
}

std::uint32_t TowerContext::qmul(std::uint32_t i, std::uint32_t j) const
{
    return qindex(field_->mul(from_qindex(i), from_qindex(j)));
}

FieldElement TowerContext::from_label(std::uint64_t label) const
{
    return from_qindex(label_qindex(label));
}

std::uint32_t TowerContext::label_qindex(std::uint64_t label) const
{
    if (label >= q_) throw ParameterError("a = " + std::to_string(label) + " is not in [0, " + std::to_string(q_) + ")");
    return label_qindex_[label];
}

DefiningSet build_defining_set(const TowerContext& ctx, std::uint64_t a_label)
{
    const TowerSpec& T = ctx.tower();
    if (a_label == 0 && T.f == 1) throw ParameterError("a = 0 needs f > 1 (the defining set is empty for f = 1)");
    DefiningSet D;
    D.tower = T;
    D.a_label = a_label;
    D.a = ctx.from_label(a_label);
    const std::uint32_t target = ctx.qneg(ctx.label_qindex(a_label));
    for (std::uint32_t t = 0; t < ctx.order(); ++t)
        if (ctx.norm_trace(t) == target) D.exponents.push_back(t);
    if (D.exponents.empty()) throw ParameterError("defining set is empty for " + T.to_string());
    return D;
}

DefiningSet puncture(const TowerContext& ctx, const DefiningSet& D)
{
    if (D.a_label != 0) throw ParameterError("puncturing needs a = 0");
    if (D.punctured) return D;
    // F_q^* = <alpha^{(q^k-1)/(q-1)}>, so each orbit has exactly one exponent below that step.
    const std::uint32_t step = static_cast<std::uint32_t>(ctx.order() / (ctx.q() - 1));
    DefiningSet out = D;
    out.punctured = true;
    out.exponents.clear();
    for (std::uint32_t t : D.exponents)
        if (t < step) out.exponents.push_back(t);
    return out;
}

std::vector<FieldElement> codeword(const TowerContext& ctx, const DefiningSet& D, FieldElement b)
{
    const FieldTable& F = ctx.field();
    std::vector<FieldElement> out;
    out.reserve(D.size());
    for (std::uint32_t t : D.exponents)
        out.push_back(F.trace(F.mul(b, F.exp(t)), D.tower.top_degree(), D.tower.e));
    return out;
}

std::uint64_t codeword_weight(const TowerContext& ctx, const DefiningSet& D, FieldElement b)
{
    if (b.is_zero()) return 0;
    std::uint64_t w = 0;
    for (std::uint32_t t : D.exponents) w += ctx.top_trace((b.exponent() + std::uint64_t{t}) % ctx.order()) != 0;
    return w;
}

std::uint64_t WeightDistribution::dmin() const
{
    for (const auto& [w, c] : counts)
        if (w > 0 && c > 0) return w;
    return 0;
}

std::uint64_t WeightDistribution::max_weight() const
{
    return counts.empty() ? 0 : counts.rbegin()->first;
}

std::uint64_t WeightDistribution::total() const
{
    std::uint64_t s = 0;
    for (const auto& [w, c] : counts) s += c;
    return s;
}

std::vector<std::uint64_t> WeightDistribution::nonzero_weights() const
{
    std::vector<std::uint64_t> out;
    for (const auto& [w, c] : counts)
        if (w > 0 && c > 0) out.push_back(w);
    return out;
}

std::string WeightEnumerator::to_string() const
{
    std::string s;
    for (std::size_t w = 0; w < coeffs.size(); ++w) {
        if (coeffs[w] == 0) continue;
        if (!s.empty()) s += "+";
        if (w == 0) {
            s += std::to_string(coeffs[w]);
            continue;
        }
        if (coeffs[w] != 1) s += std::to_string(coeffs[w]);
        s += "z^" + std::to_string(w);
    }
    return s.empty() ? "0" : s;
}

WeightEnumerator enumerator(const WeightDistribution& dist)
{
    WeightEnumerator e;
    e.coeffs.assign(std::max(dist.n, dist.max_weight()) + 1, 0);
    for (const auto& [w, c] : dist.counts) e.coeffs[w] = c;
    return e;
}

CodeParams params(const WeightDistribution& dist)
{
    return {dist.n, dist.dim, dist.dmin()};
}

std::string params_string(const WeightDistribution& dist)
{
    return "[" + std::to_string(dist.n) + "," + std::to_string(dist.dim) + "," + std::to_string(dist.dmin()) + "]";
}

WeightDistribution brute_weight_distribution(const TowerContext& ctx, const DefiningSet& D, unsigned workers)
{
    if (!(D.tower == ctx.tower())) throw ParameterError("defining set belongs to a different tower");
    const std::uint32_t N = ctx.order();
    const std::uint64_t n = D.size();
    // doubled table so that s + t never needs a reduction
    std::vector<std::uint8_t> nonzero(2 * std::size_t{N});
    for (std::uint32_t t = 0; t < N; ++t) nonzero[t] = nonzero[t + N] = ctx.top_trace(t) != 0;

    workers = std::max(1u, std::min<unsigned>(workers, N));
    std::vector<std::vector<std::uint64_t>> hist(workers, std::vector<std::uint64_t>(n + 1, 0));
    auto run = [&](unsigned id) {
        const std::uint32_t lo = static_cast<std::uint32_t>(std::uint64_t{N} * id / workers);
        const std::uint32_t hi = static_cast<std::uint32_t>(std::uint64_t{N} * (id + 1) / workers);
        auto& h = hist[id];
        for (std::uint32_t s = lo; s < hi; ++s) {
            const std::uint8_t* row = nonzero.data() + s;
            std::uint64_t w = 0;
            for (std::uint32_t t : D.exponents) w += row[t];
            ++h[w];
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < workers; ++id) pool.emplace_back(run, id);
        for (auto& th : pool) th.join();
    }

    std::vector<std::uint64_t> total(n + 1, 0);
    total[0] = 1;  // b = 0
    for (const auto& h : hist)
        for (std::uint64_t w = 0; w <= n; ++w) total[w] += h[w];

    // The zero-weight b form an F_q-subspace (the kernel of b -> c_b).
    const std::uint64_t kernel = total[0];
    std::uint32_t kdim = 0;
    for (std::uint64_t v = 1; v < kernel; v *= ctx.q()) ++kdim;
    if (*checked_pow(ctx.q(), kdim) != kernel) throw ConsistencyError("kernel size is not a power of q");

    WeightDistribution dist;
    dist.n = n;
    dist.dim = D.tower.k - kdim;
    for (std::uint64_t w = 0; w <= n; ++w) {
        if (!total[w]) continue;
        if (total[w] % kernel) throw ConsistencyError("weight class not a union of kernel cosets");
        dist.counts[w] = total[w] / kernel;
    }
    return dist;
}

}  // namespace tncodes
