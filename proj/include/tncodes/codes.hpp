#pragma once

// Defining-set codes C_D = {(Tr_{q^k/q}(b d))_{d in D} : b in F_{q^k}} with
// D = {x != 0 : Tr_{q^f/q}(N_{q^k/q^f}(x)) + a = 0}, and exhaustive weight
// enumeration.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tncodes/gf.hpp"

namespace tncodes {

/// The field F_{q^k} of a tower with per-exponent lookup tables. Elements of
/// F_q are addressed by a "q-index": 0 for zero, 1 + i for gamma^i, where
/// gamma = alpha^((q^k-1)/(q-1)) generates F_q^*.
class TowerContext {
public:
    explicit TowerContext(const TowerSpec& tower, std::uint64_t budget = kDefaultFieldBudget);

    const TowerSpec& tower() const { return tower_; }
    const FieldTable& field() const { return *field_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t qf() const { return qf_; }
    std::uint64_t qk() const { return field_->size(); }
    /// q^k - 1.
    std::uint32_t order() const { return field_->order(); }

    std::uint32_t qindex(FieldElement x) const;
    FieldElement from_qindex(std::uint32_t i) const;
    std::uint32_t qadd(std::uint32_t i, std::uint32_t j) const;
    std::uint32_t qneg(std::uint32_t i) const;
    std::uint32_t qmul(std::uint32_t i, std::uint32_t j) const;
    /// Tr_{q/p} of an F_q element given by q-index.
    std::uint32_t qtrace(std::uint32_t i) const { return qtrace_[i]; }

    /// Tr_{q^k/q}(alpha^t) as a q-index.
    std::uint32_t top_trace(std::uint32_t t) const { return top_trace_[t]; }
    /// Tr_{q^f/q}(N_{q^k/q^f}(alpha^t)) as a q-index.
    std::uint32_t norm_trace(std::uint32_t t) const { return norm_trace_[t]; }
    const std::vector<std::uint32_t>& top_trace_table() const { return top_trace_; }

    /// Integer label sum_i c_i p^i (0 <= c_i < p, i < e) of F_q mapped to
    /// sum_i c_i gamma^i; for e = 1 this is the prime-field value.
    FieldElement from_label(std::uint64_t label) const;
    std::uint32_t label_qindex(std::uint64_t label) const;

private:
    TowerSpec tower_;
    std::shared_ptr<const FieldTable> field_;
    std::uint64_t q_;
    std::uint64_t qf_;
    std::uint32_t gamma_step_;
    std::vector<std::uint32_t> top_trace_;
    std::vector<std::uint32_t> norm_trace_;
    std::vector<std::uint32_t> qtrace_;
    std::vector<std::uint32_t> label_qindex_;
};

struct DefiningSet {
    TowerSpec tower;
    std::uint64_t a_label = 0;
    FieldElement a;
    std::vector<std::uint32_t> exponents;  // increasing; element d = alpha^exponent
    bool punctured = false;

    std::size_t size() const { return exponents.size(); }
};

/// Throws ParameterError for a = 0 with f = 1, a label outside [0, q), or an
/// empty result.
DefiningSet build_defining_set(const TowerContext& ctx, std::uint64_t a_label);

/// One representative (least exponent) per F_q^*-orbit. Requires a = 0.
DefiningSet puncture(const TowerContext& ctx, const DefiningSet& D);

/// c_b as F_q elements.
std::vector<FieldElement> codeword(const TowerContext& ctx, const DefiningSet& D, FieldElement b);
std::uint64_t codeword_weight(const TowerContext& ctx, const DefiningSet& D, FieldElement b);

struct WeightDistribution {
    std::uint64_t n = 0;
    std::uint32_t dim = 0;
    std::map<std::uint64_t, std::uint64_t> counts;  // weight -> frequency, weight 0 included

    /// Least nonzero weight, or 0 for the zero code.
    std::uint64_t dmin() const;
    std::uint64_t max_weight() const;
    std::uint64_t total() const;
    /// Nonzero weights in increasing order.
    std::vector<std::uint64_t> nonzero_weights() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

struct WeightEnumerator {
    std::vector<std::uint64_t> coeffs;  // coeffs[w] = A_w

    /// "1+204z^36+51z^48".
    std::string to_string() const;
};

struct CodeParams {
    std::uint64_t n;
    std::uint32_t dim;
    std::uint64_t d;
};

WeightEnumerator enumerator(const WeightDistribution& dist);
CodeParams params(const WeightDistribution& dist);
/// "[51,4,36]".
std::string params_string(const WeightDistribution& dist);

/// Exhaustive distribution over all q^k codewords, split across `workers`
/// threads. The result does not depend on the worker count.
WeightDistribution brute_weight_distribution(const TowerContext& ctx, const DefiningSet& D, unsigned workers = 1);

}  // namespace tncodes
