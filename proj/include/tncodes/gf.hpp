#pragma once

// Finite fields F_{p^m} in exponent representation with Zech-log addition,
// plus relative trace and norm maps between the subfields of a tower.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tncodes/errors.hpp"

namespace tncodes {

inline constexpr std::uint64_t kDefaultFieldBudget = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);

/// p^m, or nullopt if it does not fit in 63 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint32_t m);

/// An element of F_{p^m}: either zero or alpha^t with t in [0, p^m - 2].
class FieldElement {
public:
    constexpr FieldElement() = default;

    static constexpr FieldElement zero() { return FieldElement{}; }
    /// alpha^t; the caller is responsible for t < p^m - 1.
    static constexpr FieldElement exp(std::uint32_t t) { return FieldElement{t}; }

    constexpr bool is_zero() const { return raw_ == kZeroTag; }
    /// Only meaningful for nonzero elements.
    constexpr std::uint32_t exponent() const { return raw_; }

    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

private:
    static constexpr std::uint32_t kZeroTag = 0xFFFFFFFFu;
    constexpr explicit FieldElement(std::uint32_t t) : raw_(t) {}
    std::uint32_t raw_ = kZeroTag;
};

/// Monic polynomial over F_p, coefficients c[0..deg] (constant term first).
using PrimePoly = std::vector<std::uint32_t>;

namespace poly {
bool is_irreducible(std::uint32_t p, const PrimePoly& f);
/// Irreducible and x has multiplicative order p^deg - 1 modulo f.
bool is_primitive(std::uint32_t p, const PrimePoly& f);
/// Smallest primitive monic polynomial of degree m, ordering candidates by the
/// integer sum_{i<m} c_i p^i (so c_{m-1} is the most significant coefficient).
PrimePoly smallest_primitive(std::uint32_t p, std::uint32_t m);
std::string to_string(const PrimePoly& f);
}  // namespace poly

class FieldTable;

/// The subfield F_{p^d} of a FieldTable, generated by alpha^((p^m-1)/(p^d-1)).
struct SubfieldView {
    const FieldTable* field = nullptr;
    std::uint32_t degree = 0;
    std::uint64_t size = 0;   // p^d
    std::uint32_t step = 0;   // exponent of the generator in terms of alpha
    std::vector<std::uint32_t> abs_trace;  // Tr_{p^d/p}(gen^s), s in [0, size-2]

    std::uint32_t order() const { return static_cast<std::uint32_t>(size - 1); }
    FieldElement gen_power(std::uint64_t s) const;
    /// Discrete log of a nonzero subfield element with respect to the generator.
    std::uint32_t log(FieldElement x) const;
};

/// F_{p^m} built from the smallest primitive polynomial. Immutable after
/// construction; all operations are const and safe to share across threads.
class FieldTable {
public:
    static constexpr std::uint32_t kNoZech = 0xFFFFFFFFu;

    FieldTable(std::uint32_t p, std::uint32_t m, std::uint64_t budget = kDefaultFieldBudget);

    std::uint32_t p() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint64_t size() const { return size_; }
    /// Order of the multiplicative group, p^m - 1.
    std::uint32_t order() const { return order_; }
    const PrimePoly& modulus() const { return modulus_; }

    FieldElement zero() const { return FieldElement::zero(); }
    FieldElement one() const { return FieldElement::exp(0); }
    FieldElement alpha() const { return order_ == 1 ? one() : FieldElement::exp(1); }
    /// -1, which is 1 in characteristic 2.
    FieldElement minus_one() const { return FieldElement::exp(p_ == 2 ? 0 : order_ / 2); }

    /// Coordinate vector of x packed as sum_i c_i p^i over the basis 1, alpha, ...
    std::uint32_t coords(FieldElement x) const;
    FieldElement from_coords(std::uint32_t index) const;
    /// Coordinates of alpha^t.
    std::uint32_t alpha_power(std::uint32_t t) const { return alpha_powers_[t]; }
    /// 1 + alpha^t = alpha^{zech(t)}, or nullopt when 1 + alpha^t = 0.
    std::optional<std::uint32_t> zech(std::uint32_t t) const;

    FieldElement add(FieldElement x, FieldElement y) const;
    FieldElement sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }
    FieldElement neg(FieldElement x) const;
    FieldElement mul(FieldElement x, FieldElement y) const;
    FieldElement inv(FieldElement x) const;
    FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }
    FieldElement pow(FieldElement x, std::int64_t e) const;
    /// The element alpha^(t mod order) for arbitrary t.
    FieldElement exp(std::uint64_t t) const { return FieldElement::exp(static_cast<std::uint32_t>(t % order_)); }

    /// Element of the prime field F_p given as an integer in [0, p).
    FieldElement from_prime(std::uint32_t v) const { return from_coords(v % p_); }
    /// Integer value of a prime-field element. Throws for elements outside F_p.
    std::uint32_t prime_value(FieldElement x) const;

    bool divides_degree(std::uint32_t d) const { return d >= 1 && m_ % d == 0; }
    bool in_subfield(FieldElement x, std::uint32_t d) const;
    SubfieldView subfield(std::uint32_t d) const;

    /// Tr_{p^from / p^to}(x) = sum_{i < from/to} x^{p^{to*i}}.
    FieldElement trace(FieldElement x, std::uint32_t from_deg, std::uint32_t to_deg) const;
    /// N_{p^from / p^to}(x) = x^{(p^from - 1)/(p^to - 1)}, N(0) = 0.
    FieldElement norm(FieldElement x, std::uint32_t from_deg, std::uint32_t to_deg) const;
    /// Absolute trace Tr_{p^m/p}(x) as an integer in [0, p).
    std::uint32_t abs_trace(FieldElement x) const;

    /// Digit-wise sum of two coordinate vectors.
    std::uint32_t add_coords(std::uint32_t a, std::uint32_t b) const;

    std::string describe(FieldElement x) const;

private:
    void check_degrees(std::uint32_t from_deg, std::uint32_t to_deg) const;

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint64_t size_;
    std::uint32_t order_;
    PrimePoly modulus_;
    std::vector<std::uint32_t> alpha_powers_;
    std::vector<std::uint32_t> dlog_;  // indexed by coords; entry 0 unused
    std::vector<std::uint32_t> zech_;  // kNoZech where 1 + alpha^t = 0
};

/// Parameters of the tower F_p < F_q < F_{q^f} < F_{q^k}, q = p^e.
struct TowerSpec {
    std::uint32_t p = 2;
    std::uint32_t e = 1;
    std::uint32_t f = 1;
    std::uint32_t k = 1;

    std::uint64_t q() const;
    std::uint64_t qf() const;
    std::uint64_t qk() const;
    std::uint32_t top_degree() const { return e * k; }
    /// Throws ParameterError / BudgetError when the tower is malformed or too large.
    void validate(std::uint64_t budget = kDefaultFieldBudget) const;
    std::string to_string() const;

    friend bool operator==(const TowerSpec&, const TowerSpec&) = default;
};

}  // namespace tncodes
