#pragma once

// Exact arithmetic in cyclotomic rings Z[zeta_n], additive and multiplicative
// characters of finite fields, and Gauss sums.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tncodes/gf.hpp"

namespace tncodes {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// An element sum_i c_i zeta_n^i of Z[zeta_n], stored as a vector of the group
/// ring Z[x]/(x^n - 1). Representatives are reduced lazily; equality and the
/// scalar test work modulo the n-th cyclotomic polynomial.
///
/// The canonical form uses the tensor basis of Z[zeta_n] = (x) Z[zeta_{l^e}]
/// over the prime powers l^e || n: after reduction every index i has, for each
/// l^e, a residue i mod l^e whose leading base-l digit is at most l - 2. The
/// form is unique, and 1 (index 0) is a basis element, so an element is a
/// rational integer iff its canonical form is supported on index 0.
class CycloInt {
public:
    explicit CycloInt(std::uint32_t n = 1);

    static CycloInt scalar(std::uint32_t n, const mpz_class& v);
    static CycloInt zeta(std::uint32_t n, std::int64_t i);
    /// Build from integer counts c[0..n-1] (e.g. a histogram of exponents).
    static CycloInt from_counts(std::uint32_t n, const std::vector<std::int64_t>& counts);

    std::uint32_t order() const { return n_; }
    const mpz_class& coeff(std::uint32_t i) const { return c_[i]; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    CycloInt& operator+=(const CycloInt& o);
    CycloInt& operator-=(const CycloInt& o);
    CycloInt& operator*=(const CycloInt& o) { return *this = *this * o; }
    CycloInt& operator*=(const mpz_class& s);

    friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
    friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
    friend CycloInt operator*(const CycloInt& a, const CycloInt& b);
    friend CycloInt operator*(CycloInt a, const mpz_class& s) { return a *= s; }
    CycloInt operator-() const;

    /// Multiply by zeta_n^i.
    CycloInt shifted(std::int64_t i) const;
    CycloInt pow(std::uint32_t e) const;
    /// Complex conjugation: zeta^i -> zeta^{-i}.
    CycloInt conj() const;
    /// Galois automorphism zeta -> zeta^c; requires gcd(c, n) = 1.
    CycloInt galois(std::uint64_t c) const;
    /// Same element viewed in Z[zeta_m] for a multiple m of n.
    CycloInt lift(std::uint32_t m) const;

    CycloInt canonical() const;
    bool is_zero() const;
    /// Present iff the value is a rational integer.
    std::optional<mpz_class> try_rational() const;
    /// Throws ConsistencyError when the value is not a rational integer.
    mpz_class as_rational_integer() const;

    friend bool operator==(const CycloInt& a, const CycloInt& b);

    /// Canonical coefficients as "[c0, c1, ...]" (trailing zeros trimmed).
    std::string to_string() const;

private:
    std::uint32_t n_;
    std::vector<mpz_class> c_;
};

/// Additive character chi_a(x) = zeta_p^{Tr(a x)} of the subfield F_{p^degree}.
/// a = 1 gives the canonical character.
struct AddChar {
    const FieldTable* field;
    std::uint32_t degree;
    FieldElement a;
};

/// Multiplicative character psi_j(beta^t) = zeta_{r-1}^{j t} of F_r = F_{p^degree},
/// beta the subfield generator alpha^((p^m-1)/(r-1)). j = 0 is trivial.
struct MultChar {
    const FieldTable* field;
    std::uint32_t degree;
    std::uint64_t j;

    std::uint64_t group_order() const;  // r - 1
    std::uint64_t order() const;        // (r-1)/gcd(j, r-1)
};

CycloInt eval_add_char(const AddChar& ch, FieldElement x);
/// Value in Z[zeta_{r-1}]; x must be nonzero and in the subfield.
CycloInt eval_mult_char(const MultChar& ch, FieldElement x);

/// G(psi_j, chi) over the subfield. The result lives in Z[zeta_{p*ord(psi_j)}];
/// use lift() to combine it with values from larger rings.
CycloInt gauss_sum_direct(const SubfieldView& F, std::uint64_t j);
CycloInt gauss_sum_direct(const FieldTable& F, std::uint64_t j);

/// Gauss sum of a semi-primitive character: G = sign * sqrt_r.
struct SemiPrimitiveGauss {
    int sign = 1;
    std::uint32_t least_j = 0;  // least j with p^j = -1 mod N
    mpz_class sqrt_r;           // p^{j gamma}

    mpz_class value() const { return sign * sqrt_r; }
};

/// Least j >= 1 with p^j = -1 (mod N), if any.
std::optional<std::uint32_t> semiprimitive_exponent(std::uint32_t p, std::uint64_t N);

/// G(lambda^s, rho) over F_r, r = p^{2 j gamma}, lambda of order N (N != 2)
/// in the semi-primitive case. Throws ParameterError when p^j = -1 mod N has
/// no solution or s is outside [1, N-1].
SemiPrimitiveGauss gauss_sum_semiprimitive(std::uint32_t p, std::uint64_t N, std::uint32_t gamma,
                                           std::uint64_t s = 1);

/// (-1)^{t-1} g^t.
CycloInt davenport_hasse_lift(const CycloInt& g, std::uint32_t t);

/// Gauss sums of the lifted characters psi_j o N_{E/F_r} paired with the
/// canonical additive character of E, for every j at once. E is the full
/// table; the base field is its subfield of the given degree.
class LiftedGaussSums {
public:
    LiftedGaussSums(const FieldTable& E, std::uint32_t base_degree);
    CycloInt operator()(std::uint64_t j) const;
    std::uint64_t base_group_order() const { return base_order_; }

private:
    std::uint32_t p_;
    std::uint64_t base_order_;
    std::vector<std::int64_t> hist_;  // [t mod (r-1)][Tr_{E/p}(alpha^t)]
};

/// sum_{x in F_{q^k}^*} chi_2(b x^{q^f - 1}) by direct summation (F = F_{q^k}, q = p^e).
CycloInt monomial_char_sum_direct(const FieldTable& F, std::uint32_t e, std::uint32_t f, FieldElement b);
/// The same sum as (-1)^{k/f-1} sum_{psi_1} G(psi_1, chi_1)^{k/f} conj(psi_1)(b^{(q^k-1)/(q^f-1)}).
CycloInt monomial_char_sum_gauss(const FieldTable& F, std::uint32_t e, std::uint32_t f, FieldElement b);
/// Both routes; throws ConsistencyError if they differ.
CycloInt monomial_char_sum(const FieldTable& F, std::uint32_t e, std::uint32_t f, FieldElement b);

/// sum_{c in F_r} rho(a0 c^m + a1) over the full field F, directly.
CycloInt power_char_sum_direct(const FieldTable& F, std::uint64_t m, FieldElement a0, FieldElement a1);
/// rho(a1) sum_{j=1}^{s-1} conj(lambda)^j(a0) G(lambda^j, rho), lambda of order s = gcd(m, r-1).
CycloInt power_char_sum_gauss(const FieldTable& F, std::uint64_t m, FieldElement a0, FieldElement a1);

/// For odd q and zeta = zeta_{q+1}: (zeta^s + zeta^{3s} + ... + zeta^{qs},
/// zeta^{2s} + zeta^{4s} + ... + zeta^{(q-1)s}). Requires 1 <= s <= q, s != (q+1)/2.
std::pair<CycloInt, CycloInt> unity_power_sums(std::uint64_t q, std::uint64_t s);

}  // namespace tncodes
