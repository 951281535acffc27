#include "tncodes/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tncodes {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint32_t m)
{
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (p != 0 && r > (std::uint64_t{1} << 62) / p) return std::nullopt;
        r *= p;
    }
    return r;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over F_p, constant term first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
    // p is prime: a^(p-2)
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p)
{
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = inv_mod(f.back(), p);
    while (a.size() >= f.size()) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i)
            a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p)
{
    Poly r{1};
    r = poly_mod(r, f, p);
    base = poly_mod(base, f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        e >>= 1;
        if (e) base = poly_mulmod(base, base, f, p);
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly to_poly(const PrimePoly& f)
{
    Poly out(f.begin(), f.end());
    trim(out);
    return out;
}

}  // namespace

namespace poly {

bool is_irreducible(std::uint32_t p, const PrimePoly& fin)
{
    const Poly f = to_poly(fin);
    if (f.size() < 2) return false;
    const std::size_t n = f.size() - 1;
    if (n == 1) return true;
    if (f[0] == 0) return false;
    // Ben-Or: gcd(x^{p^i} - x, f) = 1 for all i <= n/2.
    Poly h{0, 1};
    for (std::size_t i = 1; i <= n / 2; ++i) {
        h = poly_powmod(h, p, f, p);
        Poly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] + p - 1) % p;
        trim(hx);
        if (hx.empty()) return false;
        if (poly_gcd(f, hx, p).size() > 1) return false;
    }
    return true;
}

bool is_primitive(std::uint32_t p, const PrimePoly& fin)
{
    if (!is_irreducible(p, fin)) return false;
    const Poly f = to_poly(fin);
    const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
    const auto size = checked_pow(p, n);
    if (!size) return false;
    const std::uint64_t order = *size - 1;
    const Poly x{0, 1};
    const Poly one = poly_mod(Poly{1}, f, p);
    if (poly_powmod(x, order, f, p) != one) return false;
    for (std::uint64_t l : prime_factors(order))
        if (poly_powmod(x, order / l, f, p) == one) return false;
    return true;
}

PrimePoly smallest_primitive(std::uint32_t p, std::uint32_t m)
{
    const auto size = checked_pow(p, m);
    if (!size) throw BudgetError("field size overflows");
    for (std::uint64_t v = 1; v < *size; ++v) {
        if (v % p == 0) continue;  // constant term must be nonzero
        PrimePoly f(m + 1, 0);
        std::uint64_t w = v;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(w % p);
            w /= p;
        }
        f[m] = 1;
        if (is_primitive(p, f)) return f;
    }
    throw ConsistencyError("no primitive polynomial found");
}

std::string to_string(const PrimePoly& f)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (f[i] != 1 || i == 0) os << f[i];
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace poly

FieldElement SubfieldView::gen_power(std::uint64_t s) const
{
    return FieldElement::exp(static_cast<std::uint32_t>((s % order()) * step));
}

std::uint32_t SubfieldView::log(FieldElement x) const
{
    if (x.is_zero()) throw ParameterError("log of zero");
    if (x.exponent() % step != 0) throw ParameterError("element outside subfield");
    return x.exponent() / step;
}

FieldTable::FieldTable(std::uint32_t p, std::uint32_t m, std::uint64_t budget)
    : p_(p), m_(m)
{
    if (!is_prime(p)) throw ParameterError("characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw ParameterError("field degree must be at least 1");
    const auto size = checked_pow(p, m);
    if (!size || *size > budget)
        throw BudgetError("field size " + std::to_string(p) + "^" + std::to_string(m) + " exceeds budget " +
                          std::to_string(budget));
    if (*size > (std::uint64_t{1} << 31)) throw BudgetError("field too large for 32-bit tables");
    size_ = *size;
    order_ = static_cast<std::uint32_t>(size_ - 1);
    modulus_ = poly::smallest_primitive(p, m);

    alpha_powers_.assign(order_, 0);
    dlog_.assign(size_, 0);
    std::vector<std::uint32_t> digits(m, 0);
    digits[0] = 1;
    std::vector<std::uint32_t> pw(m, 1);
    for (std::uint32_t i = 1; i < m; ++i) pw[i] = pw[i - 1] * p;
    for (std::uint32_t t = 0; t < order_; ++t) {
        std::uint32_t idx = 0;
        for (std::uint32_t i = 0; i < m; ++i) idx += digits[i] * pw[i];
        if (t > 0 && idx == 1) throw ConsistencyError("modulus is not primitive");
        alpha_powers_[t] = idx;
        dlog_[idx] = t;
        // multiply by x and reduce with the monic modulus
        const std::uint64_t top = digits[m - 1];
        for (std::uint32_t i = m - 1; i > 0; --i) digits[i] = digits[i - 1];
        digits[0] = 0;
        if (top != 0)
            for (std::uint32_t i = 0; i < m; ++i)
                digits[i] = static_cast<std::uint32_t>((digits[i] + (p - top) * modulus_[i]) % p);
    }

    zech_.assign(order_, kNoZech);
    for (std::uint32_t t = 0; t < order_; ++t) {
        const std::uint32_t s = add_coords(alpha_powers_[t], 1);
        if (s != 0) zech_[t] = dlog_[s];
    }
}

std::uint32_t FieldTable::coords(FieldElement x) const
{
    return x.is_zero() ? 0 : alpha_powers_[x.exponent()];
}

FieldElement FieldTable::from_coords(std::uint32_t index) const
{
    if (index >= size_) throw ParameterError("coordinate index out of range");
    return index == 0 ? FieldElement::zero() : FieldElement::exp(dlog_[index]);
}

std::optional<std::uint32_t> FieldTable::zech(std::uint32_t t) const
{
    const std::uint32_t z = zech_[t % order_];
    if (z == kNoZech) return std::nullopt;
    return z;
}

std::uint32_t FieldTable::add_coords(std::uint32_t a, std::uint32_t b) const
{
    if (p_ == 2) return a ^ b;
    std::uint32_t r = 0, pw = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        r += ((a % p_ + b % p_) % p_) * pw;
        a /= p_;
        b /= p_;
        pw *= p_;
    }
    return r;
}

FieldElement FieldTable::add(FieldElement x, FieldElement y) const
{
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const std::uint32_t a = x.exponent(), b = y.exponent();
    const std::uint32_t d = b >= a ? b - a : b + order_ - a;
    const std::uint32_t z = zech_[d];
    if (z == kNoZech) return FieldElement::zero();
    return exp(std::uint64_t{a} + z);
}

FieldElement FieldTable::neg(FieldElement x) const
{
    if (x.is_zero() || p_ == 2) return x;
    return exp(std::uint64_t{x.exponent()} + order_ / 2);
}

FieldElement FieldTable::mul(FieldElement x, FieldElement y) const
{
    if (x.is_zero() || y.is_zero()) return FieldElement::zero();
    return exp(std::uint64_t{x.exponent()} + y.exponent());
}

FieldElement FieldTable::inv(FieldElement x) const
{
    if (x.is_zero()) throw ParameterError("inverse of zero");
    return FieldElement::exp(x.exponent() == 0 ? 0 : order_ - x.exponent());
}

FieldElement FieldTable::pow(FieldElement x, std::int64_t e) const
{
    if (x.is_zero()) {
        if (e < 0) throw ParameterError("negative power of zero");
        return e == 0 ? one() : FieldElement::zero();
    }
    const std::int64_t n = order_;
    const std::int64_t em = ((e % n) + n) % n;
    const unsigned __int128 t = static_cast<unsigned __int128>(x.exponent()) * static_cast<std::uint64_t>(em);
    return FieldElement::exp(static_cast<std::uint32_t>(t % order_));
}

std::uint32_t FieldTable::prime_value(FieldElement x) const
{
    const std::uint32_t c = coords(x);
    if (c >= p_) throw ParameterError("element is not in the prime field");
    return c;
}

bool FieldTable::in_subfield(FieldElement x, std::uint32_t d) const
{
    if (!divides_degree(d)) throw ParameterError("subfield degree must divide the field degree");
    if (x.is_zero()) return true;
    const std::uint32_t step = static_cast<std::uint32_t>(order_ / (*checked_pow(p_, d) - 1));
    return x.exponent() % step == 0;
}

SubfieldView FieldTable::subfield(std::uint32_t d) const
{
    if (!divides_degree(d)) throw ParameterError("subfield degree must divide the field degree");
    SubfieldView v;
    v.field = this;
    v.degree = d;
    v.size = *checked_pow(p_, d);
    v.step = static_cast<std::uint32_t>(order_ / (v.size - 1));
    v.abs_trace.resize(v.size - 1);
    if (d < m_) {
        for (std::uint32_t s = 0; s < v.size - 1; ++s)
            v.abs_trace[s] = prime_value(trace(FieldElement::exp(s * v.step), d, 1));
        return v;
    }
    // Full field: the absolute trace is F_p-linear in the coordinates, so fill a
    // table over coordinate indices from the traces of the basis 1, alpha, ...
    std::vector<std::uint32_t> basis(m_);
    for (std::uint32_t i = 0; i < m_; ++i) basis[i] = prime_value(trace(exp(i), m_, 1));
    std::vector<std::uint32_t> by_coords(size_, 0);
    for (std::uint32_t idx = 1; idx < size_; ++idx) {
        std::uint32_t low = 0, pw = 1, w = idx;
        while (w % p_ == 0) {
            w /= p_;
            pw *= p_;
            ++low;
        }
        by_coords[idx] = (by_coords[idx - pw] + basis[low]) % p_;
    }
    for (std::uint32_t s = 0; s < order_; ++s) v.abs_trace[s] = by_coords[alpha_powers_[s]];
    return v;
}

void FieldTable::check_degrees(std::uint32_t from_deg, std::uint32_t to_deg) const
{
    if (!divides_degree(from_deg) || to_deg == 0 || from_deg % to_deg != 0)
        throw ParameterError("relative map needs to_deg | from_deg | " + std::to_string(m_));
}

FieldElement FieldTable::trace(FieldElement x, std::uint32_t from_deg, std::uint32_t to_deg) const
{
    check_degrees(from_deg, to_deg);
    if (!in_subfield(x, from_deg)) throw ParameterError("trace argument outside the source subfield");
    if (x.is_zero()) return x;
    const std::uint64_t s = *checked_pow(p_, to_deg) % order_;
    FieldElement acc = FieldElement::zero();
    std::uint64_t e = x.exponent();
    for (std::uint32_t i = 0; i < from_deg / to_deg; ++i) {
        acc = add(acc, FieldElement::exp(static_cast<std::uint32_t>(e)));
        e = e * s % order_;
    }
    return acc;
}

FieldElement FieldTable::norm(FieldElement x, std::uint32_t from_deg, std::uint32_t to_deg) const
{
    check_degrees(from_deg, to_deg);
    if (!in_subfield(x, from_deg)) throw ParameterError("norm argument outside the source subfield");
    if (x.is_zero()) return x;
    const std::uint64_t r = *checked_pow(p_, from_deg), s = *checked_pow(p_, to_deg);
    const std::uint64_t ex = (r - 1) / (s - 1) % order_;
    return FieldElement::exp(static_cast<std::uint32_t>(std::uint64_t{x.exponent()} * ex % order_));
}

std::uint32_t FieldTable::abs_trace(FieldElement x) const
{
    return prime_value(trace(x, m_, 1));
}

std::string FieldTable::describe(FieldElement x) const
{
    if (x.is_zero()) return "0";
    return "a^" + std::to_string(x.exponent());
}

std::uint64_t TowerSpec::q() const { return checked_pow(p, e).value_or(0); }
std::uint64_t TowerSpec::qf() const { return checked_pow(p, e * f).value_or(0); }
std::uint64_t TowerSpec::qk() const { return checked_pow(p, e * k).value_or(0); }

void TowerSpec::validate(std::uint64_t budget) const
{
    if (!is_prime(p)) throw ParameterError("p = " + std::to_string(p) + " is not prime");
    if (e == 0 || f == 0 || k == 0) throw ParameterError("e, f, k must be positive");
    if (k % f != 0) throw ParameterError("f = " + std::to_string(f) + " does not divide k = " + std::to_string(k));
    const auto size = checked_pow(p, e * k);
    if (!size || *size > budget)
        throw BudgetError("q^k = " + std::to_string(p) + "^" + std::to_string(e * k) + " exceeds budget " +
                          std::to_string(budget));
}

std::string TowerSpec::to_string() const
{
    std::ostringstream os;
    os << "(p=" << p << ", e=" << e << ", f=" << f << ", k=" << k << ")";
    return os.str();
}

}  // namespace tncodes
