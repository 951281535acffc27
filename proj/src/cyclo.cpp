#include "tncodes/cyclo.hpp"

#include <algorithm>
#include <sstream>

namespace tncodes {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b)
{
    return a / gcd_u64(a, b) * b;
}

namespace {

struct PrimePowerPart {
    std::uint32_t l;      // prime
    std::uint32_t P;      // l^e, exact divisor of n
    std::uint32_t h;      // l^{e-1}
    std::uint64_t E;      // CRT idempotent: 1 mod P, 0 mod n/P
};

std::int64_t mod_inverse(std::int64_t a, std::int64_t m)
{
    std::int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1) {
        const std::int64_t qt = g / a1;
        std::swap(g, a1);
        a1 -= qt * g;
        std::swap(x, x1);
        x1 -= qt * x;
    }
    return ((x % m) + m) % m;
}

std::vector<PrimePowerPart> prime_power_parts(std::uint32_t n)
{
    std::vector<PrimePowerPart> out;
    std::uint32_t w = n;
    for (std::uint32_t l = 2; l * l <= w || (w > 1 && l <= w); ++l) {
        if (w % l != 0) continue;
        std::uint32_t P = 1;
        while (w % l == 0) {
            w /= l;
            P *= l;
        }
        const std::uint64_t rest = n / P;
        const std::uint64_t E = P == 1 ? 0 : rest * static_cast<std::uint64_t>(mod_inverse(static_cast<std::int64_t>(rest % P), P)) % n;
        out.push_back({l, P, P / l, E});
        if (w == 1) break;
    }
    return out;
}

std::uint32_t as_order(std::uint64_t n)
{
    if (n == 0 || n > 0xFFFFFFFFull) throw BudgetError("cyclotomic order out of range");
    return static_cast<std::uint32_t>(n);
}

}  // namespace

CycloInt::CycloInt(std::uint32_t n) : n_(n), c_(n)
{
    if (n == 0) throw ParameterError("cyclotomic order must be positive");
}

CycloInt CycloInt::scalar(std::uint32_t n, const mpz_class& v)
{
    CycloInt r(n);
    r.c_[0] = v;
    return r;
}

CycloInt CycloInt::zeta(std::uint32_t n, std::int64_t i)
{
    CycloInt r(n);
    const std::int64_t nn = n;
    r.c_[static_cast<std::size_t>(((i % nn) + nn) % nn)] = 1;
    return r;
}

CycloInt CycloInt::from_counts(std::uint32_t n, const std::vector<std::int64_t>& counts)
{
    if (counts.size() != n) throw ParameterError("count vector length must equal the order");
    CycloInt r(n);
    for (std::uint32_t i = 0; i < n; ++i)
        if (counts[i] != 0) r.c_[i] = static_cast<long>(counts[i]);
    return r;
}

CycloInt CycloInt::lift(std::uint32_t m) const
{
    if (m % n_ != 0) throw ParameterError("lift target must be a multiple of the order");
    if (m == n_) return *this;
    CycloInt r(m);
    const std::uint32_t f = m / n_;
    for (std::uint32_t i = 0; i < n_; ++i)
        if (c_[i] != 0) r.c_[i * f] = c_[i];
    return r;
}

CycloInt& CycloInt::operator+=(const CycloInt& o)
{
    if (o.n_ != n_) {
        const std::uint32_t m = as_order(lcm_u64(n_, o.n_));
        *this = lift(m);
        return *this += o.lift(m);
    }
    for (std::uint32_t i = 0; i < n_; ++i)
        if (o.c_[i] != 0) c_[i] += o.c_[i];
    return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& o)
{
    if (o.n_ != n_) {
        const std::uint32_t m = as_order(lcm_u64(n_, o.n_));
        *this = lift(m);
        return *this -= o.lift(m);
    }
    for (std::uint32_t i = 0; i < n_; ++i)
        if (o.c_[i] != 0) c_[i] -= o.c_[i];
    return *this;
}

CycloInt& CycloInt::operator*=(const mpz_class& s)
{
    for (auto& c : c_)
        if (c != 0) c *= s;
    return *this;
}

CycloInt CycloInt::operator-() const
{
    CycloInt r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CycloInt operator*(const CycloInt& a_in, const CycloInt& b_in)
{
    if (a_in.n_ != b_in.n_) {
        const std::uint32_t m = as_order(lcm_u64(a_in.n_, b_in.n_));
        return a_in.lift(m) * b_in.lift(m);
    }
    const std::uint32_t n = a_in.n_;
    struct Term {
        std::uint32_t i;
        const mpz_class* v;
    };
    auto nonzero = [](const CycloInt& x, bool& fits, unsigned long& max_abs) {
        std::vector<Term> out;
        for (std::uint32_t i = 0; i < x.n_; ++i) {
            if (x.c_[i] == 0) continue;
            out.push_back({i, &x.c_[i]});
            if (!x.c_[i].fits_slong_p()) {
                fits = false;
            } else {
                const long v = x.c_[i].get_si();
                const unsigned long a = v < 0 ? static_cast<unsigned long>(-(v + 1)) + 1 : static_cast<unsigned long>(v);
                max_abs = std::max(max_abs, a);
            }
        }
        return out;
    };
    bool fits = true;
    unsigned long ma = 0, mb = 0;
    const auto ta = nonzero(a_in, fits, ma);
    const auto tb = nonzero(b_in, fits, mb);
    CycloInt r(n);
    if (ta.empty() || tb.empty()) return r;

    const unsigned __int128 bound = static_cast<unsigned __int128>(ma) * mb * std::min(ta.size(), tb.size());
    if (fits && bound < (static_cast<unsigned __int128>(1) << 62)) {
        std::vector<long> acc(n, 0);
        std::vector<long> bv(tb.size());
        for (std::size_t j = 0; j < tb.size(); ++j) bv[j] = tb[j].v->get_si();
        for (const auto& x : ta) {
            const long av = x.v->get_si();
            for (std::size_t j = 0; j < tb.size(); ++j) {
                std::uint32_t idx = x.i + tb[j].i;
                if (idx >= n) idx -= n;
                acc[idx] += av * bv[j];
            }
        }
        for (std::uint32_t i = 0; i < n; ++i)
            if (acc[i] != 0) r.c_[i] = acc[i];
        return r;
    }
    for (const auto& x : ta)
        for (const auto& y : tb) {
            std::uint32_t idx = x.i + y.i;
            if (idx >= n) idx -= n;
            mpz_addmul(r.c_[idx].get_mpz_t(), x.v->get_mpz_t(), y.v->get_mpz_t());
        }
    return r;
}

CycloInt CycloInt::shifted(std::int64_t s) const
{
    const std::int64_t nn = n_;
    const std::uint32_t sh = static_cast<std::uint32_t>(((s % nn) + nn) % nn);
    if (sh == 0) return *this;
    CycloInt r(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (c_[i] == 0) continue;
        std::uint32_t j = i + sh;
        if (j >= n_) j -= n_;
        r.c_[j] = c_[i];
    }
    return r;
}

CycloInt CycloInt::pow(std::uint32_t e) const
{
    CycloInt r = scalar(n_, 1);
    CycloInt b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

CycloInt CycloInt::conj() const
{
    CycloInt r(n_);
    for (std::uint32_t i = 0; i < n_; ++i)
        if (c_[i] != 0) r.c_[i == 0 ? 0 : n_ - i] = c_[i];
    return r;
}

CycloInt CycloInt::galois(std::uint64_t c) const
{
    if (gcd_u64(c % n_, n_) != 1 && n_ != 1) throw ParameterError("Galois exponent must be a unit");
    CycloInt r(n_);
    const std::uint64_t cm = c % n_;
    for (std::uint32_t i = 0; i < n_; ++i)
        if (c_[i] != 0) r.c_[static_cast<std::uint32_t>(i * cm % n_)] += c_[i];
    return r;
}

CycloInt CycloInt::canonical() const
{
    CycloInt r = *this;
    for (const auto& part : prime_power_parts(n_)) {
        const std::uint32_t top_start = (part.l - 1) * part.h;
        const std::uint64_t step = static_cast<std::uint64_t>(part.h) * part.E % n_;
        for (std::uint32_t i = 0; i < n_; ++i) {
            if (i % part.P < top_start || r.c_[i] == 0) continue;
            // sum_{s<l} omega^{i + s h} = 0 for the primitive P-th root omega
            std::uint64_t j = i;
            for (std::uint32_t t = 1; t < part.l; ++t) {
                j = (j + n_ - step) % n_;
                r.c_[j] -= r.c_[i];
            }
            r.c_[i] = 0;
        }
    }
    return r;
}

bool CycloInt::is_zero() const
{
    const CycloInt r = canonical();
    return std::all_of(r.c_.begin(), r.c_.end(), [](const mpz_class& c) { return c == 0; });
}

std::optional<mpz_class> CycloInt::try_rational() const
{
    const CycloInt r = canonical();
    for (std::uint32_t i = 1; i < r.n_; ++i)
        if (r.c_[i] != 0) return std::nullopt;
    return r.c_[0];
}

mpz_class CycloInt::as_rational_integer() const
{
    auto v = try_rational();
    if (!v) throw ConsistencyError("cyclotomic value is not a rational integer: " + to_string());
    return *v;
}

bool operator==(const CycloInt& a, const CycloInt& b)
{
    return (a - b).is_zero();
}

std::string CycloInt::to_string() const
{
    const CycloInt r = canonical();
    std::size_t last = 0;
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        if (r.c_[i] != 0) last = i;
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i <= last; ++i) os << (i ? ", " : "") << r.c_[i].get_str();
    os << "]";
    return os.str();
}

std::uint64_t MultChar::group_order() const
{
    return *checked_pow(field->p(), degree) - 1;
}

std::uint64_t MultChar::order() const
{
    const std::uint64_t N = group_order();
    return N / gcd_u64(j % N, N);
}

CycloInt eval_add_char(const AddChar& ch, FieldElement x)
{
    const FieldTable& F = *ch.field;
    const FieldElement y = F.mul(ch.a, x);
    return CycloInt::zeta(F.p(), F.prime_value(F.trace(y, ch.degree, 1)));
}

CycloInt eval_mult_char(const MultChar& ch, FieldElement x)
{
    if (x.is_zero()) throw ParameterError("multiplicative character evaluated at zero");
    const FieldTable& F = *ch.field;
    if (!F.in_subfield(x, ch.degree)) throw ParameterError("argument outside the character's field");
    const std::uint64_t N = ch.group_order();
    const std::uint64_t t = x.exponent() / (F.order() / N);
    return CycloInt::zeta(as_order(N), static_cast<std::int64_t>((ch.j % N) * t % N));
}

CycloInt gauss_sum_direct(const SubfieldView& F, std::uint64_t j)
{
    const std::uint32_t p = F.field->p();
    const std::uint64_t N = F.order();
    const std::uint64_t jm = j % N;
    const std::uint64_t d = N / gcd_u64(jm, N);
    const std::uint64_t jr = (jm / (N / d)) % d;
    const std::uint32_t n = as_order(static_cast<std::uint64_t>(p) * d);
    std::vector<std::int64_t> counts(n, 0);
    std::uint64_t a = 0;  // jr * t mod d
    for (std::uint64_t t = 0; t < N; ++t) {
        counts[(p * a + d * F.abs_trace[t]) % n] += 1;
        a += jr;
        if (a >= d) a -= d;
    }
    return CycloInt::from_counts(n, counts);
}

CycloInt gauss_sum_direct(const FieldTable& F, std::uint64_t j)
{
    return gauss_sum_direct(F.subfield(F.degree()), j);
}

std::optional<std::uint32_t> semiprimitive_exponent(std::uint32_t p, std::uint64_t N)
{
    if (N < 3) return std::nullopt;
    std::uint64_t v = p % N;
    for (std::uint32_t j = 1; j <= N; ++j) {
        if (v == N - 1) return j;
        v = v * p % N;
    }
    return std::nullopt;
}

SemiPrimitiveGauss gauss_sum_semiprimitive(std::uint32_t p, std::uint64_t N, std::uint32_t gamma, std::uint64_t s)
{
    if (N == 2) throw ParameterError("semi-primitive Gauss sums need N != 2");
    if (gamma == 0) throw ParameterError("gamma must be positive");
    if (s == 0 || s >= N) throw ParameterError("power index s must lie in [1, N-1]");
    const auto j = semiprimitive_exponent(p, N);
    if (!j) throw ParameterError("no j with p^j = -1 mod " + std::to_string(N));
    SemiPrimitiveGauss g;
    g.least_j = *j;
    mpz_ui_pow_ui(g.sqrt_r.get_mpz_t(), p, static_cast<unsigned long>(*j) * gamma);
    mpz_class pj;
    mpz_ui_pow_ui(pj.get_mpz_t(), p, *j);
    const mpz_class ratio = (pj + 1) / static_cast<unsigned long>(N);  // exact since N | p^j + 1
    const bool special = N % 2 == 0 && p % 2 == 1 && gamma % 2 == 1 && mpz_odd_p(ratio.get_mpz_t());
    if (special)
        g.sign = s % 2 == 0 ? 1 : -1;
    else
        g.sign = (gamma - 1) % 2 == 0 ? 1 : -1;
    return g;
}

CycloInt davenport_hasse_lift(const CycloInt& g, std::uint32_t t)
{
    if (t == 0) throw ParameterError("extension degree must be positive");
    CycloInt r = g.pow(t);
    return t % 2 == 1 ? r : -r;
}

LiftedGaussSums::LiftedGaussSums(const FieldTable& E, std::uint32_t base_degree) : p_(E.p())
{
    if (!E.divides_degree(base_degree)) throw ParameterError("base degree must divide the extension degree");
    base_order_ = *checked_pow(p_, base_degree) - 1;
    const SubfieldView full = E.subfield(E.degree());
    hist_.assign(base_order_ * p_, 0);
    std::uint64_t a = 0;
    for (std::uint32_t t = 0; t < E.order(); ++t) {
        hist_[a * p_ + full.abs_trace[t]] += 1;
        if (++a == base_order_) a = 0;
    }
}

CycloInt LiftedGaussSums::operator()(std::uint64_t j) const
{
    const std::uint64_t N = base_order_;
    const std::uint64_t jm = j % N;
    const std::uint64_t d = N / gcd_u64(jm, N);
    const std::uint64_t jr = (jm / (N / d)) % d;
    const std::uint32_t n = as_order(static_cast<std::uint64_t>(p_) * d);
    std::vector<std::int64_t> counts(n, 0);
    for (std::uint64_t a = 0; a < N; ++a) {
        const std::uint64_t ex = jr * a % d;
        for (std::uint32_t c = 0; c < p_; ++c) {
            const std::int64_t h = hist_[a * p_ + c];
            if (h) counts[(p_ * ex + d * c) % n] += h;
        }
    }
    return CycloInt::from_counts(n, counts);
}

namespace {

struct TowerDegrees {
    std::uint32_t k;
    std::uint64_t qf;
};

TowerDegrees tower_degrees(const FieldTable& F, std::uint32_t e, std::uint32_t f)
{
    if (e == 0 || f == 0 || F.degree() % e != 0) throw ParameterError("e must divide the field degree");
    const std::uint32_t k = F.degree() / e;
    if (k % f != 0) throw ParameterError("f must divide k");
    return {k, *checked_pow(F.p(), e * f)};
}

}  // namespace

CycloInt monomial_char_sum_direct(const FieldTable& F, std::uint32_t e, std::uint32_t f, FieldElement b)
{
    if (b.is_zero()) throw ParameterError("b must be nonzero");
    const auto deg = tower_degrees(F, e, f);
    const SubfieldView full = F.subfield(F.degree());
    const std::uint64_t N = F.order();
    const std::uint64_t step = (deg.qf - 1) % N;
    std::vector<std::int64_t> counts(F.p(), 0);
    std::uint64_t ex = b.exponent();
    for (std::uint64_t t = 0; t < N; ++t) {
        counts[full.abs_trace[ex]] += 1;
        ex = (ex + step) % N;
    }
    return CycloInt::from_counts(F.p(), counts);
}

CycloInt monomial_char_sum_gauss(const FieldTable& F, std::uint32_t e, std::uint32_t f, FieldElement b)
{
    if (b.is_zero()) throw ParameterError("b must be nonzero");
    const auto deg = tower_degrees(F, e, f);
    const std::uint32_t kf = deg.k / f;
    const SubfieldView sub = F.subfield(e * f);
    const std::uint64_t Nf = sub.order();
    const std::uint32_t n = as_order(F.p() * Nf);
    const std::uint64_t s = sub.log(F.norm(b, F.degree(), e * f));
    CycloInt total(n);
    for (std::uint64_t j = 0; j < Nf; ++j) {
        const CycloInt g = gauss_sum_direct(sub, j).pow(kf).lift(n);
        // conj(psi_1^j)(beta^s) = zeta_{Nf}^{-js} = zeta_n^{-p j s}
        const std::int64_t shift = -static_cast<std::int64_t>(F.p() * (j * s % Nf));
        total += g.shifted(shift);
    }
    return kf % 2 == 1 ? total : -total;
}

CycloInt monomial_char_sum(const FieldTable& F, std::uint32_t e, std::uint32_t f, FieldElement b)
{
    CycloInt direct = monomial_char_sum_direct(F, e, f, b);
    const CycloInt via_gauss = monomial_char_sum_gauss(F, e, f, b);
    if (!(direct == via_gauss))
        throw ConsistencyError("monomial character sum routes disagree: " + direct.to_string() + " vs " +
                               via_gauss.to_string());
    return direct;
}

CycloInt power_char_sum_direct(const FieldTable& F, std::uint64_t m, FieldElement a0, FieldElement a1)
{
    if (m == 0) throw ParameterError("exponent m must be positive");
    const SubfieldView full = F.subfield(F.degree());
    std::vector<std::int64_t> counts(F.p(), 0);
    auto tr = [&](FieldElement x) { return x.is_zero() ? 0u : full.abs_trace[x.exponent()]; };
    counts[tr(a1)] += 1;  // c = 0
    for (std::uint32_t t = 0; t < F.order(); ++t) {
        const FieldElement c = FieldElement::exp(t);
        counts[tr(F.add(F.mul(a0, F.pow(c, static_cast<std::int64_t>(m % F.order()))), a1))] += 1;
    }
    return CycloInt::from_counts(F.p(), counts);
}

CycloInt power_char_sum_gauss(const FieldTable& F, std::uint64_t m, FieldElement a0, FieldElement a1)
{
    if (m == 0) throw ParameterError("exponent m must be positive");
    if (a0.is_zero()) throw ParameterError("a0 must be nonzero");
    const SubfieldView full = F.subfield(F.degree());
    const std::uint64_t N = F.order();
    const std::uint64_t s = gcd_u64(m % N == 0 ? N : m, N);
    const std::uint32_t n = as_order(F.p() * s);
    CycloInt total(n);
    for (std::uint64_t j = 1; j < s; ++j) {
        // lambda = psi_{N/s}; conj(lambda^j)(alpha^t) = zeta_s^{-j t} = zeta_n^{-p j t}
        const CycloInt g = gauss_sum_direct(full, j * (N / s)).lift(n);
        total += g.shifted(-static_cast<std::int64_t>(F.p() * (j * a0.exponent() % s)));
    }
    const std::uint32_t tr1 = a1.is_zero() ? 0 : full.abs_trace[a1.exponent()];
    return total * CycloInt::zeta(F.p(), tr1);
}

std::pair<CycloInt, CycloInt> unity_power_sums(std::uint64_t q, std::uint64_t s)
{
    if (q % 2 == 0) throw ParameterError("q must be odd");
    if (s < 1 || s > q) throw ParameterError("s must lie in [1, q]");
    if (s == (q + 1) / 2) throw ParameterError("s must differ from (q+1)/2");
    const std::uint32_t n = as_order(q + 1);
    CycloInt odd(n), even(n);
    for (std::uint64_t i = 1; i <= q; i += 2) odd += CycloInt::zeta(n, static_cast<std::int64_t>(i * s % n));
    for (std::uint64_t i = 2; i + 1 <= q; i += 2) even += CycloInt::zeta(n, static_cast<std::int64_t>(i * s % n));
    return {odd, even};
}

}  // namespace tncodes
