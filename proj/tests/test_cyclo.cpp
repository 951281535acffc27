#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "tncodes/cyclo.hpp"

using namespace tncodes;

namespace {

using ZPoly = std::vector<mpz_class>;  // constant term first

void trim(ZPoly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Exact division of monic integer polynomials.
ZPoly exact_div(ZPoly a, const ZPoly& b)
{
    ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    for (std::size_t i = a.size(); i-- >= b.size();) {
        const mpz_class c = a[i];
        q[i - b.size() + 1] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[i - b.size() + 1 + j] -= c * b[j];
        if (i == b.size() - 1) break;
    }
    trim(a);
    REQUIRE(a.empty());
    return q;
}

ZPoly remainder(ZPoly a, const ZPoly& b)
{
    trim(a);
    while (a.size() >= b.size()) {
        const mpz_class c = a.back();
        const std::size_t sh = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[sh + j] -= c * b[j];
        trim(a);
    }
    return a;
}

// Phi_n from x^n - 1 = prod_{d | n} Phi_d.
ZPoly cyclotomic_poly(std::uint32_t n)
{
    static std::map<std::uint32_t, ZPoly> memo;
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    ZPoly r(n + 1, 0);
    r[0] = -1;
    r[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d)
        if (n % d == 0) r = exact_div(r, cyclotomic_poly(d));
    return memo[n] = r;
}

ZPoly reduce(const CycloInt& x)
{
    return remainder(x.coeffs(), cyclotomic_poly(x.order()));
}

CycloInt random_cyclo(std::mt19937& rng, std::uint32_t n, int spread)
{
    CycloInt r(n);
    for (std::uint32_t i = 0; i < n; ++i)
        if (rng() % 3 == 0) r += CycloInt::scalar(n, static_cast<long>(rng() % (2 * spread + 1)) - spread).shifted(i);
    return r;
}

// Product in Z[x]/(x^n - 1) computed coefficient by coefficient.
CycloInt naive_product(const CycloInt& a, const CycloInt& b)
{
    const std::uint32_t n = a.order();
    CycloInt r(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (a.coeff(i) != 0 && b.coeff(j) != 0) r += CycloInt::scalar(n, a.coeff(i) * b.coeff(j)).shifted(i + j);
    return r;
}

// Literal G(psi_j o N, chi) over F: sum over x != 0 of zeta_{r-1}^{j log N(x)} zeta_p^{Tr(x)}.
CycloInt literal_lifted_gauss(const FieldTable& F, std::uint32_t base_degree, std::uint64_t j)
{
    const SubfieldView base = F.subfield(base_degree);
    const std::uint32_t N = base.order();
    const std::uint32_t n = F.p() * N;
    std::vector<std::int64_t> counts(n, 0);
    for (std::uint32_t t = 0; t < F.order(); ++t) {
        const FieldElement x = F.exp(t);
        const std::uint64_t l = base.log(F.norm(x, F.degree(), base_degree));
        const std::uint32_t tr = F.abs_trace(x);
        counts[(F.p() * (j * l % N) + N * tr) % n] += 1;
    }
    return CycloInt::from_counts(n, counts);
}

}  // namespace

TEST_CASE("canonical reduction matches division by the cyclotomic polynomial")
{
    std::mt19937 rng(11);
    for (std::uint32_t n = 1; n <= 72; ++n) {
        for (int trial = 0; trial < 6; ++trial) {
            const CycloInt x = random_cyclo(rng, n, 5);
            const CycloInt c = x.canonical();
            CHECK(reduce(x - c).empty());
            CHECK(c.canonical().coeffs() == c.coeffs());
            CHECK(x.is_zero() == reduce(x).empty());
            const ZPoly rx = reduce(x);
            const bool scalar = rx.size() <= 1;
            CHECK(x.try_rational().has_value() == scalar);
            if (scalar) CHECK(*x.try_rational() == (rx.empty() ? mpz_class(0) : rx[0]));
        }
        // a multiple of Phi_n is zero
        CycloInt phi(n);
        const ZPoly f = cyclotomic_poly(n);
        for (std::size_t i = 0; i < f.size() && i < n; ++i) phi += CycloInt::scalar(n, f[i]).shifted(i);
        if (f.size() <= n) CHECK(phi.shifted(rng() % n).is_zero());
    }
}

TEST_CASE("ring operations")
{
    std::mt19937 rng(3);
    for (std::uint32_t n : {1u, 2u, 6u, 12u, 15u, 30u, 45u}) {
        const CycloInt a = random_cyclo(rng, n, 4), b = random_cyclo(rng, n, 4);
        CHECK((a * b).coeffs() == naive_product(a, b).coeffs());
        CycloInt big = a;
        big *= mpz_class("123456789012345678901234567890");
        CHECK((big * b).coeffs() == naive_product(big, b).coeffs());
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a * b == b * a);
        CHECK((a + b) * a == a * a + b * a);
        CHECK((a - a).is_zero());
        CHECK(a.pow(3) == a * a * a);
    }
    for (std::uint32_t n = 2; n <= 20; ++n) {
        CycloInt s(n);
        for (std::uint32_t i = 0; i < n; ++i) s += CycloInt::zeta(n, i);
        CHECK(s.is_zero());
    }
    const CycloInt x = CycloInt::scalar(3, 1) + CycloInt::zeta(3, 1);
    const CycloInt y = CycloInt::scalar(3, 1) + CycloInt::zeta(3, 2);
    CHECK((x * y).as_rational_integer() == 1);
    CHECK_THROWS_AS(CycloInt::zeta(5, 1).as_rational_integer(), ConsistencyError);
    // mixed orders combine in the lcm ring
    CHECK(CycloInt::zeta(2, 1) * CycloInt::zeta(3, 1) == CycloInt::zeta(6, 5));
    CHECK(CycloInt::zeta(4, 1).lift(12) == CycloInt::zeta(12, 3));
    CHECK(CycloInt::zeta(7, 2).galois(3) == CycloInt::zeta(7, 6));
}

TEST_CASE("character orthogonality")
{
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}}) {
        const FieldTable F(p, m);
        for (std::uint32_t ai = 0; ai < F.size(); ++ai) {
            const AddChar ch{&F, m, F.from_coords(ai)};
            CycloInt s(p);
            for (std::uint32_t xi = 0; xi < F.size(); ++xi) s += eval_add_char(ch, F.from_coords(xi));
            CHECK(s.as_rational_integer() == (ai == 0 ? static_cast<long>(F.size()) : 0));
        }
        for (std::uint64_t j = 0; j < F.order(); ++j) {
            const MultChar ch{&F, m, j};
            CycloInt s(F.order());
            for (std::uint32_t t = 0; t < F.order(); ++t) s += eval_mult_char(ch, F.exp(t));
            CHECK(s.as_rational_integer() == (j == 0 ? static_cast<long>(F.order()) : 0));
        }
    }
    const FieldTable F4(2, 2);
    CHECK(eval_add_char({&F4, 2, F4.one()}, F4.zero()) == CycloInt::scalar(2, 1));
    CHECK(eval_add_char({&F4, 2, F4.one()}, F4.alpha()).as_rational_integer() == -1);
    CHECK(eval_mult_char({&F4, 2, 1}, F4.exp(2)) == CycloInt::zeta(3, 2));
    CHECK(eval_mult_char({&F4, 2, 0}, F4.exp(1)).as_rational_integer() == 1);
    CHECK_THROWS_AS(eval_mult_char({&F4, 2, 1}, F4.zero()), ParameterError);
    CHECK(MultChar{&F4, 2, 1}.order() == 3);
}

TEST_CASE("direct Gauss sums")
{
    const FieldTable F9(3, 2), F4(2, 2), F8(2, 3);
    CHECK(gauss_sum_direct(F9, 0).as_rational_integer() == -1);
    CHECK(gauss_sum_direct(F9, 2).as_rational_integer() == -3);  // order 4
    CHECK(gauss_sum_direct(F9, 6).as_rational_integer() == -3);
    const CycloInt g4 = gauss_sum_direct(F4, 1);
    CHECK((g4 * g4.conj()).as_rational_integer() == 4);
    for (std::uint64_t j = 1; j < 7; ++j) {
        const CycloInt g = gauss_sum_direct(F8, j);
        CHECK_FALSE(g.try_rational().has_value());
        CHECK((g * g.conj()).as_rational_integer() == 8);
    }
    // conjugate identity G(conj psi) = psi(-1) conj(G(psi))
    const FieldTable F25(5, 2);
    for (std::uint64_t j = 1; j < F25.order(); ++j) {
        const CycloInt lhs = gauss_sum_direct(F25, F25.order() - j);
        const CycloInt rhs = eval_mult_char({&F25, 2, j}, F25.minus_one()) * gauss_sum_direct(F25, j).conj();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("semi-primitive Gauss sums")
{
    CHECK(semiprimitive_exponent(3, 4) == 1u);
    CHECK(semiprimitive_exponent(2, 7) == std::nullopt);
    CHECK(gauss_sum_semiprimitive(3, 4, 1).value() == -3);
    CHECK(gauss_sum_semiprimitive(2, 3, 1).value() == 2);
    CHECK(gauss_sum_semiprimitive(2, 5, 1, 2).value() == 4);
    CHECK(gauss_sum_direct(FieldTable(2, 2), 1).as_rational_integer() == 2);
    CHECK(gauss_sum_direct(FieldTable(2, 4), 6).as_rational_integer() == 4);  // lambda = psi_3, lambda^2 = psi_6
    CHECK_THROWS_AS(gauss_sum_semiprimitive(2, 7, 1), ParameterError);
    CHECK_THROWS_AS(gauss_sum_semiprimitive(3, 2, 1), ParameterError);
    CHECK_THROWS_AS(gauss_sum_semiprimitive(3, 4, 1, 4), ParameterError);
}

TEST_CASE("Davenport-Hasse lifting")
{
    const CycloInt g = gauss_sum_direct(FieldTable(2, 2), 1);
    CHECK(davenport_hasse_lift(g, 1) == g);

    const FieldTable F16(2, 4);
    CHECK(davenport_hasse_lift(g, 2).as_rational_integer() == -4);
    CHECK(literal_lifted_gauss(F16, 2, 1).as_rational_integer() == -4);
    const LiftedGaussSums lifted16(F16, 2);
    for (std::uint64_t j = 0; j < 3; ++j) CHECK(lifted16(j) == literal_lifted_gauss(F16, 2, j));

    const CycloInt g9 = gauss_sum_direct(FieldTable(3, 2), 2);
    CHECK(davenport_hasse_lift(g9, 3).as_rational_integer() == -27);
    const FieldTable F729(3, 6);
    CHECK(literal_lifted_gauss(F729, 2, 2).as_rational_integer() == -27);
    const LiftedGaussSums lifted729(F729, 2);
    const SubfieldView base = F729.subfield(2);
    for (std::uint64_t j = 0; j < 8; ++j) {
        CHECK(lifted729(j) == literal_lifted_gauss(F729, 2, j));
        CHECK(lifted729(j) == davenport_hasse_lift(gauss_sum_direct(base, j), 3));
    }
}

TEST_CASE("monomial character sums agree on both routes")
{
    const FieldTable F16(2, 4);
    CHECK(monomial_char_sum_direct(F16, 1, 2, F16.one()) == monomial_char_sum_gauss(F16, 1, 2, F16.one()));
    const FieldTable F64(2, 6);
    CHECK(monomial_char_sum_direct(F64, 1, 3, F64.alpha()) == monomial_char_sum_gauss(F64, 1, 3, F64.alpha()));
    const FieldTable F81(3, 4);
    for (std::uint32_t t = 0; t < F81.order(); t += 7) {
        CHECK_NOTHROW(monomial_char_sum(F81, 1, 2, F81.exp(t)));
        CHECK_NOTHROW(monomial_char_sum(F81, 2, 1, F81.exp(t)));
    }
    CHECK_THROWS_AS(monomial_char_sum(F64, 1, 4, F64.one()), ParameterError);
    CHECK_THROWS_AS(monomial_char_sum(F64, 1, 2, F64.zero()), ParameterError);
}

TEST_CASE("power character sums")
{
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 2}, {2, 4}, {5, 2}}) {
        const FieldTable F(p, m);
        for (std::uint64_t e : {1u, 2u, 3u, 4u, 6u})
            for (std::uint32_t t0 = 0; t0 < F.order(); t0 += 3)
                for (std::uint32_t i1 = 0; i1 < F.size(); i1 += 2) {
                    const FieldElement a0 = F.exp(t0), a1 = F.from_coords(i1);
                    REQUIRE(power_char_sum_direct(F, e, a0, a1) == power_char_sum_gauss(F, e, a0, a1));
                    if (e == 1) REQUIRE(power_char_sum_direct(F, e, a0, a1).is_zero());
                }
    }
}

TEST_CASE("sums of roots of unity of order q+1")
{
    for (std::uint64_t q : {3u, 5u, 7u, 9u, 25u, 27u}) {
        for (std::uint64_t s = 1; s <= q; ++s) {
            if (s == (q + 1) / 2) {
                CHECK_THROWS_AS(unity_power_sums(q, s), ParameterError);
                continue;
            }
            const auto [odd, even] = unity_power_sums(q, s);
            CHECK(odd.as_rational_integer() == 0);
            CHECK(even.as_rational_integer() == -1);
        }
    }
    CHECK_THROWS_AS(unity_power_sums(4, 1), ParameterError);
    CHECK_THROWS_AS(unity_power_sums(5, 0), ParameterError);
}
