#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "tncodes/gf.hpp"

using namespace tncodes;

namespace {

// Schoolbook arithmetic on coefficient vectors modulo the table's modulus;
// shares no code with the log tables.
struct PolyOracle {
    std::uint32_t p, m;
    std::vector<std::uint32_t> f;

    explicit PolyOracle(const FieldTable& F) : p(F.p()), m(F.degree()), f(F.modulus()) {}

    std::vector<std::uint32_t> unpack(std::uint32_t idx) const
    {
        std::vector<std::uint32_t> v(m);
        for (auto& c : v) {
            c = idx % p;
            idx /= p;
        }
        return v;
    }
    std::uint32_t pack(const std::vector<std::uint32_t>& v) const
    {
        std::uint32_t idx = 0;
        for (std::size_t i = m; i-- > 0;) idx = idx * p + v[i];
        return idx;
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const
    {
        auto x = unpack(a), y = unpack(b);
        for (std::uint32_t i = 0; i < m; ++i) x[i] = (x[i] + y[i]) % p;
        return pack(x);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        auto x = unpack(a), y = unpack(b);
        std::vector<std::uint64_t> prod(2 * m, 0);
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = 0; j < m; ++j) prod[i + j] += static_cast<std::uint64_t>(x[i]) * y[j];
        for (auto& c : prod) c %= p;
        for (std::size_t d = 2 * m; d-- > m;) {
            const std::uint64_t c = prod[d];
            if (!c) continue;
            for (std::uint32_t i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + (p - c) * f[i]) % p;
        }
        std::vector<std::uint32_t> r(m);
        for (std::uint32_t i = 0; i < m; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
        return pack(r);
    }
    // x^e by repeated multiplication of the packed index of x (= p for m >= 2).
    std::uint64_t order_of_x() const
    {
        const std::uint32_t x = m == 1 ? 0 : p;
        if (m == 1) return 0;
        std::uint32_t cur = x;
        for (std::uint64_t e = 1;; ++e) {
            if (cur == 1) return e;
            if (cur == 0) return 0;
            cur = mul(cur, x);
        }
    }
};

std::vector<std::pair<std::uint32_t, std::uint32_t>> small_fields(std::uint64_t max_size)
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
        for (std::uint32_t m = 1; *checked_pow(p, m) <= max_size; ++m) out.emplace_back(p, m);
    return out;
}

// x^{s} computed by the oracle, for Frobenius checks.
std::uint32_t oracle_pow(const PolyOracle& o, std::uint32_t x, std::uint64_t e)
{
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = o.mul(r, x);
        x = o.mul(x, x);
        e >>= 1;
    }
    return r;
}

}  // namespace

TEST_CASE("construction rejects bad parameters")
{
    CHECK_THROWS_AS(FieldTable(4, 2), ParameterError);
    CHECK_THROWS_AS(FieldTable(2, 0), ParameterError);
    CHECK_THROWS_AS(FieldTable(2, 21), BudgetError);
    CHECK_NOTHROW(FieldTable(2, 21, std::uint64_t{1} << 21));
}

TEST_CASE("small field facts")
{
    const FieldTable F4(2, 2);
    CHECK(F4.order() == 3);
    CHECK(F4.pow(F4.alpha(), 3) == F4.one());
    CHECK(F4.add(F4.alpha(), F4.alpha()).is_zero());
    CHECK(F4.add(F4.alpha(), F4.one()) == F4.exp(2));
    CHECK(F4.mul(F4.alpha(), F4.exp(2)) == F4.one());
    CHECK(F4.trace(F4.alpha(), 2, 1) == F4.one());

    const FieldTable F16(2, 4);
    CHECK(F16.pow(F16.alpha(), 15) == F16.one());
    const auto sub = F16.subfield(2);
    CHECK(sub.step == 5);
    std::set<FieldElement> gen;
    for (std::uint32_t s = 0; s < 3; ++s) gen.insert(F16.pow(F16.exp(5), s));
    CHECK(gen.size() == 3);
    CHECK(F16.norm(F16.alpha(), 4, 2) == F16.exp(5));
    int kernel = 0;
    for (std::uint32_t t = 0; t < 15; ++t) kernel += F16.norm(F16.exp(t), 4, 2) == F16.one();
    CHECK(kernel == 5);
    CHECK(F16.norm(F16.one(), 4, 2) == F16.one());
    CHECK(F16.norm(F16.zero(), 4, 2).is_zero());

    const FieldTable F729(3, 6);
    CHECK(F729.order() == 728);
    for (std::uint32_t t = 0; t < 728; ++t) CHECK(F729.from_coords(F729.alpha_power(t)) == F729.exp(t));

    const FieldTable F8(2, 3);
    int zeros = 0;
    for (std::uint32_t i = 0; i < 8; ++i) zeros += F8.trace(F8.from_coords(i), 3, 1).is_zero();
    CHECK(zeros == 4);
}

TEST_CASE("modulus is the least primitive polynomial")
{
    for (auto [p, m] : small_fields(1u << 10)) {
        const FieldTable F(p, m);
        PolyOracle o(F);
        if (m >= 2) CHECK(o.order_of_x() == F.order());
        const std::uint64_t pm = *checked_pow(p, m);
        for (std::uint64_t cand = 0; cand < pm; ++cand) {
            PrimePoly g(m + 1, 0);
            std::uint64_t c = cand;
            for (std::uint32_t i = 0; i < m; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[m] = 1;
            if (g == F.modulus()) break;
            CHECK_FALSE(poly::is_primitive(p, g));
        }
    }
}

TEST_CASE("zech sentinel sits exactly at -1")
{
    for (auto [p, m] : small_fields(1u << 12)) {
        const FieldTable F(p, m);
        int missing = 0;
        for (std::uint32_t t = 0; t < F.order(); ++t) {
            if (!F.zech(t)) {
                ++missing;
                CHECK(F.exp(t) == F.minus_one());
            }
        }
        CHECK(missing == 1);  // for p = 2 the excluded entry is t = 0
    }
}

TEST_CASE("table arithmetic agrees with polynomial arithmetic")
{
    std::mt19937 rng(7);
    for (auto [p, m] : small_fields(1u << 12)) {
        const FieldTable F(p, m);
        PolyOracle o(F);
        const std::uint32_t size = static_cast<std::uint32_t>(F.size());
        for (std::uint32_t t = 0; t < F.order(); ++t) CHECK(F.coords(F.from_coords(F.alpha_power(t))) == F.alpha_power(t));
        std::vector<std::uint32_t> partners;
        if (size <= 256) {
            for (std::uint32_t i = 0; i < size; ++i) partners.push_back(i);
        } else {
            for (int i = 0; i < 24; ++i) partners.push_back(rng() % size);
        }
        for (std::uint32_t a = 0; a < size; ++a)
            for (std::uint32_t b : partners) {
                const FieldElement x = F.from_coords(a), y = F.from_coords(b);
                REQUIRE(F.coords(F.add(x, y)) == o.add(a, b));
                REQUIRE(F.coords(F.mul(x, y)) == o.mul(a, b));
            }
    }
}

TEST_CASE("inverse, negation and powers")
{
    const FieldTable F(5, 3);
    CHECK_THROWS_AS(F.inv(F.zero()), ParameterError);
    for (std::uint32_t t = 0; t < F.order(); ++t) {
        const FieldElement x = F.exp(t);
        CHECK(F.mul(x, F.inv(x)) == F.one());
        CHECK(F.add(x, F.neg(x)).is_zero());
        CHECK(F.mul(x, F.zero()).is_zero());
        CHECK(F.pow(x, -3) == F.inv(F.pow(x, 3)));
    }
}

TEST_CASE("trace and norm properties on towers")
{
    for (auto [p, m] : small_fields(1u << 12)) {
        if (m == 1) continue;
        const FieldTable F(p, m);
        PolyOracle o(F);
        for (std::uint32_t to = 1; to <= m; ++to) {
            if (m % to) continue;
            const std::uint64_t s = *checked_pow(p, to);
            const auto sub = F.subfield(to);
            for (std::uint32_t i = 0; i < F.size(); ++i) {
                const FieldElement x = F.from_coords(i);
                const FieldElement t = F.trace(x, m, to);
                REQUIRE(F.in_subfield(t, to));
                // literal sum of conjugates via the oracle
                std::uint32_t acc = 0, conj = i;
                for (std::uint32_t r = 0; r < m / to; ++r) {
                    acc = o.add(acc, conj);
                    conj = oracle_pow(o, conj, s);
                }
                REQUIRE(F.coords(t) == acc);
                REQUIRE(F.trace(F.pow(x, static_cast<std::int64_t>(s)), m, to) == t);
                if (to == 1) REQUIRE(F.abs_trace(x) == F.prime_value(t));
                for (std::uint32_t mid = to; mid <= m; mid += to) {
                    if (m % mid || mid % to) continue;
                    REQUIRE(F.trace(F.trace(x, m, mid), mid, to) == t);
                    if (!x.is_zero())
                        REQUIRE(F.trace(F.pow(x, static_cast<std::int64_t>((F.size() - 1) / (*checked_pow(p, mid) - 1))),
                                        mid, to) == F.trace(F.norm(x, m, mid), mid, to));
                }
            }
            // subfield view traces agree with the relative trace
            for (std::uint32_t e = 0; e < sub.order(); ++e)
                REQUIRE(sub.abs_trace[e] == F.prime_value(F.trace(sub.gen_power(e), to, 1)));
            // surjective norm with fibres of size (r-1)/(s-1)
            std::vector<int> fibre(sub.order(), 0);
            for (std::uint32_t e = 0; e < F.order(); ++e) ++fibre[sub.log(F.norm(F.exp(e), m, to))];
            for (int c : fibre) REQUIRE(c == static_cast<int>(F.order() / sub.order()));
        }
    }
}

TEST_CASE("relative maps reject bad arguments")
{
    const FieldTable F(2, 6);
    CHECK_THROWS_AS(F.trace(F.one(), 6, 4), ParameterError);
    CHECK_THROWS_AS(F.trace(F.alpha(), 3, 1), ParameterError);
    CHECK_THROWS_AS(F.norm(F.one(), 4, 2), ParameterError);
    CHECK(F.trace(F.zero(), 6, 2).is_zero());
}

TEST_CASE("tower validation")
{
    CHECK_NOTHROW(TowerSpec{2, 2, 2, 4}.validate());
    CHECK_THROWS_AS((TowerSpec{2, 1, 3, 4}.validate()), ParameterError);
    CHECK_THROWS_AS((TowerSpec{6, 1, 1, 2}.validate()), ParameterError);
    CHECK_THROWS_AS((TowerSpec{2, 1, 1, 30}.validate()), BudgetError);
    CHECK(TowerSpec{3, 1, 2, 6}.qk() == 729);
}
