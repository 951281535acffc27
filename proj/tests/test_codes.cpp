#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "tncodes/codes.hpp"

using namespace tncodes;

namespace {

struct Tuple {
    std::uint32_t p, e, f, k;
    std::uint64_t a;
};

// Defining set and weights straight from field operations: norm, relative
// traces and the F_q label map given by the polynomial basis in gamma.
struct LiteralCode {
    TowerSpec T;
    FieldTable F;
    std::vector<FieldElement> D;

    LiteralCode(Tuple t, bool punctured = false)
        : T{t.p, t.e, t.f, t.k}, F(t.p, t.e * t.k)
    {
        const std::uint32_t top = t.e * t.k;
        const FieldElement gamma = F.exp(F.order() / (*checked_pow(t.p, t.e) - 1));
        FieldElement a = F.zero();
        std::uint64_t rest = t.a;
        for (std::uint32_t i = 0; i < t.e; ++i, rest /= t.p)
            a = F.add(a, F.mul(F.from_prime(rest % t.p), F.pow(gamma, i)));
        std::set<FieldElement> seen;
        for (std::uint32_t s = 0; s < F.order(); ++s) {
            const FieldElement x = F.exp(s);
            const FieldElement v = F.add(F.trace(F.norm(x, top, t.e * t.f), t.e * t.f, t.e), a);
            if (!v.is_zero()) continue;
            if (punctured) {
                bool dup = false;
                for (std::uint32_t u = 0; u + 1 < *checked_pow(t.p, t.e); ++u)
                    dup = dup || seen.count(F.mul(x, F.pow(gamma, u)));
                if (dup) continue;
                seen.insert(x);
            }
            D.push_back(x);
        }
    }

    std::uint64_t weight(FieldElement b) const
    {
        std::uint64_t w = 0;
        for (FieldElement d : D) w += !F.trace(F.mul(b, d), T.top_degree(), T.e).is_zero();
        return w;
    }

    std::map<std::uint64_t, std::uint64_t> histogram() const
    {
        std::map<std::uint64_t, std::uint64_t> h;
        for (std::uint32_t i = 0; i < F.size(); ++i) ++h[weight(F.from_coords(i))];
        return h;
    }
};

WeightDistribution brute(Tuple t, bool punctured = false, unsigned workers = 1)
{
    const TowerContext ctx({t.p, t.e, t.f, t.k});
    DefiningSet D = build_defining_set(ctx, t.a);
    if (punctured) D = puncture(ctx, D);
    return brute_weight_distribution(ctx, D, workers);
}

}  // namespace

TEST_CASE("defining set sizes")
{
    const TowerContext c1({2, 2, 2, 4});
    CHECK(build_defining_set(c1, 0).size() == 51);
    const TowerContext c2({2, 1, 2, 4});
    CHECK(build_defining_set(c2, 1).size() == 10);
    const TowerContext c3({2, 1, 3, 6});
    CHECK(build_defining_set(c3, 1).size() == 36);
    CHECK(puncture(c1, build_defining_set(c1, 0)).size() == 17);
    CHECK(puncture(c2, build_defining_set(c2, 0)).exponents == build_defining_set(c2, 0).exponents);
    CHECK_THROWS_AS(puncture(c2, build_defining_set(c2, 1)), ParameterError);
    const TowerContext c4({3, 1, 1, 3});
    CHECK_THROWS_AS(build_defining_set(c4, 0), ParameterError);
    CHECK_THROWS_AS(build_defining_set(c4, 3), ParameterError);
    CHECK_THROWS_AS(TowerContext({2, 1, 3, 4}), ParameterError);
}

TEST_CASE("defining set agrees with the literal condition")
{
    for (Tuple t : std::vector<Tuple>{{2, 1, 2, 4, 0}, {2, 1, 2, 4, 1}, {2, 2, 2, 4, 0}, {2, 2, 2, 4, 3}, {3, 1, 2, 4, 2},
                                      {3, 2, 1, 2, 5}, {2, 1, 3, 6, 1}, {5, 1, 2, 4, 0}}) {
        const TowerContext ctx({t.p, t.e, t.f, t.k});
        const LiteralCode lit(t);
        const DefiningSet D = build_defining_set(ctx, t.a);
        REQUIRE(D.size() == lit.D.size());
        for (std::size_t i = 0; i < D.size(); ++i) CHECK(FieldElement::exp(D.exponents[i]) == lit.D[i]);
        for (std::size_t i = 1; i < D.size(); ++i) CHECK(D.exponents[i - 1] < D.exponents[i]);
        if (t.a == 0) {
            const LiteralCode plit(t, true);
            const DefiningSet P = puncture(ctx, D);
            REQUIRE(P.size() == plit.D.size());
            for (std::size_t i = 0; i < P.size(); ++i) CHECK(FieldElement::exp(P.exponents[i]) == plit.D[i]);
        }
    }
}

TEST_CASE("brute distribution agrees with literal codewords")
{
    for (Tuple t : std::vector<Tuple>{{2, 1, 2, 4, 0}, {2, 1, 2, 4, 1}, {2, 2, 2, 4, 0}, {2, 2, 2, 4, 2}, {3, 1, 2, 4, 1},
                                      {3, 1, 1, 3, 2}, {2, 1, 2, 6, 1}, {2, 1, 3, 6, 0}, {5, 1, 2, 4, 3}}) {
        const LiteralCode lit(t);
        const auto h = lit.histogram();
        const WeightDistribution d = brute(t);
        std::uint64_t kernel = h.count(0) ? h.at(0) : 0;
        std::map<std::uint64_t, std::uint64_t> scaled;
        for (auto [w, c] : h) scaled[w] = c / kernel;
        CHECK(d.counts == scaled);
        CHECK(d.n == lit.D.size());
        for (unsigned workers : {2u, 3u, 7u}) CHECK(brute(t, false, workers) == d);
        if (t.a == 0) {
            const LiteralCode plit(t, true);
            std::map<std::uint64_t, std::uint64_t> ph;
            for (auto [w, c] : plit.histogram()) ph[w] = c / kernel;
            CHECK(brute(t, true).counts == ph);
        }
    }
}

TEST_CASE("codewords are linear with per-coordinate trace values")
{
    const TowerContext ctx({3, 1, 2, 4});
    const FieldTable& F = ctx.field();
    const DefiningSet D = build_defining_set(ctx, 1);
    const auto zero = codeword(ctx, D, F.zero());
    for (FieldElement x : zero) CHECK(x.is_zero());
    for (std::uint32_t s = 0; s < F.order(); s += 5)
        for (std::uint32_t u = 0; u < F.order(); u += 7) {
            const auto c1 = codeword(ctx, D, F.exp(s)), c2 = codeword(ctx, D, F.exp(u));
            const auto c12 = codeword(ctx, D, F.add(F.exp(s), F.exp(u)));
            for (std::size_t i = 0; i < D.size(); ++i) REQUIRE(F.add(c1[i], c2[i]) == c12[i]);
            std::uint64_t w = 0;
            for (FieldElement x : c1) w += !x.is_zero();
            REQUIRE(w == codeword_weight(ctx, D, F.exp(s)));
        }
}

TEST_CASE("published examples")
{
    const WeightDistribution e1 = brute({2, 2, 2, 4, 0});
    CHECK(params_string(e1) == "[51,4,36]");
    CHECK(enumerator(e1).to_string() == "1+204z^36+51z^48");
    CHECK(enumerator(brute({3, 1, 2, 6, 0})).to_string() == "1+182z^108+546z^126");
    const WeightDistribution e3 = brute({2, 1, 2, 4, 1});
    CHECK(params_string(e3) == "[10,4,4]");
    CHECK(enumerator(e3).to_string() == "1+5z^4+10z^6");
    CHECK(enumerator(brute({2, 2, 2, 4, 1})).to_string() == "1+51z^48+204z^52");
    const WeightDistribution e6 = brute({2, 1, 3, 6, 1});
    CHECK(params_string(e6) == "[36,6,16]");
    CHECK(enumerator(e6).to_string() == "1+27z^16+36z^20");
    CHECK(enumerator(brute({2, 2, 2, 4, 0}, true)).to_string() == "1+204z^12+51z^16");
}

TEST_CASE("(q,f,k,a) = (2,2,6,1) has weights 20 and 24")
{
    // The weight sum over all codewords is n (q-1) q^{k-1} = 42 * 32, which
    // rules out a weight-36 class of size 21.
    const WeightDistribution d = brute({2, 1, 2, 6, 1});
    CHECK(params_string(d) == "[42,6,20]");
    CHECK(d.counts == std::map<std::uint64_t, std::uint64_t>{{0, 1}, {20, 42}, {24, 21}});
    std::uint64_t sum = 0;
    for (auto [w, c] : d.counts) sum += w * c;
    CHECK(sum == 42 * 32);
}

TEST_CASE("structural properties")
{
    for (Tuple t : std::vector<Tuple>{{2, 2, 2, 4, 0}, {3, 1, 2, 4, 0}, {5, 1, 2, 4, 0}, {3, 1, 3, 6, 0}}) {
        const TowerContext ctx({t.p, t.e, t.f, t.k});
        const DefiningSet D = build_defining_set(ctx, 0), P = puncture(ctx, D);
        CHECK(D.size() == (ctx.q() - 1) * P.size());
        for (std::uint32_t s = 0; s < ctx.order(); ++s)
            REQUIRE(codeword_weight(ctx, D, FieldElement::exp(s)) ==
                    (ctx.q() - 1) * codeword_weight(ctx, P, FieldElement::exp(s)));
        const WeightDistribution d = brute(t);
        for (auto w : d.nonzero_weights()) CHECK(w % (ctx.q() - 1) == 0);
        CHECK(d.total() == *checked_pow(ctx.q(), d.dim));
    }
}

TEST_CASE("distribution helpers")
{
    WeightDistribution z;
    z.counts = {{0, 1}};
    CHECK(enumerator(z).to_string() == "1");
    CHECK(z.dmin() == 0);
    WeightDistribution d;
    d.n = 36;
    d.dim = 6;
    d.counts = {{0, 1}, {16, 27}, {20, 36}};
    const CodeParams p = params(d);
    CHECK(p.n == 36);
    CHECK(p.dim == 6);
    CHECK(p.d == 16);
}

TEST_CASE("label map follows the polynomial basis in gamma")
{
    const TowerContext ctx({2, 2, 2, 4});
    const FieldTable& F = ctx.field();
    const FieldElement gamma = F.exp(F.order() / 3);
    CHECK(ctx.from_label(0).is_zero());
    CHECK(ctx.from_label(1) == F.one());
    CHECK(ctx.from_label(2) == gamma);
    CHECK(ctx.from_label(3) == F.add(F.one(), gamma));
    CHECK_THROWS_AS(ctx.from_label(4), ParameterError);
    const TowerContext c5({5, 1, 1, 2});
    for (std::uint32_t v = 0; v < 5; ++v) CHECK(c5.from_label(v) == c5.field().from_prime(v));
}
