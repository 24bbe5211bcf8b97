#include "ntor/poly.hpp"

#include <doctest.h>

#include <random>

using namespace ntor;

namespace {

UPoly up(std::initializer_list<long> c)
{
    std::vector<mpq_class> v;
    for (long x : c) v.emplace_back(x);
    return UPoly(v);
}

UPoly expand(const Factorization& f)
{
    UPoly r = UPoly::constant(f.lead);
    for (const auto& [q, m] : f.factors)
        for (int i = 0; i < m; ++i) r = r * q;
    return r;
}

}  // namespace

TEST_CASE("univariate division and gcd")
{
    UPoly a = up({-1, 0, 1});  // t^2 - 1
    UPoly b = up({1, 1});
    auto [q, r] = divmod(a, b);
    CHECK(q == up({-1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(a, up({-1, 1}) * up({2, 1})) == up({-1, 1}));
    XGcd g = xgcd(up({1, 0, 1}), up({0, 1}));
    CHECK(g.g == up({1}));
    CHECK(g.s * up({1, 0, 1}) + g.t * up({0, 1}) == g.g);
}

TEST_CASE("factorization of known polynomials")
{
    // (t^2 - t + 1)^2 (t - 2)(3t + 1) * -5
    UPoly p = up({1, -1, 1}) * up({1, -1, 1}) * up({-2, 1}) * up({1, 3});
    p = p.scaled(-5);
    Factorization f = factor(p);
    CHECK(expand(f) == p);
    CHECK(f.factors.size() == 3);
    int total = 0;
    for (auto& [q, m] : f.factors) total += m * q.degree();
    CHECK(total == 6);

    // x^4 + 1 is irreducible over Q but splits mod every prime
    Factorization g = factor(up({1, 0, 0, 0, 1}));
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].first.degree() == 4);

    // x^8 - 1 = (x-1)(x+1)(x^2+1)(x^4+1)
    Factorization h = factor(up({-1, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(h.factors.size() == 4);
    CHECK(expand(h) == up({-1, 0, 0, 0, 0, 0, 0, 0, 1}));
}

TEST_CASE("randomized factorization round trip")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(-4, 4), deg(1, 3), cnt(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        UPoly p = UPoly::constant(1);
        int k = cnt(rng);
        for (int i = 0; i < k; ++i) {
            std::vector<mpq_class> v;
            int d = deg(rng);
            for (int j = 0; j <= d; ++j) v.emplace_back(c(rng));
            if (v.back() == 0) v.back() = 1;
            p = p * UPoly(v);
        }
        if (p.is_zero()) continue;
        Factorization f = factor(p);
        CHECK(expand(f) == p);
        for (auto& [q, m] : f.factors) CHECK(q.lead() == 1);
    }
}

TEST_CASE("multivariate gcd and exact division")
{
    MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1), one = MPoly::constant(2, 1);
    MPoly a = (x + y) * (x - one) * (x - one);
    MPoly b = (x + y) * (x - one) * (y + one);
    MPoly g = gcd(a, b);
    CHECK(g == ((x + y) * (x - one)).normalized());
    CHECK(exact_div(a, g) * g == a);
    CHECK_THROWS(exact_div(a, y + one));
    CHECK(gcd(a, MPoly(2)) == a.normalized());
}
