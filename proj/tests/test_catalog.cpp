#include "ntor/catalog.hpp"

#include <doctest.h>

#include <numeric>

using namespace ntor;

TEST_CASE("catalog identities verify")
{
    for (long p : {2L, 5L, 7L})
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            LensSpace L = lens_space(p, q);
            CHECK(verify_identity(L.pres, L.identity));
        }
    for (auto abk : std::vector<std::array<long, 3>>{{1, 1, 3}, {1, 2, 1}, {2, 3, 1}}) {
        Seifert s = seifert(SeifertSpec::from_abk(abk[0], abk[1], abk[2]));
        CHECK(verify_identity(s.pres, s.identity));
        CHECK(s.sigma->is_cycle(s.pres));
    }
    for (long beta : {-2L, 1L, 2L, 3L}) {
        TorusBundle tb = torus_bundle({-1, beta, 0, -1});
        CHECK(verify_identity(tb.pres, tb.identity));
        CHECK(tb.fiber.is_cycle(tb.pres));
        CHECK(tb.sigma_plus.is_cycle(tb.pres));
    }
    NamedPresentation t = t3();
    CHECK(verify_identity(t.pres, t.identity));
}

TEST_CASE("Seifert parameters from (a, b, k)")
{
    SeifertSpec s = SeifertSpec::from_abk(1, 2, 1);
    CHECK(s.l == 6);
    CHECK(s.m == 3);
    CHECK(s.n == 2);
    CHECK_THROWS_AS(SeifertSpec::from_abk(0, 1, 1), ValidationError);
    CHECK_THROWS_AS(seifert({1, 2, 0, {}}), ValidationError);
}

TEST_CASE("SU(2) pairs satisfy the spectral conditions")
{
    int checked = 0;
    for (auto abk : std::vector<std::array<long, 3>>{{1, 1, 3}, {1, 1, 4}, {1, 2, 1}}) {
        Seifert s = seifert(SeifertSpec::from_abk(abk[0], abk[1], abk[2]));
        for (int sign : {1, -1})
            for (const SL2SpectraSpec& sp : s.spectra(sign)) {
                SU2Pair P = s.su2(sp);
                FieldPtr f = P.field;
                Scalar one = Scalar::from_int(f, 1);
                CHECK(det(P.A) == one);
                CHECK(det(P.B) == one);
                // traces match the prescribed spectra
                CHECK(P.A(0, 0) + P.A(1, 1) == P.alpha + P.alpha.inv());
                CHECK(P.B(0, 0) + P.B(1, 1) == P.beta + P.beta.inv());
                Mat AB = P.A * P.B;
                CHECK(AB(0, 0) + AB(1, 1) == P.gamma + P.gamma.inv());
                CHECK(P.alpha.pow(s.spec.l) == Scalar::from_int(f, sign));
                if (P.completion == "su2") CHECK(P.rho.is_unitary());
                CHECK_NOTHROW(P.psi.check(P.rho));
                ++checked;
            }
    }
    CHECK(checked > 20);
}

TEST_CASE("cyclotomic square roots")
{
    for (auto [num, den] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {3, 4}, {5, 9}, {1, 2}, {6, 1}}) {
        mpq_class q(num, den);
        CyclotomicSqrt r = cyclotomic_sqrt(q, 4);
        FieldPtr f = Field::cyclotomic(r.order);
        CHECK(r.order % 4 == 0);
        CHECK(r.value * r.value == Scalar::from_rational(f, q));
        CHECK(r.value.to_complex().real() > 0);
    }
}

TEST_CASE("torus bundle solver and representations")
{
    for (long beta : {1L, 2L, 3L}) {
        TorusBundle tb = torus_bundle({-1, beta, 0, -1});
        auto pts = tb.solve(12);
        CHECK(!pts.empty());
        for (const TorusPoint& pt : pts) {
            Representation r = tb.rho(pt);
            CHECK(r.is_unitary());
            for (const Word& rel : tb.pres.relators) CHECK(r.word(rel) == Mat::identity(r.field(), 2));
            CHECK((beta * pt.v.num) % pt.v.den == 0);
            CHECK(det(r.image(0)) == Scalar::from_int(r.field(), 1));
            CHECK_NOTHROW(tb.adjoint(pt));
        }
        CHECK(tb.volume_family().components.size() == static_cast<size_t>(beta));
    }
    CHECK_THROWS_AS(torus_bundle({2, 1, 1, 1}), ValidationError);
    CHECK_THROWS_AS(torus_bundle({-1, 2, 0, -1}).solve(0), ValidationError);
}

TEST_CASE("roots of unity")
{
    RootOfUnity z{3, 12};
    CHECK(z.reduced_den() == 4);
    FieldPtr f = Field::cyclotomic(12);
    CHECK(z.in(f) == Scalar::zeta(f, 3));
    CHECK(z.in(f).pow(4) == Scalar::from_int(f, 1));
    CHECK_THROWS_AS(RootOfUnity({1, 5}).in(f), ValidationError);
}
