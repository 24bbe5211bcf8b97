#include "ntor/catalog.hpp"

#include <doctest.h>

using namespace ntor;

TEST_CASE("Seifert case (ii) complex has the block shape (E-A; E-B), 0, (E-B, E-A)")
{
    Seifert s = seifert(SeifertSpec::from_abk(1, 1, 4));
    SU2Pair P = s.su2({{1, 4}, {3, 4}, {1, 4}});
    TwistedCochainComplex c = twisted_cochain_complex(s.pres, s.identity, P.rho);
    const FieldPtr& f = P.field;
    Mat E = Mat::identity(f, 2);
    CHECK(c.dims() == std::vector<int>{2, 4, 4, 2});
    CHECK(c.delta[0] == vstack({E - P.A, E - P.B}, f, 2));
    CHECK(c.delta[1].is_zero());
    CHECK(c.delta[2] == hstack({E - P.B, E - P.A}, f, 2));
}

TEST_CASE("trivial representation gives augmentations")
{
    Seifert s = seifert({5, 3, 2, {}});
    TwistedCochainComplex c = twisted_cochain_complex(s.pres, s.identity, Representation::trivial(s.pres, Field::rationals()));
    IntegralComplex ic = integral_complex(s.pres, s.identity);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < c.delta[k].rows(); ++i)
            for (int j = 0; j < c.delta[k].cols(); ++j)
                CHECK(c.delta[k](i, j).to_rational() == mpq_class(ic.delta[k](i, j)));
    // delta^1 entries are augmentations of Fox derivatives: n, n - m / n - l, n
    CHECK(c.delta[1](0, 0).to_rational() == 2);
    CHECK(c.delta[1](0, 1).to_rational() == -1);
}

TEST_CASE("torus bundle adjoint complex against the printed coboundaries")
{
    // Printed delta^0 and delta^2 (for any beta) agree entrywise with ours after u^2, v^2 substitution;
    // our delta^1 carries two extra beta-dependent entries in rows 1 and 3.
    TorusBundle tb = torus_bundle({-1, 2, 0, -1});
    TorusPoint pt{{1, 8}, {1, 2}};
    Representation ad = tb.adjoint(pt);
    const FieldPtr& f = ad.field();
    TwistedCochainComplex c = twisted_cochain_complex(tb.pres, tb.identity, ad);
    Scalar U = Scalar::zeta(f, 1), V = Scalar::from_int(f, 1), one = Scalar::from_int(f, 1), zero(f);
    Scalar two = Scalar::from_int(f, 2);
    // u = exp(2 pi i / 8), so u^2 = sqrt(-1) generates Q(zeta_4); v = -1, v^2 = 1
    Mat d0 = Mat::from_rows(f, {{one - U, zero, zero},
                                {zero, zero, zero},
                                {zero, zero, one - U.inv()},
                                {one - V, zero, zero},
                                {zero, zero, zero},
                                {zero, zero, one - V.inv()},
                                {one, zero, one},
                                {zero, two, zero},
                                {one, zero, one}});
    CHECK(c.delta[0] == d0);
    CHECK((c.delta[1] * c.delta[0]).is_zero());
    CHECK((c.delta[2] * c.delta[1]).is_zero());
    // the beta entry of the printed delta^1: row 2, column 5
    CHECK(c.delta[1](1, 4) == Scalar::from_int(f, -2));
    CHECK(c.delta[2](1, 7) == two);
}

TEST_CASE("representation validation")
{
    Seifert s = seifert({4, 3, 2, {}});
    FieldPtr q = Field::rationals();
    Mat E = Mat::identity(q, 2);
    Mat N = E;
    N(0, 1) = Scalar::from_int(q, 1);
    CHECK_THROWS_AS(Representation(s.pres, q, {E, N}), ValidationError);  // relators fail
    Mat Z(q, 2, 2);
    CHECK_THROWS_AS(Representation(s.pres, q, {Z, E}), ValidationError);
    Mat D = E;
    D(0, 0) = Scalar::from_int(q, -1);
    CHECK_THROWS_AS(Representation(s.pres, q, {D, E}, true), ValidationError);
    CHECK_THROWS_AS(Representation(s.pres, q, {E}), ValidationError);
}

TEST_CASE("Smith normal form")
{
    LensSpace L = lens_space(7, 3);
    IntegralTorsion t = smith_and_integral_torsion(integral_complex(L.pres, L.identity));
    CHECK(t.h1_order == 7);
    CHECK(t.magnitude == mpq_class(1, 7));
    ZMat A(3, 3);
    int v[9] = {2, 4, 4, -6, 6, 12, 10, -4, -16};
    for (int i = 0; i < 9; ++i) A.a[i] = v[i];
    SmithForm s = smith_normal_form(A);
    CHECK(s.divisors == std::vector<mpz_class>{2, 6, 12});
    CHECK(s.U * A * s.V == s.D);
    NamedPresentation t3p = t3();
    IntegralTorsion t3t = smith_and_integral_torsion(integral_complex(t3p.pres, t3p.identity));
    CHECK(t3t.h1_order == 1);
}
