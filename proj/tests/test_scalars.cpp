#include "ntor/scalars.hpp"

#include <doctest.h>

#include <random>

using namespace ntor;

namespace {

Scalar random_scalar(const FieldPtr& f, std::mt19937& rng)
{
    std::uniform_int_distribution<int> c(-5, 5);
    switch (f->kind()) {
    case FieldKind::Cyclotomic: {
        std::vector<mpq_class> v;
        for (int i = 0; i < f->degree(); ++i) v.emplace_back(c(rng), 1 + (rng() % 3));
        return Scalar::from_coords(f, v);
    }
    case FieldKind::RationalFunctions: {
        Scalar t = Scalar::variable(f, 0);
        Scalar num = Scalar::from_int(f, c(rng)) + Scalar::from_int(f, c(rng)) * t + t.pow(2);
        Scalar den = Scalar::from_int(f, 1 + rng() % 3) + Scalar::from_int(f, c(rng)) * t.pow(-1);
        if (den.is_zero()) den = Scalar::from_int(f, 1);
        return num / den;
    }
    default: return Scalar::from_rational(f, mpq_class(c(rng), 1 + rng() % 5));
    }
}

}  // namespace

TEST_CASE("conjugation examples")
{
    auto q = Field::rationals();
    CHECK(parse_scalar("3/2", q).conj() == parse_scalar("3/2", q));
    auto c5 = Field::cyclotomic(5);
    CHECK(Scalar::zeta(c5, 1).conj() == Scalar::zeta(c5, 4));
    auto qt = Field::rational_functions(1);
    CHECK(parse_scalar("1 - t", qt).conj() == parse_scalar("1 - t^-1", qt));
}

TEST_CASE("involution is a field automorphism (randomized)")
{
    std::mt19937 rng(11);
    std::vector<FieldPtr> fields = {Field::rationals(), Field::prime(7), Field::cyclotomic(12),
                                    Field::cyclotomic(7), Field::rational_functions(1)};
    for (const auto& f : fields) {
        for (int i = 0; i < 60; ++i) {
            Scalar s = random_scalar(f, rng), u = random_scalar(f, rng);
            CHECK(s.conj().conj() == s);
            CHECK((s * u).conj() == s.conj() * u.conj());
            CHECK((s + u).conj() == s.conj() + u.conj());
            if (!s.is_zero()) CHECK(s * s.inv() == Scalar::from_int(f, 1));
        }
    }
}

TEST_CASE("cyclotomic arithmetic")
{
    auto f = Field::cyclotomic(6);
    Scalar z = Scalar::zeta(f, 1);
    CHECK(z.pow(6).is_one());
    CHECK(z.pow(3) == Scalar::from_int(f, -1));
    CHECK(z * z.conj() == Scalar::from_int(f, 1));
    // |1 - zeta_6|^2 = 1
    Scalar one = Scalar::from_int(f, 1);
    CHECK((one - z) * (one - z).conj() == one);
    auto e = z.to_complex();
    CHECK(std::abs(e - std::polar(1.0L, std::numbers::pi_v<long double> / 3)) < 1e-15L);
}

TEST_CASE("prime field")
{
    auto f = Field::prime(7);
    CHECK(parse_scalar("3 mod 7", f).residue() == 3);
    CHECK(parse_scalar("1/3", f) * Scalar::from_int(f, 3) == Scalar::from_int(f, 1));
    CHECK(Scalar::from_int(f, -1).residue() == 6);
    CHECK_THROWS_AS(Field::prime(8), ValidationError);
}

TEST_CASE("rational functions normalize")
{
    auto f = Field::rational_functions(1);
    Scalar a = parse_scalar("(t^2 - 1)/(t - 1)", f);
    CHECK(a == parse_scalar("t + 1", f));
    Scalar b = parse_scalar("(1 - t)/(1 + t^-1)", f);
    CHECK(b * parse_scalar("1 + t^-1", f) == parse_scalar("1 - t", f));
    CHECK(parse_scalar(b.str(), f) == b);
    auto f2 = Field::rational_functions(2);
    Scalar c = parse_scalar("t1*t2 - 1", f2);
    CHECK(c.conj() == parse_scalar("t1^-1*t2^-1 - 1", f2));
}

TEST_CASE("parse round trip and errors")
{
    auto c = Field::cyclotomic(8);
    std::mt19937 rng(3);
    for (int i = 0; i < 50; ++i) {
        Scalar s = random_scalar(c, rng);
        CHECK(parse_scalar(s.str(), c) == s);
    }
    auto q = Field::rationals();
    CHECK(parse_scalar("-(2 + 3)*4/6", q) == Scalar::from_rational(q, mpq_class(-10, 3)));
    CHECK_THROWS_AS(parse_scalar("2 +", q), ParseError);
    CHECK_THROWS_AS(parse_scalar("z", q), ParseError);
    try {
        parse_scalar("1 + $", q);
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
    CHECK_THROWS_AS(parse_scalar("1/0", q), ParseError);
    CHECK_THROWS_AS(parse_scalar("3 mod 5", Field::prime(7)), ParseError);
}
