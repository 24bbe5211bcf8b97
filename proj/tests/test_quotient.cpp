#include "ntor/quotient.hpp"

#include <doctest.h>

#include <random>

using namespace ntor;

namespace {

Scalar random_laurent(const FieldPtr& f, std::mt19937& rng)
{
    std::uniform_int_distribution<int> c(-3, 3), d(0, 3);
    Scalar t = Scalar::variable(f, 0);
    auto poly = [&] {
        Scalar p = Scalar::from_int(f, 0);
        int deg = d(rng);
        for (int i = 0; i <= deg; ++i) p += Scalar::from_int(f, c(rng)) * t.pow(i);
        if (p.is_zero()) p = Scalar::from_int(f, 1 + rng() % 3);
        return p;
    };
    return poly() / poly() * t.pow(c(rng));
}

// Brute-force oracle: quadratic residues mod p by exhaustive squaring.
bool residue_oracle(std::uint64_t a, std::uint64_t p)
{
    for (std::uint64_t x = 1; x < p; ++x)
        if (x * x % p == a % p) return true;
    return false;
}

}  // namespace

TEST_CASE("rationals modulo squares")
{
    auto q = Field::rationals();
    auto sq = QuotientDescriptor::parse("squares", q);
    CHECK(canonical_class(parse_scalar("18", q), sq).canonical.squarefree == 2);
    CHECK(canonical_class(parse_scalar("-3/12", q), sq).canonical.squarefree == -1);
    CHECK(canonical_class(parse_scalar("5/7", q), sq).canonical.squarefree == 35);
    CHECK_THROWS_AS(canonical_class(Scalar::from_int(q, 0), sq), ValidationError);
}

TEST_CASE("prime field residue bit against exhaustive squaring")
{
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        auto f = Field::prime(p);
        auto sq = QuotientDescriptor::parse("squares", f);
        for (std::uint64_t a = 1; a < p; ++a) {
            auto c = canonical_class(Scalar::from_int(f, static_cast<long>(a)), sq);
            CHECK(c.canonical.nonresidue == !residue_oracle(a, p));
        }
    }
    auto f7 = Field::prime(7);
    CHECK(canonical_class(Scalar::from_int(f7, 3), QuotientDescriptor::parse("squares", f7)).canonical.nonresidue);
}

TEST_CASE("Q(t) examples with monomial units")
{
    auto f = Field::rational_functions(1);
    auto q = QuotientDescriptor::parse("norms+monomials", f);
    auto a = canonical_class(parse_scalar("(1 - t)^2", f), q).canonical;
    CHECK(a.z4 == 2);
    CHECK(a.e_exp == 0);
    CHECK(!a.is_identity());
    CHECK(combine(a, a).is_identity());
    auto b = canonical_class(parse_scalar("(t - 1)*(1 + t^-1)", f), q).canonical;
    CHECK(b.z4 == 1);
    ClassPayload acc = b;
    int order = 1;
    while (!acc.is_identity()) {
        acc = combine(acc, b);
        ++order;
    }
    CHECK(order == 4);
    // -1 is the square of the order-4 generator
    CHECK(canonical_class(parse_scalar("-1", f), q).canonical.equals(combine(b, b), 0));
}

TEST_CASE("reciprocity")
{
    auto f = Field::rational_functions(1);
    CHECK(is_reciprocal(parse_scalar("t + 1", f)));
    CHECK(is_reciprocal(parse_scalar("t^2 + t + 1", f)));
    CHECK(!is_reciprocal(parse_scalar("t - 2", f)));
    CHECK_THROWS_AS(is_reciprocal(Scalar::from_int(f, 0)), ValidationError);
}

TEST_CASE("homomorphism, norms and monomial invariance (randomized)")
{
    auto f = Field::rational_functions(1);
    auto q = QuotientDescriptor::parse("norms+monomials", f);
    auto qn = QuotientDescriptor::parse("norms", f);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> k(-4, 4);
    for (int i = 0; i < 200; ++i) {
        Scalar s = random_laurent(f, rng), u = random_laurent(f, rng);
        auto cs = canonical_class(s, qn).canonical, cu = canonical_class(u, qn).canonical;
        CHECK(canonical_class(s * u, qn).canonical.equals(combine(cs, cu), 0));
        CHECK(canonical_class(s * s.conj(), qn).canonical.is_identity());
        Scalar tk = Scalar::variable(f, 0).pow(k(rng));
        CHECK(canonical_class(tk * s, q).canonical.equals(canonical_class(s, q).canonical, 0));
        CHECK(is_reciprocal(s) == cs.asym.empty());
    }
}

TEST_CASE("cyclotomic unit-circle classes")
{
    auto f = Field::cyclotomic(12);
    auto qn = QuotientDescriptor::parse("norms", f);
    auto qs = QuotientDescriptor::parse("norms+sign", f);
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int i = 0; i < 200; ++i) {
        std::vector<mpq_class> v, w;
        for (int j = 0; j < f->degree(); ++j) {
            v.emplace_back(c(rng));
            w.emplace_back(c(rng));
        }
        Scalar s = Scalar::from_coords(f, v), u = Scalar::from_coords(f, w);
        if (s.is_zero() || u.is_zero()) continue;
        auto cs = canonical_class(s, qn).canonical;
        CHECK(std::abs(std::abs(cs.unit) - 1.0L) < 1e-12L);
        CHECK(canonical_class(s * u, qn).canonical.equals(combine(cs, canonical_class(u, qn).canonical), 1e-12));
        CHECK(canonical_class(s * s.conj(), qn).canonical.is_identity());
        CHECK(canonical_class(-s, qs).canonical.equals(canonical_class(s, qs).canonical, 1e-12));
    }
}

TEST_CASE("two variables give partial classes")
{
    auto f = Field::rational_functions(2);
    auto q = QuotientDescriptor::parse("norms+monomials", f);
    auto c = canonical_class(parse_scalar("4*t1*(t1*t2 - 1)", f), q);
    CHECK(c.partial());
    CHECK(c.same_class(canonical_class(parse_scalar("t2^3*(t1*t2 - 1)", f), q)));
}

TEST_CASE("descriptor parsing")
{
    auto f = Field::cyclotomic(6);
    CHECK(QuotientDescriptor::parse("norms+mu3", f).units.root_order == 3);
    CHECK_THROWS_AS(QuotientDescriptor::parse("norms+mu5", f), ValidationError);
    CHECK_THROWS_AS(QuotientDescriptor::parse("cubes", f), ValidationError);
    CHECK_THROWS_AS(QuotientDescriptor::parse("norms+monomials", f), ValidationError);
}
