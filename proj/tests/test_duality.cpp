#include "ntor/catalog.hpp"

#include <doctest.h>

#include <random>

using namespace ntor;

namespace {

Word random_word(std::mt19937& rng, int g, int maxlen = 6)
{
    std::vector<Letter> ls;
    int len = std::uniform_int_distribution<int>(0, maxlen)(rng);
    for (int k = 0; k < len; ++k)
        ls.push_back({std::uniform_int_distribution<int>(0, g - 1)(rng), rng() % 2 ? 1 : -1});
    return Word::from_letters(ls);
}

std::vector<TensorTerm> act(const Word& u, std::vector<TensorTerm> t)
{
    for (auto& x : t) {
        x.g = u * x.g;
        x.h = u * x.h;
    }
    return t;
}

std::vector<TensorTerm> scaled(std::vector<TensorTerm> t, long long s)
{
    for (auto& x : t) x.coef *= s;
    return t;
}

std::vector<TensorTerm> sum(std::initializer_list<std::vector<TensorTerm>> parts)
{
    std::vector<TensorTerm> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

struct SeifertExample {
    Seifert S = seifert(SeifertSpec::from_abk(1, 1, 4));
    SU2Pair P = S.su2({{1, 4}, {3, 4}, {1, 4}});
    Mat Sb, Tb;
    Scalar r;
    SeifertExample()
    {
        FieldPtr f = P.field;
        Mat E = Mat::identity(f, 2);
        Scalar one = Scalar::from_int(f, 1);
        r = ((one - P.alpha) * (one - P.alpha.inv())).inv() + ((one - P.beta) * (one - P.beta.inv())).inv();
        Sb = vstack({inverse(E - inverse(P.A)), -inverse(E - inverse(P.B))}, f, 2);
        Tb = vstack({-inverse(E - P.B), inverse(E - P.A)}, f, 2).scaled(r.inv());
    }
};

Mat random_invertible(std::mt19937& rng, const FieldPtr& f, int n)
{
    std::uniform_int_distribution<int> c(-3, 3);
    while (true) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = Scalar::from_int(f, c(rng)) + Scalar::from_int(f, c(rng)) * Scalar::zeta(f, 1);
        if (!det(m).is_zero()) return m;
    }
}

}  // namespace

TEST_CASE("Fox cocycle: kappa is a 2-cocycle and Upsilon satisfies its coboundary relation")
{
    std::mt19937 rng(31);
    for (int iter = 0; iter < 200; ++iter) {
        int g = 2 + iter % 2;
        Word u = random_word(rng, g), v = random_word(rng, g), w = random_word(rng, g);
        auto cocycle = sum({act(u, kappa(v, w, g)), scaled(kappa(u * v, w, g), -1), kappa(u, v * w, g),
                            scaled(kappa(u, v, g), -1)});
        CHECK(normalize_terms(cocycle).empty());
        auto lhs = upsilon(u * v, g);
        auto rhs = sum({upsilon(u, g), act(u, upsilon(v, g)), kappa(u, v, g)});
        CHECK(normalize_terms(sum({lhs, scaled(rhs, -1)})).empty());
    }
}

TEST_CASE("Seifert example: the S and T bases are dual")
{
    SeifertExample ex;
    CHECK(ex.P.completion == "su2");
    auto Pm = d_sharp_pairing(ex.S.pres, ex.S.identity, ex.P.rho, ex.P.psi, ex.Sb, ex.Tb);
    CHECK(Pm.M == Mat::identity(ex.P.field, 2));
}

TEST_CASE("pairing is sesquilinear and dual bases are Kronecker dual")
{
    SeifertExample ex;
    FieldPtr f = ex.P.field;
    std::mt19937 rng(32);
    Mat P0 = d_sharp_pairing(ex.S.pres, ex.S.identity, ex.P.rho, ex.P.psi, ex.Sb, ex.Tb).M;
    for (int iter = 0; iter < 200; ++iter) {
        Mat A = random_invertible(rng, f, 2), B = random_invertible(rng, f, 2);
        Mat h = ex.Sb * A, gb = ex.Tb * B;
        Mat P = d_sharp_pairing(ex.S.pres, ex.S.identity, ex.P.rho, ex.P.psi, h, gb).M;
        CHECK(P == A.adjoint() * P0 * B);
        Mat dual = dual_basis(P, gb);
        CHECK(d_sharp_pairing(ex.S.pres, ex.S.identity, ex.P.rho, ex.P.psi, h, dual).M == Mat::identity(f, 2));
        Mat left = left_dual_basis(P, h);
        CHECK(d_sharp_pairing(ex.S.pres, ex.S.identity, ex.P.rho, ex.P.psi, left, gb).M == Mat::identity(f, 2));
    }
    CHECK_THROWS_AS(dual_basis(Mat(f, 2, 2), ex.Tb), PreconditionError);
}

TEST_CASE("non-cocycles are rejected")
{
    // every 1-cochain is a cocycle in the Seifert example, so use the torus bundle
    TorusBundle tb = torus_bundle({-1, 2, 0, -1});
    Representation ad = tb.adjoint({{1, 8}, {1, 2}});
    BilinearForm psi = BilinearForm::standard(ad.field(), 3);
    CohomologyData d = cohomology_bases(BasedComplex::from(twisted_cochain_complex(tb.pres, tb.identity, ad)));
    Mat bad = d.h[1];
    bad(0, 0) = bad(0, 0) + Scalar::from_int(ad.field(), 1);
    CHECK_NOTHROW(d_sharp_pairing(tb.pres, tb.identity, ad, psi, d.h[1], d.h[2]));
    CHECK_THROWS_AS(d_sharp_pairing(tb.pres, tb.identity, ad, psi, bad, d.h[2]), ValidationError);
}

TEST_CASE("surface pairing: Seifert example against a direct numeric evaluation")
{
    SeifertExample ex;
    auto M = surface_matrix(ex.S.pres, ex.P.rho, ex.P.psi, ex.Sb, *ex.S.sigma);
    CHECK(M.symmetry == "anti-hermitian");
    CHECK(is_admissible(ex.S.pres, ex.S.identity, ex.P.rho, ex.P.psi, *ex.S.sigma));
    // independent evaluation: expand Upsilon letter by letter with Eigen matrices
    const int n = 2, g = ex.S.pres.g();
    CMat Sn = to_numeric(ex.Sb);
    std::vector<CMat> gens;
    for (int i = 0; i < g; ++i) gens.push_back(to_numeric(ex.P.rho.image(i)));
    auto rho = [&](const Word& w) {
        CMat m = CMat::Identity(n, n);
        for (const Letter& l : w.letters()) m = m * (l.exp > 0 ? gens[l.gen] : CMat(gens[l.gen].inverse()));
        return m;
    };
    // Fox derivative of a word applied to a cocycle block vector
    auto alpha = [&](const Word& w, const CMat& f) {
        CMat out = CMat::Zero(n, 1);
        Word pre;
        for (const Letter& l : w.letters()) {
            Word y = Word::from_letters({l});
            if (l.exp > 0) out += rho(pre) * f.block(l.gen * n, 0, n, 1);
            else out -= rho(pre * y) * f.block(l.gen * n, 0, n, 1);
            pre = pre * y;
        }
        return out;
    };
    auto ups = [&](const Word& w, const CMat& f, const CMat& fp) {
        cplx tot = 0;
        Word pre;
        for (const Letter& l : w.letters()) {
            Word y = Word::from_letters({l});
            CMat ay = alpha(y, fp);
            tot += (alpha(pre, f).adjoint() * rho(pre) * ay)(0, 0);
            if (l.exp < 0) {
                CMat a = rho(pre * y) * f.block(l.gen * n, 0, n, 1);
                CMat b = rho(pre * y) * fp.block(l.gen * n, 0, n, 1);
                tot += (a.adjoint() * b)(0, 0);
            }
            pre = pre * y;
        }
        return tot;
    };
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            cplx want = 0;
            for (size_t j = 0; j < ex.S.sigma->c.size(); ++j)
                want += static_cast<long double>(ex.S.sigma->c[j]) * ups(ex.S.pres.relators[j], Sn.col(a), Sn.col(b));
            CHECK(std::abs(M.M(a, b).to_complex() - want) < 1e-12L);
        }
}

TEST_CASE("torus bundle: fiber surface pairing vanishes, triple not admissible")
{
    TorusBundle tb = torus_bundle({-1, 2, 0, -1});
    Representation ad = tb.adjoint({{1, 8}, {1, 2}});
    BilinearForm psi = BilinearForm::standard(ad.field(), 3);
    CohomologyData d = cohomology_bases(BasedComplex::from(twisted_cochain_complex(tb.pres, tb.identity, ad)));
    REQUIRE(d.dims == std::vector<int>{0, 1, 1, 0});
    CHECK(surface_matrix(tb.pres, ad, psi, d.h[1], tb.fiber).M.is_zero());
    CHECK(!is_admissible(tb.pres, tb.identity, ad, psi, tb.sigma_plus));
    CHECK_THROWS_AS(admissible_torsion(tb.pres, tb.identity, ad, psi, tb.sigma_plus), PreconditionError);
}

TEST_CASE("bilinear form checks")
{
    SeifertExample ex;
    CHECK_NOTHROW(ex.P.psi.check(ex.P.rho));
    BilinearForm skew = ex.P.psi;
    skew.symmetry = Symmetry::AntiHermitian;
    CHECK_THROWS_AS(skew.check(ex.P.rho), ValidationError);
    BilinearForm tilted = ex.P.psi;
    tilted.psi0(0, 0) = Scalar::from_int(ex.P.field, 2);
    CHECK_THROWS_AS(tilted.check(ex.P.rho), ValidationError);
    TwoChain wrong{{1}};
    CHECK_THROWS_AS(surface_matrix(ex.S.pres, ex.P.rho, ex.P.psi, ex.Sb, wrong), ValidationError);
}

TEST_CASE("orthonormalization of random (anti-)hermitian matrices")
{
    std::mt19937 rng(33);
    std::normal_distribution<double> nd;
    const cplx I(0, 1);
    for (int iter = 0; iter < 200; ++iter) {
        int d = 1 + iter % 4;
        CMat X(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) X(i, j) = cplx(nd(rng), nd(rng));
        CMat H = X + X.adjoint();
        bool anti = iter % 2;
        CMat P = anti ? CMat(I * H) : H;
        auto o = orthonormal_basis(P, anti ? Symmetry::AntiHermitian : Symmetry::Hermitian, 1e-9);
        CHECK((o.transition.adjoint() * P * o.transition - o.normal_form).norm() < 1e-9L);
        CHECK(std::abs(o.rotation.determinant() - cplx(1)) < 1e-9L);
        CHECK((o.rotation.adjoint() * o.rotation - CMat::Identity(d, d)).norm() < 1e-9L);
        // |det P| equals the product of the scales
        long double prod = 1;
        for (auto s : o.scales) prod *= s;
        CHECK(std::abs(std::abs(P.determinant()) - prod) < 1e-9L * std::max<long double>(1, prod));
    }
    CMat nonh(2, 2);
    nonh << cplx(1), cplx(2), cplx(0), cplx(1);
    CHECK_THROWS_AS(orthonormal_basis(nonh, Symmetry::Hermitian, 1e-9), PreconditionError);
}
