#include "ntor/catalog.hpp"

#include <doctest.h>

#include <random>

using namespace ntor;

namespace {

FieldPtr Q() { return Field::rationals(); }

Scalar rnd(std::mt19937& rng, int lo = -3, int hi = 3)
{
    return Scalar::from_int(Q(), std::uniform_int_distribution<int>(lo, hi)(rng));
}

Mat random_matrix(std::mt19937& rng, int r, int c)
{
    Mat m(Q(), r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = rnd(rng);
    return m;
}

Mat random_invertible(std::mt19937& rng, int n)
{
    while (true) {
        Mat m = random_matrix(rng, n, n);
        if (n == 0 || !det(m).is_zero()) return m;
    }
}

// Standard complex with the given ranks, conjugated by random invertible matrices.
BasedComplex random_complex(std::mt19937& rng, const std::vector<int>& dims, const std::vector<int>& ranks)
{
    BasedComplex c;
    c.field = Q();
    c.dims = dims;
    std::vector<Mat> G;
    for (int d : dims) G.push_back(random_invertible(rng, d));
    int used = 0;  // rank coming into the current degree
    for (size_t i = 0; i + 1 < dims.size(); ++i) {
        Mat s(Q(), dims[i + 1], dims[i]);
        for (int k = 0; k < ranks[i]; ++k) s(k, used + k) = Scalar::from_int(Q(), 1);
        // coordinates: first `used` are image of the previous map, next ranks[i] map forward
        Mat shifted(Q(), dims[i + 1], dims[i]);
        for (int k = 0; k < ranks[i]; ++k) shifted(k, used + k) = Scalar::from_int(Q(), 1);
        c.delta.push_back(G[i + 1] * shifted * inverse(G[i]));
        used = ranks[i];
    }
    c.validate();
    return c;
}

std::vector<Mat> perturbed_bases(std::mt19937& rng, const CohomologyData& d, const BasedComplex& c,
                                 std::vector<Scalar>* dets)
{
    std::vector<Mat> out;
    for (int i = 0; i <= c.top(); ++i) {
        Mat T = random_invertible(rng, d.dims[i]);
        // add coboundaries, which do not change the classes
        Mat h = d.h[i] * T;
        if (d.b[i].cols() > 0 && d.dims[i] > 0) h = h + d.b[i] * random_matrix(rng, d.b[i].cols(), d.dims[i]);
        out.push_back(h);
        dets->push_back(d.dims[i] ? det(T) : Scalar::from_int(Q(), 1));
    }
    return out;
}

}  // namespace

TEST_CASE("one-step complex multiplying by 3")
{
    BasedComplex c{Q(), {1, 1}, {Mat::from_rows(Q(), {{Scalar::from_int(Q(), 3)}})}, {}};
    Mat e0(Q(), 1, 0);
    CHECK(torsion(c, {e0, e0}) == Scalar::from_int(Q(), 3));
    CHECK(cohomology_dims(c) == std::vector<int>{0, 0});
    BasedComplex one{Q(), {1}, {}, {}};
    CHECK(torsion(one, {Mat::identity(Q(), 1)}) == Scalar::from_int(Q(), 1));
}

TEST_CASE("basis-change law")
{
    std::mt19937 rng(21);
    for (int iter = 0; iter < 200; ++iter) {
        BasedComplex c = random_complex(rng, {2, 4, 4, 2}, {1 + iter % 2, 2, 1});
        CohomologyData d = cohomology_bases(c);
        std::vector<Scalar> hdets;
        std::vector<Mat> h2 = perturbed_bases(rng, d, c, &hdets);
        BasedComplex c2 = c;
        std::vector<Scalar> cdets;
        for (int i = 0; i <= c.top(); ++i) {
            Mat T = random_invertible(rng, c.dims[i]);
            c2.cbasis.push_back(T);
            cdets.push_back(det(T));
        }
        // [c/c'] = det T with c' = c T, [h'/h] = 1 / det T_h
        Scalar factor = Scalar::from_int(Q(), 1);
        for (int i = 0; i <= c.top(); ++i) {
            Scalar x = cdets[i] / hdets[i];
            factor = i % 2 ? factor * x : factor / x;
        }
        CHECK(torsion(c, d.h) == torsion(c2, h2) * factor);
    }
}

TEST_CASE("torsion does not depend on image bases or lifts")
{
    std::mt19937 rng(22);
    for (int iter = 0; iter < 200; ++iter) {
        BasedComplex c = random_complex(rng, {2, 5, 5, 2}, {2, 2, 1});
        CohomologyData d = cohomology_bases(c);
        ImageChoice ch = deterministic_image_choice(c);
        ImageChoice alt = ch;
        for (int i = 0; i < c.top(); ++i) {
            int k = ch.b[i + 1].cols();
            if (k == 0) continue;
            Mat M = random_invertible(rng, k);
            alt.b[i + 1] = ch.b[i + 1] * M;
            Mat Z = nullspace(c.delta[i]);
            alt.lifts[i] = ch.lifts[i] * M;
            if (Z.cols() > 0) alt.lifts[i] = alt.lifts[i] + Z * random_matrix(rng, Z.cols(), k);
        }
        CHECK(torsion(c, d.h, alt) == torsion(c, d.h, ch));
    }
}

namespace {

// Cell permutation of one degree lifted to blocks of size n.
std::vector<int> block_perm(const std::vector<int>& cells, int n)
{
    std::vector<int> out;
    for (int c : cells)
        for (int k = 0; k < n; ++k) out.push_back(c * n + k);
    return out;
}

Mat permute_rows(const Mat& h, const std::vector<int>& perm) { return h.select_rows(perm); }

}  // namespace

TEST_CASE("sign-refined torsion is unchanged by reordering cells")
{
    std::mt19937 rng(23);
    struct Case {
        Presentation p;
        IdentityWord W;
        Representation rho;
    };
    std::vector<Case> cases;
    TorusBundle tb = torus_bundle({-1, 2, 0, -1});
    cases.push_back({tb.pres, tb.identity, tb.adjoint({{1, 8}, {1, 2}})});
    Seifert s = seifert(SeifertSpec::from_abk(1, 1, 4));
    cases.push_back({s.pres, s.identity, s.su2({{1, 4}, {3, 4}, {1, 4}}).rho});
    NamedPresentation t = t3();
    cases.push_back({t.pres, t.identity, Representation::trivial(t.pres, Q())});
    int iter = 0;
    for (int round = 0; round < 70; ++round)
        for (const Case& k : cases) {
            ++iter;
            int n = k.rho.dim(), g = k.p.g();
            BasedComplex c = BasedComplex::from(twisted_cochain_complex(k.p, k.W, k.rho));
            RealSide rs = real_side(k.p, k.W);
            CohomologyData d = cohomology_bases(c);
            Scalar tau = refined_sign_torsion(c, d.h, rs.complex, rs.h, n);
            std::vector<std::vector<int>> cellperm;
            for (int cells : {1, g, g, 1}) {
                std::vector<int> pr(cells);
                std::iota(pr.begin(), pr.end(), 0);
                std::shuffle(pr.begin(), pr.end(), rng);
                cellperm.push_back(pr);
            }
            std::vector<std::vector<int>> bp;
            std::vector<Mat> hp, hRp;
            for (int i = 0; i < 4; ++i) {
                bp.push_back(block_perm(cellperm[i], n));
                hp.push_back(permute_rows(d.h[i], bp[i]));
                hRp.push_back(permute_rows(rs.h[i], cellperm[i]));
            }
            Scalar tau2 = refined_sign_torsion(c.permuted(bp), hp, rs.complex.permuted(cellperm), hRp, n);
            CHECK(tau == tau2);
        }
    CHECK(iter >= 200);
}

TEST_CASE("determinant line rebasing round trip")
{
    std::mt19937 rng(24);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<Mat> b = {random_invertible(rng, 2), random_invertible(rng, 3)};
        std::vector<Mat> nb = {random_invertible(rng, 2), random_invertible(rng, 3)};
        DetLineElement e{b, rnd(rng, 1, 5)};
        DetLineElement back = e.rebased(nb).rebased(b);
        CHECK(back.coeff == e.coeff);
    }
}

TEST_CASE("torsion preconditions")
{
    BasedComplex c{Q(), {1, 1}, {Mat(Q(), 1, 1)}, {}};
    Mat e0(Q(), 1, 0);
    CHECK_THROWS_AS(torsion(c, {e0, e0}), PreconditionError);  // needs one class per degree
    CHECK(torsion(c, {Mat::identity(Q(), 1), Mat::identity(Q(), 1)}) == Scalar::from_int(Q(), 1));
    CHECK_THROWS_AS(chain_torsion(c), PreconditionError);
}
