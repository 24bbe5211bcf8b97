#include "ntor/duality.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <numeric>

namespace ntor {

BilinearForm BilinearForm::standard(const FieldPtr& f, int n) { return {Mat::identity(f, n), Symmetry::Hermitian}; }

void BilinearForm::check(const Representation& rho) const
{
    if (psi0.rows() != rho.dim() || psi0.cols() != rho.dim()) throw ValidationError("form size does not match rho");
    Mat adj = psi0.adjoint();
    if (symmetry == Symmetry::Hermitian && adj != psi0) throw ValidationError("form is declared hermitian but is not");
    if (symmetry == Symmetry::AntiHermitian && adj != -psi0)
        throw ValidationError("form is declared anti-hermitian but is not");
    for (int i = 0; i < rho.generators(); ++i)
        if (rho.image(i).adjoint() * psi0 * rho.image(i) != psi0)
            throw ValidationError("form is not invariant under generator " + std::to_string(i));
}

Scalar BilinearForm::operator()(const Mat& v, const Mat& w) const { return (v.adjoint() * psi0 * w)(0, 0); }

namespace {

std::string symmetry_tag(const Mat& M)
{
    if (!M.is_square()) return "none";
    Mat a = M.adjoint();
    if (a == M) return "hermitian";
    if (a == -M) return "anti-hermitian";
    return "none";
}

Mat block_of(const Mat& v, int cell, int n) { return v.block(cell * n, 0, n, 1); }

}  // namespace

PairingMatrix d_sharp_pairing(const Presentation& p, const IdentityWord& W, const Representation& rho,
                              const BilinearForm& psi, const Mat& h1, const Mat& h2)
{
    int g = p.g(), n = rho.dim();
    if (h1.rows() != g * n || h2.rows() != g * n) throw ValidationError("D# pairing: cochains have the wrong length");
    TwistedCochainComplex cx = twisted_cochain_complex(p, W, rho);
    if (!(cx.delta[1] * h1).is_zero()) throw ValidationError("D# pairing: left argument is not a 1-cocycle");
    if (!(cx.delta[2] * h2).is_zero()) throw ValidationError("D# pairing: right argument is not a 2-cocycle");
    // precompute rho(d w_k / d x_i) and rho(w_k)
    struct Piece {
        int eps, j;
        std::vector<Mat> fox;
        Mat w;
    };
    std::vector<Piece> pieces;
    for (const auto& f : W.factors) {
        Piece pc{f.eps, f.j, {}, rho.word(f.w)};
        for (int i = 0; i < g; ++i) pc.fox.push_back(evaluate(fox_derivative(f.w, i), rho));
        pieces.push_back(std::move(pc));
    }
    Mat M(rho.field(), h1.cols(), h2.cols());
    for (int a = 0; a < h1.cols(); ++a)
        for (int b = 0; b < h2.cols(); ++b) {
            Scalar tot(rho.field());
            Mat pcol = h1.col(a), qcol = h2.col(b);
            for (const auto& pc : pieces) {
                Mat right = pc.w * block_of(qcol, pc.j, n);
                for (int i = 0; i < g; ++i) {
                    if (pc.fox[i].is_zero()) continue;
                    Scalar v = psi(pc.fox[i] * block_of(pcol, i, n), right);
                    tot = pc.eps > 0 ? tot + v : tot - v;
                }
            }
            M(a, b) = tot;
        }
    return {M, 1, 2, symmetry_tag(M)};
}

PairingMatrix pairing03(const BilinearForm& psi, const Mat& h0, const Mat& h3)
{
    Mat M(psi.psi0.field(), h0.cols(), h3.cols());
    for (int a = 0; a < h0.cols(); ++a)
        for (int b = 0; b < h3.cols(); ++b) M(a, b) = psi(h0.col(a), h3.col(b));
    return {M, 0, 3, symmetry_tag(M)};
}

bool TwoChain::is_cycle(const Presentation& p) const
{
    if (static_cast<int>(c.size()) != static_cast<int>(p.relators.size()))
        throw ValidationError("2-chain needs one coefficient per relator");
    for (int i = 0; i < p.g(); ++i) {
        long long s = 0;
        for (size_t j = 0; j < c.size(); ++j) s += c[j] * fox_derivative(p.relators[j], i).augmentation();
        if (s != 0) return false;
    }
    return true;
}

std::vector<TensorTerm> alpha_terms(const Word& w, int g)
{
    std::vector<TensorTerm> out;
    for (int i = 0; i < g; ++i) {
        GroupRingElement d = fox_derivative(w, i);
        for (const auto& [word, c] : d.terms()) out.push_back({c, word, i, Word(), -1});
    }
    return out;
}

std::vector<TensorTerm> kappa(const Word& u, const Word& v, int g)
{
    std::vector<TensorTerm> out;
    auto au = alpha_terms(u, g), av = alpha_terms(v, g);
    for (const auto& x : au)
        for (const auto& y : av) out.push_back({x.coef * y.coef, x.g, x.i, u * y.g, y.i});
    return out;
}

std::vector<TensorTerm> upsilon(const Word& w, int g)
{
    std::vector<TensorTerm> out;
    Word pre;
    for (const Letter& l : w.letters()) {
        Word y = Word::from_letters({l});
        // Upsilon(pre y) = Upsilon(pre) + pre Upsilon(y) + kappa(pre, y)
        if (l.exp < 0) out.push_back({1, pre * y, l.gen, pre * y, l.gen});
        for (auto& t : kappa(pre, y, g)) out.push_back(t);
        pre = pre * y;
    }
    return out;
}

std::map<std::tuple<Word, int, Word, int>, long long> normalize_terms(const std::vector<TensorTerm>& t)
{
    std::map<std::tuple<Word, int, Word, int>, long long> m;
    for (const auto& x : t) {
        auto key = std::make_tuple(x.g, x.i, x.h, x.k);
        if ((m[key] += x.coef) == 0) m.erase(key);
    }
    return m;
}

Scalar surface_pairing(const Presentation& p, const Representation& rho, const BilinearForm& psi, const Mat& f,
                       const Mat& fp, const TwoChain& c)
{
    int g = p.g(), n = rho.dim();
    if (!c.is_cycle(p)) throw ValidationError("surface pairing: the 2-chain is not a cycle");
    if (f.rows() != g * n || fp.rows() != g * n) throw ValidationError("surface pairing: cochains have the wrong length");
    Scalar tot(rho.field());
    for (size_t j = 0; j < c.c.size(); ++j) {
        if (c.c[j] == 0) continue;
        for (const auto& [key, coef] : normalize_terms(upsilon(p.relators[j], g))) {
            const auto& [gw, i, hw, k] = key;
            Scalar v = psi(rho.word(gw) * block_of(f, i, n), rho.word(hw) * block_of(fp, k, n));
            tot += v * Scalar::from_int(rho.field(), static_cast<long>(c.c[j] * coef));
        }
    }
    return tot;
}

PairingMatrix surface_matrix(const Presentation& p, const Representation& rho, const BilinearForm& psi,
                             const Mat& h1, const TwoChain& c)
{
    Mat M(rho.field(), h1.cols(), h1.cols());
    for (int a = 0; a < h1.cols(); ++a)
        for (int b = 0; b < h1.cols(); ++b) M(a, b) = surface_pairing(p, rho, psi, h1.col(a), h1.col(b), c);
    return {M, 1, 1, symmetry_tag(M)};
}

Mat dual_basis(const Mat& P, const Mat& g)
{
    if (P.cols() != g.cols()) throw ValidationError("dual basis: pairing and basis sizes differ");
    if (P.rows() == 0) return g;
    if (!P.is_square() || det(P).is_zero()) throw PreconditionError("pairing matrix is singular (degenerate duality)");
    return g * inverse(P);
}

Mat left_dual_basis(const Mat& P, const Mat& h)
{
    if (P.rows() != h.cols()) throw ValidationError("left dual: pairing and basis sizes differ");
    if (P.rows() == 0) return h;
    if (!P.is_square() || det(P).is_zero()) throw PreconditionError("pairing matrix is singular (degenerate duality)");
    return h * inverse(P.adjoint());
}

bool is_admissible(const Presentation& p, const IdentityWord& W, const Representation& rho, const BilinearForm& psi,
                   const TwoChain& sigma)
{
    if (rho.dim() == 0) return true;
    TwistedCochainComplex t = twisted_cochain_complex(p, W, rho);
    BasedComplex c = BasedComplex::from(t);
    CohomologyData d = cohomology_bases(c);
    if (d.h[1].cols() > 0) {
        Mat S = surface_matrix(p, rho, psi, d.h[1], sigma).M;
        if (det(S).is_zero()) return false;
    }
    if (d.h[1].cols() != d.h[2].cols() || d.h[0].cols() != d.h[3].cols()) return false;
    if (d.h[1].cols() > 0 && det(d_sharp_pairing(p, W, rho, psi, d.h[1], d.h[2]).M).is_zero()) return false;
    if (d.h[0].cols() > 0 && det(pairing03(psi, d.h[0], d.h[3]).M).is_zero()) return false;
    return true;
}

Orthonormalization orthonormal_basis(const CMat& P, Symmetry sym, double eps)
{
    if (P.rows() != P.cols()) throw ValidationError("orthonormalization needs a square matrix");
    const int d = static_cast<int>(P.rows());
    const cplx I(0, 1);
    CMat H = sym == Symmetry::Hermitian ? P : CMat(-I * P);
    long double herr = (H - H.adjoint()).norm();
    if (herr > eps * std::max<long double>(1, H.norm()))
        throw PreconditionError("pairing matrix is not (anti-)hermitian within precision");
    Eigen::SelfAdjointEigenSolver<CMat> es(H);
    if (es.info() != Eigen::Success) throw PreconditionError("eigen-decomposition failed");
    auto lam = es.eigenvalues();
    CMat U = es.eigenvectors();
    Orthonormalization o;
    for (int k = 0; k < d; ++k) {
        if (std::abs(lam(k)) < eps) throw PreconditionError("pairing matrix is singular within precision");
        o.scales.push_back(std::abs(lam(k)));
    }
    // fix det U = 1 by rotating the phase of the first column
    if (d > 0) {
        cplx du = U.determinant();
        U.col(0) *= std::conj(du) / std::abs(du);
    }
    o.rotation = U;
    CMat S = CMat::Zero(d, d);
    CMat N = CMat::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        S(k, k) = 1.0L / std::sqrt(std::abs(lam(k)));
        long double sg = lam(k) > 0 ? 1 : -1;
        N(k, k) = sym == Symmetry::Hermitian ? cplx(sg, 0) : I * sg;
    }
    o.transition = U * S;
    o.normal_form = N;
    o.residual = (o.transition.adjoint() * P * o.transition - N).norm();
    if (o.residual > eps * std::max<long double>(1, P.norm())) throw PreconditionError("orthonormalization lost precision");
    return o;
}

}  // namespace ntor
