#pragma once

#include "ntor/chainkit.hpp"

namespace ntor {

enum class Symmetry { Hermitian, AntiHermitian };

// psi(v, w) = conj(v)^T Psi0 w, conjugate-linear in the first slot.
struct BilinearForm {
    Mat psi0;
    Symmetry symmetry = Symmetry::Hermitian;

    static BilinearForm standard(const FieldPtr& f, int n);  // identity matrix, hermitian
    // Checks the declared symmetry and rho-invariance on generators.
    void check(const Representation& rho) const;
    Scalar operator()(const Mat& v, const Mat& w) const;  // column vectors
};

struct PairingMatrix {
    Mat M;
    int deg_left = 0, deg_right = 0;
    std::string symmetry;  // "hermitian", "anti-hermitian" or "none"
};

// Entry (j, k) = psi(h1_j cup h2_k) evaluated on D#(c_3).
PairingMatrix d_sharp_pairing(const Presentation& p, const IdentityWord& W, const Representation& rho,
                              const BilinearForm& psi, const Mat& h1, const Mat& h2);
// Entry (j, k) = psi(h0_j, h3_k).
PairingMatrix pairing03(const BilinearForm& psi, const Mat& h0, const Mat& h3);

// Integer 2-chain on the relator cells.
struct TwoChain {
    std::vector<long long> c;
    bool is_cycle(const Presentation& p) const;
};

// coef * (g a_i) (x) (h a_k)
struct TensorTerm {
    long long coef;
    Word g;
    int i;
    Word h;
    int k;
};
std::vector<TensorTerm> alpha_terms(const Word& w, int g);            // (coef, word, i) with h empty
std::vector<TensorTerm> kappa(const Word& u, const Word& v, int g);    // alpha(u) (x) u alpha(v)
std::vector<TensorTerm> upsilon(const Word& w, int g);
// Collects equal terms; used to compare tensor expressions.
std::map<std::tuple<Word, int, Word, int>, long long> normalize_terms(const std::vector<TensorTerm>& t);

Scalar surface_pairing(const Presentation& p, const Representation& rho, const BilinearForm& psi, const Mat& f,
                       const Mat& fp, const TwoChain& c);
PairingMatrix surface_matrix(const Presentation& p, const Representation& rho, const BilinearForm& psi,
                             const Mat& h1, const TwoChain& c);

// h_dual with pairing(h_j, h_dual_k) = delta_jk, given P_jk = pairing(h_j, g_k).
Mat dual_basis(const Mat& P, const Mat& g);
// h' with pairing(h'_j, g_k) = delta_jk, given P_jk = pairing(h_j, g_k).
Mat left_dual_basis(const Mat& P, const Mat& h);

bool is_admissible(const Presentation& p, const IdentityWord& W, const Representation& rho, const BilinearForm& psi,
                   const TwoChain& sigma);

struct Orthonormalization {
    CMat transition;                    // T with T^* P T = normal form
    CMat normal_form;                   // diag(+-1) or sqrt(-1) diag(-1, ..., 1)
    std::vector<long double> scales;    // |eigenvalue| per direction
    CMat rotation;                      // unitary eigenvector matrix, det 1
    long double residual = 0;
};
Orthonormalization orthonormal_basis(const CMat& P, Symmetry sym, double eps);

}  // namespace ntor
