#pragma once

#include "ntor/cellular.hpp"

namespace ntor {

// Cochain complex 0 -> C^0 -> ... -> C^k -> 0; delta[i] : C^i -> C^{i+1}.
struct BasedComplex {
    FieldPtr field;
    std::vector<int> dims;
    std::vector<Mat> delta;
    std::vector<Mat> cbasis;  // empty means the standard bases

    static BasedComplex from(const TwistedCochainComplex& c);
    int top() const { return static_cast<int>(dims.size()) - 1; }
    Mat c(int i) const;
    void validate() const;
    // Same complex with the cells of each degree permuted (perm[i][new] = old).
    BasedComplex permuted(const std::vector<std::vector<int>>& perm) const;
};

struct CohomologyData {
    std::vector<int> dims;
    std::vector<Mat> h;      // cocycle representatives, one column per class
    std::vector<Mat> b;      // b[i]: basis of Im delta^{i-1} inside C^i
    std::vector<Mat> lifts;  // lifts[i] in C^i with delta^i lifts[i] = b[i+1]
};

CohomologyData cohomology_bases(const BasedComplex& c);
std::vector<int> cohomology_dims(const BasedComplex& c);

// Image bases and lifts; the deterministic choice uses leftmost independent columns.
struct ImageChoice {
    std::vector<Mat> b, lifts;
};
ImageChoice deterministic_image_choice(const BasedComplex& c);

// prod_i [b_i h_i lifts_{i+1} / c_i]^{(-1)^{i+1}}
Scalar torsion(const BasedComplex& c, const std::vector<Mat>& h);
Scalar torsion(const BasedComplex& c, const std::vector<Mat>& h, const ImageChoice& choice);

// Chain-side torsion of an acyclic complex, computed on C_i = C^i with boundary delta^T.
Scalar chain_torsion(const BasedComplex& c);

// N(Y) summed verbatim; only its parity is consumed.
long sign_exponent(const std::vector<int>& dimH, const std::vector<int>& dimC);

// sign((-1)^N tau(real, hR))^n * tau(c, h); the real side is skipped for even n.
Scalar refined_sign_torsion(const BasedComplex& c, const std::vector<Mat>& h, const BasedComplex& real,
                            const std::vector<Mat>& hR, int n);

// coeff * h_0 (x) h_1^-1 (x) h_2 (x) ...
struct DetLineElement {
    std::vector<Mat> basis;
    Scalar coeff;
    // Same element written against new_basis.
    DetLineElement rebased(const std::vector<Mat>& new_basis) const;
};

// Places the columns of h (coordinates cell-major with block size n) into the
// direct-sum coordinates of rho + rho', block `which` (0 or 1).
Mat embed_direct_sum(const Mat& h, int n, int which);

// PR(alpha, beta) = mu(alpha (x) D beta) / tau_{rho + conj rho}; D conjugates coefficient and basis.
Scalar pr_full(const DetLineElement& alpha, const DetLineElement& beta, const BasedComplex& sum_complex, int n);
// PR^half(a g, b g') = a * conj(b) / tau0(X, (g, D g')); dual_of_gp holds the upper-degree bases D g'.
Scalar pr_half(const Scalar& a, const std::vector<Mat>& g, const Scalar& b, const std::vector<Mat>& dual_of_gp,
               const BasedComplex& c, const BasedComplex& real, const std::vector<Mat>& hR, int n);

}  // namespace ntor
