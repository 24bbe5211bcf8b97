#pragma once

#include "ntor/foxcalc.hpp"
#include "ntor/linalg.hpp"

namespace ntor {

// rho: pi_1 -> GL_n(F), one image per generator.
class Representation {
public:
    Representation() = default;
    // Checks invertibility, the unimodular flag and that relators map to the identity.
    Representation(const Presentation& p, FieldPtr f, std::vector<Mat> images, bool unimodular = false);
    static Representation trivial(const Presentation& p, const FieldPtr& f, int n = 1);

    const FieldPtr& field() const { return f_; }
    int dim() const { return n_; }
    int generators() const { return static_cast<int>(img_.size()); }
    bool unimodular() const { return unimodular_; }
    const Mat& image(int i) const { return img_.at(i); }
    const Mat& inverse_image(int i) const { return inv_.at(i); }
    Mat word(const Word& w) const;

    Representation conjugated(const Presentation& p, const Mat& P) const;  // g -> P rho(g) P^-1
    Representation conj(const Presentation& p) const;                      // entrywise involution
    Representation direct_sum(const Presentation& p, const Representation& o) const;
    bool is_unitary() const;  // conj(g)^T g = E for every image

private:
    FieldPtr f_;
    int n_ = 0;
    bool unimodular_ = false;
    std::vector<Mat> img_, inv_;
};

Mat evaluate(const GroupRingElement& e, const Representation& rho);

// Group-ring boundary data of the presentation complex closed up by the identity.
struct BoundaryData {
    std::vector<GroupRingElement> d1;               // 1 - x_i
    std::vector<std::vector<GroupRingElement>> d2;  // d2[j][i] = d r_j / d x_i
    std::vector<GroupRingElement> d3;               // d W / d rho_j through Psi
};
BoundaryData boundary_matrices(const Presentation& p, const IdentityWord& W);

// Coboundaries delta^0 (gn x n), delta^1 (gn x gn), delta^2 (n x gn).
struct TwistedCochainComplex {
    FieldPtr field;
    int g = 0, n = 0;
    std::vector<Mat> delta;
    std::vector<int> dims() const { return {n, g * n, g * n, n}; }
    std::vector<std::string> labels(int degree, const Presentation& p) const;
};
TwistedCochainComplex twisted_cochain_complex(const Presentation& p, const IdentityWord& W, const Representation& rho);

// Integer matrices.
struct ZMat {
    int r = 0, c = 0;
    std::vector<mpz_class> a;
    ZMat() = default;
    ZMat(int rows, int cols) : r(rows), c(cols), a(static_cast<size_t>(rows) * cols, 0) {}
    static ZMat identity(int n);
    mpz_class& operator()(int i, int j) { return a[static_cast<size_t>(i) * c + j]; }
    const mpz_class& operator()(int i, int j) const { return a[static_cast<size_t>(i) * c + j]; }
    ZMat operator*(const ZMat& o) const;
    bool operator==(const ZMat& o) const { return r == o.r && c == o.c && a == o.a; }
    bool is_zero() const;
};

struct IntegralComplex {
    std::vector<ZMat> delta;  // coboundaries delta^0 .. delta^{k-1}
    std::vector<int> dims() const;
    void validate() const;
};
IntegralComplex integral_complex(const Presentation& p, const IdentityWord& W);

// U * A * V = D with D diagonal, d_1 | d_2 | ..., U and V unimodular.
struct SmithForm {
    ZMat D, U, V;
    std::vector<mpz_class> divisors;  // nonzero diagonal entries
};
SmithForm smith_normal_form(const ZMat& A);

struct IntegralTorsion {
    std::vector<std::vector<mpz_class>> divisors;  // per coboundary
    mpz_class h1_order;                            // product of nonzero divisors of delta^1
    mpq_class magnitude;                           // 1 / h1_order
    std::string sign = "\xC2\xB1";                 // undetermined sign marker
};
IntegralTorsion smith_and_integral_torsion(const IntegralComplex& c);

}  // namespace ntor
