#pragma once

#include "ntor/refined.hpp"

#include <optional>

namespace ntor {

// A root of unity exp(2 pi i num / den).
struct RootOfUnity {
    long num = 0;
    long den = 1;
    Scalar in(const FieldPtr& f) const;  // f cyclotomic with den | order
    long reduced_den() const;
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

struct LensSpace {
    long p, q;
    Presentation pres;
    IdentityWord identity;
};
LensSpace lens_space(long p, long q);

struct SeifertSpec {
    long l = 0, m = 0, n = 0;
    std::optional<std::array<long, 3>> abk;  // (a, b, k) with l = b(a+b)k, m = a(a+b)k, n = abk
    static SeifertSpec from_abk(long a, long b, long k);
    void validate() const;
};

// Eigenvalue data alpha, beta, gamma of A, B, AB.
struct SL2SpectraSpec {
    RootOfUnity alpha, beta, gamma;
};

struct SU2Pair {
    FieldPtr field;
    Scalar alpha, beta, gamma, x, w;
    Mat A, B;
    Representation rho;
    BilinearForm psi;     // identity for the SU(2) completion
    std::string completion;  // "su2" or "conjugate" (y not in a cyclotomic field)
    int case_sign = 0;    // alpha^l = beta^m = gamma^n
};

struct Seifert {
    SeifertSpec spec;
    Presentation pres;
    IdentityWord identity;
    std::optional<TwoChain> sigma;  // Sigma_{alpha_{a,b}} = (b, a)
    SU2Pair su2(const SL2SpectraSpec& s) const;
    // Fact (II) solutions with unit-modulus eigenvalues of orders dividing 2l, 2m, 2n.
    std::vector<SL2SpectraSpec> spectra(int case_sign) const;
};
Seifert seifert(const SeifertSpec& spec);

// Square root of a positive rational inside Q(zeta_d) for the smallest suitable d.
struct CyclotomicSqrt {
    int order;
    Scalar value;
};
CyclotomicSqrt cyclotomic_sqrt(const mpq_class& q, int base_order);

struct TorusBundleSpec {
    long alpha = -1, beta = 1, gamma = 0, delta = -1;
    std::optional<Word> qf;  // defaults to a^-1 b^-1 in the supported case
    void validate() const;
    bool supported() const { return alpha == -1 && delta == -1 && gamma == 0 && beta != 0; }
};

struct TorusPoint {
    RootOfUnity u, v;
};

struct TorusBundle {
    TorusBundleSpec spec;
    Presentation pres;
    IdentityWord identity;
    Word qf;
    TwoChain fiber;               // relator cell of aba^-1b^-1
    TwoChain sigma_plus, sigma_minus;

    Representation rho(const TorusPoint& pt) const;      // SU(2)
    Representation adjoint(const TorusPoint& pt) const;  // 3x3, entries in u^2, v^2
    // Points of the variety with u, v in mu_N.
    std::vector<TorusPoint> solve(long N) const;
    // One circle per v with v^beta = 1, each of length 2 pi, sampled at u = exp(2 pi i / sample_den).
    VolumeFamily volume_family(long sample_den = 8) const;
};
TorusBundle torus_bundle(const TorusBundleSpec& spec);

struct NamedPresentation {
    Presentation pres;
    IdentityWord identity;
};
NamedPresentation t3();
Presentation trefoil();

}  // namespace ntor
