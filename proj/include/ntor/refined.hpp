#pragma once

#include "ntor/duality.hpp"
#include "ntor/quotient.hpp"

#include <map>
#include <optional>

namespace ntor {

struct TorsionReport {
    std::string kind;               // dual-refined, trivial, admissible, sigma
    std::vector<int> dims;
    Scalar raw;
    TorsionClass cls;
    std::string provenance;         // how the cohomology bases were chosen
    std::vector<Mat> bases;         // h_0 .. h_3
    std::vector<PairingMatrix> pairings;
    std::optional<Scalar> chain_torsion;     // acyclic complexes only
    std::optional<IntegralTorsion> integral; // trivial coefficients over Q
    std::map<std::string, long double> numeric;
    std::vector<std::string> notes;
};

// Subgroup <N(F), det rho(pi_1)> as a quotient descriptor.
QuotientDescriptor det_quotient(const Representation& rho);

// Trivial rank-one complex over Q with its deterministic cohomology bases; feeds the sign refinement.
struct RealSide {
    BasedComplex complex;
    std::vector<Mat> h;
};
RealSide real_side(const Presentation& p, const IdentityWord& W);

// Bases h_0..h_3 with h_{3-i} dual to h_i under the duality pairings (i <= 1).
std::vector<Mat> dual_bases(const Presentation& p, const IdentityWord& W, const Representation& rho,
                            const BilinearForm& psi, const CohomologyData& d, std::vector<PairingMatrix>* pairings = nullptr);

TorsionReport dual_refined_torsion(const Presentation& p, const IdentityWord& W, const Representation& rho,
                                   const BilinearForm& psi, const std::optional<QuotientDescriptor>& q = {});

TorsionReport trivial_coefficient_torsion(const Presentation& p, const IdentityWord& W, const FieldPtr& f);

TorsionReport admissible_torsion(const Presentation& p, const IdentityWord& W, const Representation& rho,
                                 const BilinearForm& psi, const TwoChain& sigma);

// h2 = class of [Sigma] normalized by psi-evaluation on Sigma, h1 = its dual. An explicit
// generator cocycle may be supplied instead of deriving it from the chain.
TorsionReport sigma_torsion(const Presentation& p, const IdentityWord& W, const Representation& rho,
                            const BilinearForm& psi, const TwoChain& sigma,
                            const std::optional<Mat>& generator = {});

// tau0 / |tau0| under the fixed complex embedding; rho must be unitary.
cplx unit_circle_character(const Presentation& p, const IdentityWord& W, const Representation& rho,
                           const BilinearForm& psi);

// tau^{1/2} h_2^(x): branch with positive real part, ties to positive imaginary part.
struct VolumeFormValue {
    int d = 0;
    Scalar tau;        // torsion for the pair (h_2 dual, h_2)
    cplx coefficient;  // tau^{1/2}
    std::string branch;
};
VolumeFormValue volume_form(const Presentation& p, const IdentityWord& W, const Representation& rho,
                            const BilinearForm& psi, const std::optional<Mat>& h2 = {});

struct VolumeComponent {
    std::string label;
    long double length = 0;  // measure of the component
    VolumeFormValue form;    // constant along the component
};
struct VolumeFamily {
    std::string name;
    std::vector<VolumeComponent> components;
};
long double volume(const VolumeFamily& fam);

// gcd of the (g-1)-minors of the abelianized Fox matrix; meridians[i] is the exponent vector of
// generator i in Z^l. Normalized primitive, monomial-free, positive leading coefficient.
struct AlexanderResult {
    MPoly poly;
    std::vector<std::string> vars;
    std::string str() const { return poly.str(vars); }
};
AlexanderResult alexander_polynomial(const Presentation& p, const std::vector<std::vector<int>>& meridians);

}  // namespace ntor
