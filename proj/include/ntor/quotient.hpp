#pragma once

#include "ntor/scalars.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ntor {

// Tolerance used for unit-circle payloads and other embedded numerics.
double numeric_precision();
void set_numeric_precision(double eps);
// Significant digits printed for numeric payloads.
int precision_digits();

// SignOnly: F^x / {+-1}, used for torsions defined up to the sign of a determinant.
enum class Subgroup { Squares, Norms, NormsAndUnits, SignOnly };

// Units added to the subgroup: +-1, monomials t^k, roots of unity mu_m.
struct UnitSet {
    bool sign = false;
    bool monomials = false;
    int root_order = 0;  // 0: none
};

struct QuotientDescriptor {
    FieldPtr base;
    Subgroup subgroup = Subgroup::Norms;
    UnitSet units;

    // "squares", "norms", "norms+sign", "norms+monomials", "norms+mu6", combinations joined by '+'; "sign-only".
    static QuotientDescriptor parse(const std::string& spec, const FieldPtr& f);
    std::string describe() const;
    bool operator==(const QuotientDescriptor& o) const;
};

enum class PayloadKind { Squarefree, ResidueBit, UnitCircle, Laurent, Partial, Trivial, Signed };

using CoeffKey = std::vector<mpq_class>;  // monic irreducible, low degree first

// Canonical form of a class. Which fields are meaningful depends on kind.
struct ClassPayload {
    PayloadKind kind = PayloadKind::Trivial;
    mpz_class squarefree = 1;   // Squarefree, Laurent (rational part), Partial
    bool nonresidue = false;    // ResidueBit
    cplx unit{1, 0};            // UnitCircle
    int root_order = 1;         // UnitCircle: reduced modulo mu_root_order
    // Laurent (one variable): class = E*[1+t] + z4*[(t-1)/(t+1)] + [sqfree] + sum parity + sum asym
    long e_exp = 0;
    int e_mod = 0;              // 0 = Z, 2 = reduced mod 2 (monomial units)
    int z4 = 0;
    int z4_mod = 4;
    std::map<CoeffKey, int> sym_parity;
    std::map<CoeffKey, long> asym;
    std::string partial_repr;   // Partial; Signed: the sign-normalized representative

    std::string str() const;
    bool is_identity() const;
    bool equals(const ClassPayload& o, double eps) const;
};

ClassPayload combine(const ClassPayload& a, const ClassPayload& b);

struct TorsionClass {
    Scalar raw;
    QuotientDescriptor quotient;
    ClassPayload canonical;
    bool partial() const { return canonical.kind == PayloadKind::Partial; }
    bool same_class(const TorsionClass& o) const;
};

TorsionClass canonical_class(const Scalar& s, const QuotientDescriptor& q);
bool is_reciprocal(const Scalar& f);
// Representative of {s, -s}: positive, first nonzero coordinate positive, or positive leading coefficient.
Scalar sign_normalized(const Scalar& s);

// Squarefree part of a nonzero integer, sign preserved.
mpz_class squarefree_part(const mpz_class& n);

}  // namespace ntor
