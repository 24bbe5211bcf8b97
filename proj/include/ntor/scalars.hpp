#pragma once

#include "ntor/errors.hpp"
#include "ntor/poly.hpp"

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace ntor {

enum class FieldKind { Rationals, PrimeField, Cyclotomic, RationalFunctions };
enum class Involution { Identity, ComplexConjugation, VariableInversion };

using cplx = std::complex<long double>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Immutable field descriptor. The involution is forced by the kind.
class Field {
public:
    static FieldPtr rationals();
    static FieldPtr prime(std::uint64_t p);
    static FieldPtr cyclotomic(int d);
    static FieldPtr rational_functions(int nvars);

    FieldKind kind() const { return kind_; }
    Involution involution() const;
    std::uint64_t prime() const { return p_; }
    int order() const { return d_; }       // cyclotomic order d
    int degree() const { return phi_; }    // phi(d)
    int nvars() const { return nvars_; }
    const std::vector<std::string>& var_names() const { return names_; }
    const UPoly& cyclotomic_polynomial() const { return phi_poly_; }
    // x^k mod Phi_d as coordinates, for 0 <= k <= max(2*phi(d) - 1, d).
    const std::vector<mpq_class>& power_row(int k) const { return pow_rows_[k]; }

    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }
    std::string describe() const;
    bool characteristic_zero() const { return kind_ != FieldKind::PrimeField; }

private:
    Field() = default;
    FieldKind kind_ = FieldKind::Rationals;
    std::uint64_t p_ = 0;
    int d_ = 1;
    int phi_ = 1;
    int nvars_ = 0;
    std::vector<std::string> names_;
    UPoly phi_poly_;
    std::vector<std::vector<mpq_class>> pow_rows_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);
// Inverse of Field::describe: "Q", "F_p", "Q(zeta_d)", "Q(t)", "Q(t1,...,tl)".
FieldPtr parse_field(const std::string& text);
UPoly cyclotomic_polynomial(int d);
int euler_phi(int d);
bool is_prime_u64(std::uint64_t n);

// t^mono * num / den with num, den coprime, free of monomial factors, den normalized.
struct RatFunc {
    MPoly num, den;
    std::vector<int> mono;
};

class Scalar {
public:
    Scalar() = default;
    explicit Scalar(FieldPtr f);  // zero

    static Scalar from_int(const FieldPtr& f, long v);
    static Scalar from_rational(const FieldPtr& f, const mpq_class& q);
    static Scalar zeta(const FieldPtr& f, long k);          // cyclotomic generator power
    static Scalar variable(const FieldPtr& f, int i);       // t_i in Q(t_1..t_l)
    static Scalar from_poly(const FieldPtr& f, const MPoly& num, const MPoly& den);
    static Scalar from_coords(const FieldPtr& f, std::vector<mpq_class> coords);

    const FieldPtr& field() const { return f_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inv() const;
    Scalar pow(long e) const;
    Scalar conj() const;
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;      // lies in the prime subfield Q
    mpq_class to_rational() const;  // requires is_rational()
    std::uint64_t residue() const;  // prime field only

    // Fixed embedding zeta_d -> exp(2 pi i / d); Q and cyclotomic only.
    cplx to_complex() const;

    const std::vector<mpq_class>& coords() const;  // cyclotomic
    const RatFunc& ratfunc() const;                 // rational functions

    std::string str() const;
    std::string value_str() const;  // str() without the field suffix

private:
    FieldPtr f_;
    std::variant<mpq_class, std::uint64_t, std::vector<mpq_class>, RatFunc> v_;
    void check_same(const Scalar& o) const;
};

// Text grammar (see docs/grammar.md).
Scalar parse_scalar(const std::string& text, const FieldPtr& f);

}  // namespace ntor
