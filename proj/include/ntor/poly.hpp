#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ntor {

// Dense univariate polynomial over Q, coefficients low degree first.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<mpq_class> c);
    static UPoly constant(const mpq_class& c);
    static UPoly monomial(const mpq_class& c, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(int i) const;
    mpq_class lead() const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator-() const;
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const mpq_class& s) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly monic() const;
    UPoly derivative() const;
    UPoly reversed() const;  // x^deg * p(1/x)
    mpq_class eval(const mpq_class& x) const;

    // Integer content made positive-leading; primitive() * content() == *this.
    mpq_class content() const;
    UPoly primitive() const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);  // monic, gcd(0,0) = 0
// Returns (g, s, t) with s*a + t*b = g monic.
struct XGcd { UPoly g, s, t; };
XGcd xgcd(const UPoly& a, const UPoly& b);

// Squarefree decomposition: p = lc * prod f_i^i.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

// Factorization over Q: p = lead * prod q^m with q monic irreducible, sorted.
struct Factorization {
    mpq_class lead;
    std::vector<std::pair<UPoly, int>> factors;
};
Factorization factor(const UPoly& p);

// Exponent-vector keyed sparse polynomial over Q in a fixed number of variables.
class MPoly {
public:
    using Exp = std::vector<int>;

    MPoly() = default;
    explicit MPoly(int nvars) : n_(nvars) {}
    static MPoly constant(int nvars, const mpq_class& c);
    static MPoly variable(int nvars, int i);
    static MPoly monomial(int nvars, const Exp& e, const mpq_class& c);

    int nvars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    mpq_class constant_term() const;
    const std::map<Exp, mpq_class>& terms() const { return t_; }

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    MPoly scaled(const mpq_class& s) const;
    bool operator==(const MPoly& o) const { return n_ == o.n_ && t_ == o.t_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    int degree_in(int var) const;
    int min_degree_in(int var) const;
    Exp min_exponents() const;
    Exp max_exponents() const;
    // Coefficients of x_var^k, each free of x_var.
    std::vector<MPoly> coeffs_in(int var) const;
    MPoly times_monomial(const Exp& e) const;  // exponents may be negative if result stays polynomial
    // Lex-order leading term (largest exponent vector).
    std::pair<Exp, mpq_class> leading_term() const;
    MPoly normalized() const;  // leading coefficient 1

    // Evaluate the reversed polynomial: x^maxdeg * p(1/x) per variable.
    MPoly reversed() const;

    UPoly to_upoly() const;  // requires nvars == 1
    static MPoly from_upoly(const UPoly& p);

    std::string str(const std::vector<std::string>& names) const;

    void add_term(const Exp& e, const mpq_class& c);

private:
    int n_ = 0;
    std::map<Exp, mpq_class> t_;
};

// Exact division; throws std::domain_error if b does not divide a.
MPoly exact_div(const MPoly& a, const MPoly& b);
bool divides(const MPoly& b, const MPoly& a, MPoly* quotient = nullptr);
// Greatest common divisor normalized to leading coefficient 1 (zero if both zero).
MPoly gcd(const MPoly& a, const MPoly& b);

}  // namespace ntor
