#include "ntor/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <regex>
#include <sstream>

namespace ntor {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p)
{
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 reduce_signed(long v, u64 p)
{
    long long m = static_cast<long long>(v % static_cast<long long>(p));
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<u64>(m);
}

u64 reduce_rational(const mpq_class& q, u64 p)
{
    mpz_class pp(std::to_string(p));
    mpz_class n, d;
    mpz_fdiv_r(n.get_mpz_t(), q.get_num_mpz_t(), pp.get_mpz_t());
    mpz_fdiv_r(d.get_mpz_t(), q.get_den_mpz_t(), pp.get_mpz_t());
    if (d == 0) throw ValidationError("denominator divisible by the field characteristic");
    u64 nu = std::stoull(n.get_str()), du = std::stoull(d.get_str());
    return mulmod(nu, powmod(du, p - 2, p), p);
}

RatFunc normalize(MPoly num, MPoly den, std::vector<int> mono)
{
    int n = static_cast<int>(mono.size());
    if (den.is_zero()) throw PreconditionError("division by zero in rational function field");
    if (num.is_zero()) return {MPoly(n), MPoly::constant(n, 1), std::vector<int>(n, 0)};
    MPoly g = gcd(num, den);
    if (!g.is_constant()) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    auto mn = num.min_exponents(), md = den.min_exponents();
    std::vector<int> sn(n), sd(n);
    for (int i = 0; i < n; ++i) {
        sn[i] = -mn[i];
        sd[i] = -md[i];
        mono[i] += mn[i] - md[i];
    }
    num = num.times_monomial(sn);
    den = den.times_monomial(sd);
    mpq_class lc = den.leading_term().second;
    if (lc != 1) {
        num = num.scaled(1 / lc);
        den = den.scaled(1 / lc);
    }
    return {std::move(num), std::move(den), std::move(mono)};
}

std::vector<mpq_class> cyclo_reduce(const Field& f, const std::vector<mpq_class>& conv)
{
    std::vector<mpq_class> out(f.degree(), 0);
    for (size_t k = 0; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        const auto& row = f.power_row(static_cast<int>(k));
        for (int j = 0; j < f.degree(); ++j)
            if (row[j] != 0) out[j] += conv[k] * row[j];
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- Field

int euler_phi(int d)
{
    int r = d, n = d;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

UPoly cyclotomic_polynomial(int d)
{
    if (d < 1) throw ValidationError("cyclotomic order must be >= 1");
    UPoly xd = UPoly::monomial(1, d) - UPoly::constant(1);
    for (int k = 1; k < d; ++k) {
        if (d % k == 0) xd = divmod(xd, cyclotomic_polynomial(k)).first;
    }
    return xd;
}

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

FieldPtr Field::rationals()
{
    static const FieldPtr q = [] {
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = FieldKind::Rationals;
        return f;
    }();
    return q;
}

FieldPtr Field::prime(std::uint64_t p)
{
    if (!is_prime_u64(p)) throw ValidationError("prime field order " + std::to_string(p) + " is not prime");
    if (p >= (1ULL << 62)) throw ValidationError("prime field order too large");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::PrimeField;
    f->p_ = p;
    return f;
}

FieldPtr Field::cyclotomic(int d)
{
    if (d < 1) throw ValidationError("cyclotomic order must be >= 1");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::Cyclotomic;
    f->d_ = d;
    f->phi_ = euler_phi(d);
    f->phi_poly_ = ntor::cyclotomic_polynomial(d);
    int rows = std::max(2 * f->phi_, d + 1);
    const auto& phc = f->phi_poly_.coeffs();
    std::vector<mpq_class> cur(f->phi_, 0);
    cur[0] = 1;
    for (int k = 0; k < rows; ++k) {
        f->pow_rows_.push_back(cur);
        // multiply by x and reduce with the monic Phi_d
        std::vector<mpq_class> nxt(f->phi_, 0);
        mpq_class top = cur[f->phi_ - 1];
        for (int j = f->phi_ - 1; j > 0; --j) nxt[j] = cur[j - 1];
        nxt[0] = 0;
        if (top != 0)
            for (int j = 0; j < f->phi_; ++j) nxt[j] -= top * phc[j];
        cur = std::move(nxt);
    }
    return f;
}

FieldPtr Field::rational_functions(int nvars)
{
    if (nvars < 1) throw ValidationError("rational function field needs at least one variable");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::RationalFunctions;
    f->nvars_ = nvars;
    if (nvars == 1) {
        f->names_ = {"t"};
    } else {
        for (int i = 1; i <= nvars; ++i) f->names_.push_back("t" + std::to_string(i));
    }
    return f;
}

Involution Field::involution() const
{
    switch (kind_) {
    case FieldKind::Cyclotomic: return Involution::ComplexConjugation;
    case FieldKind::RationalFunctions: return Involution::VariableInversion;
    default: return Involution::Identity;
    }
}

bool Field::operator==(const Field& o) const
{
    if (kind_ != o.kind_) return false;
    switch (kind_) {
    case FieldKind::Rationals: return true;
    case FieldKind::PrimeField: return p_ == o.p_;
    case FieldKind::Cyclotomic: return d_ == o.d_;
    case FieldKind::RationalFunctions: return nvars_ == o.nvars_;
    }
    return false;
}

std::string Field::describe() const
{
    switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::PrimeField: return "F_" + std::to_string(p_);
    case FieldKind::Cyclotomic: return "Q(zeta_" + std::to_string(d_) + ")";
    case FieldKind::RationalFunctions: {
        std::string s = "Q(";
        for (size_t i = 0; i < names_.size(); ++i) s += (i ? "," : "") + names_[i];
        return s + ")";
    }
    }
    return "?";
}

FieldPtr parse_field(const std::string& text)
{
    static const std::regex prime_re(R"(^\s*F_(\d+)\s*$)");
    static const std::regex cyc_re(R"(^\s*Q\(zeta_(\d+)\)\s*$)");
    static const std::regex fun_re(R"(^\s*Q\(([^)]*)\)\s*$)");
    std::smatch m;
    if (text.find_first_not_of(" ") != std::string::npos && std::regex_match(text, std::regex(R"(^\s*Q\s*$)")))
        return Field::rationals();
    if (std::regex_match(text, m, prime_re)) {
        if (m[1].length() > 18) throw ParseError("modulus too large", static_cast<size_t>(m.position(1)));
        return Field::prime(std::stoull(m[1].str()));
    }
    if (std::regex_match(text, m, cyc_re)) {
        if (m[1].length() > 6) throw ParseError("cyclotomic order too large", static_cast<size_t>(m.position(1)));
        return Field::cyclotomic(std::stoi(m[1].str()));
    }
    if (std::regex_match(text, m, fun_re)) {
        std::string vars = m[1].str();
        vars.erase(std::remove(vars.begin(), vars.end(), ' '), vars.end());
        if (vars == "t") return Field::rational_functions(1);
        int n = 0;
        std::stringstream ss(vars);
        std::string v;
        while (std::getline(ss, v, ',')) {
            if (v != "t" + std::to_string(n + 1))
                throw ParseError("variables must be t or t1,...,tl", static_cast<size_t>(m.position(1)));
            ++n;
        }
        if (n < 2) throw ParseError("variables must be t or t1,...,tl", static_cast<size_t>(m.position(1)));
        return Field::rational_functions(n);
    }
    throw ParseError("unknown field descriptor '" + text + "'", 0);
}

bool same_field(const FieldPtr& a, const FieldPtr& b)
{
    return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(FieldPtr f) : f_(std::move(f))
{
    switch (f_->kind()) {
    case FieldKind::Rationals: v_ = mpq_class(0); break;
    case FieldKind::PrimeField: v_ = u64(0); break;
    case FieldKind::Cyclotomic: v_ = std::vector<mpq_class>(f_->degree(), 0); break;
    case FieldKind::RationalFunctions: {
        int n = f_->nvars();
        v_ = RatFunc{MPoly(n), MPoly::constant(n, 1), std::vector<int>(n, 0)};
        break;
    }
    }
}

Scalar Scalar::from_rational(const FieldPtr& f, const mpq_class& q_in)
{
    mpq_class q = q_in;
    q.canonicalize();
    Scalar s(f);
    switch (f->kind()) {
    case FieldKind::Rationals: s.v_ = q; break;
    case FieldKind::PrimeField: s.v_ = reduce_rational(q, f->prime()); break;
    case FieldKind::Cyclotomic: {
        std::vector<mpq_class> c(f->degree(), 0);
        c[0] = q;
        s.v_ = std::move(c);
        break;
    }
    case FieldKind::RationalFunctions: {
        int n = f->nvars();
        s.v_ = normalize(MPoly::constant(n, q), MPoly::constant(n, 1), std::vector<int>(n, 0));
        break;
    }
    }
    return s;
}

Scalar Scalar::from_int(const FieldPtr& f, long v)
{
    if (f->kind() == FieldKind::PrimeField) {
        Scalar s(f);
        s.v_ = reduce_signed(v, f->prime());
        return s;
    }
    return from_rational(f, mpq_class(v));
}

Scalar Scalar::zeta(const FieldPtr& f, long k)
{
    if (f->kind() != FieldKind::Cyclotomic) throw ValidationError("zeta requires a cyclotomic field");
    long d = f->order();
    long m = ((k % d) + d) % d;
    Scalar s(f);
    s.v_ = f->power_row(static_cast<int>(m));
    return s;
}

Scalar Scalar::variable(const FieldPtr& f, int i)
{
    if (f->kind() != FieldKind::RationalFunctions || i < 0 || i >= f->nvars())
        throw ValidationError("variable index out of range");
    int n = f->nvars();
    std::vector<int> mono(n, 0);
    mono[i] = 1;
    Scalar s(f);
    s.v_ = RatFunc{MPoly::constant(n, 1), MPoly::constant(n, 1), mono};
    return s;
}

Scalar Scalar::from_poly(const FieldPtr& f, const MPoly& num, const MPoly& den)
{
    if (f->kind() != FieldKind::RationalFunctions) throw ValidationError("from_poly requires Q(t)");
    Scalar s(f);
    s.v_ = normalize(num, den, std::vector<int>(f->nvars(), 0));
    return s;
}

Scalar Scalar::from_coords(const FieldPtr& f, std::vector<mpq_class> coords)
{
    if (f->kind() != FieldKind::Cyclotomic || static_cast<int>(coords.size()) != f->degree())
        throw ValidationError("coordinate vector does not match the cyclotomic field");
    for (auto& x : coords) x.canonicalize();
    Scalar s(f);
    s.v_ = std::move(coords);
    return s;
}

void Scalar::check_same(const Scalar& o) const
{
    if (!same_field(f_, o.f_))
        throw ValidationError("field mismatch: " + f_->describe() + " vs " + o.f_->describe());
}

Scalar Scalar::operator+(const Scalar& o) const
{
    check_same(o);
    Scalar r(f_);
    switch (f_->kind()) {
    case FieldKind::Rationals: r.v_ = std::get<0>(v_) + std::get<0>(o.v_); break;
    case FieldKind::PrimeField: {
        u64 p = f_->prime();
        u64 s = std::get<1>(v_) + std::get<1>(o.v_);
        r.v_ = s >= p ? s - p : s;
        break;
    }
    case FieldKind::Cyclotomic: {
        auto c = std::get<2>(v_);
        const auto& d = std::get<2>(o.v_);
        for (size_t i = 0; i < c.size(); ++i) c[i] += d[i];
        r.v_ = std::move(c);
        break;
    }
    case FieldKind::RationalFunctions: {
        const auto& a = std::get<3>(v_);
        const auto& b = std::get<3>(o.v_);
        if (a.num.is_zero()) return o;
        if (b.num.is_zero()) return *this;
        int n = f_->nvars();
        std::vector<int> m(n), sa(n), sb(n);
        for (int i = 0; i < n; ++i) {
            m[i] = std::min(a.mono[i], b.mono[i]);
            sa[i] = a.mono[i] - m[i];
            sb[i] = b.mono[i] - m[i];
        }
        MPoly num = (a.num * b.den).times_monomial(sa) + (b.num * a.den).times_monomial(sb);
        r.v_ = normalize(num, a.den * b.den, m);
        break;
    }
    }
    return r;
}

Scalar Scalar::operator-() const
{
    Scalar r(f_);
    switch (f_->kind()) {
    case FieldKind::Rationals: r.v_ = -std::get<0>(v_); break;
    case FieldKind::PrimeField: {
        u64 a = std::get<1>(v_);
        r.v_ = a == 0 ? u64(0) : f_->prime() - a;
        break;
    }
    case FieldKind::Cyclotomic: {
        auto c = std::get<2>(v_);
        for (auto& x : c) x = -x;
        r.v_ = std::move(c);
        break;
    }
    case FieldKind::RationalFunctions: {
        auto a = std::get<3>(v_);
        a.num = -a.num;
        r.v_ = std::move(a);
        break;
    }
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const
{
    check_same(o);
    Scalar r(f_);
    switch (f_->kind()) {
    case FieldKind::Rationals: r.v_ = std::get<0>(v_) * std::get<0>(o.v_); break;
    case FieldKind::PrimeField: r.v_ = mulmod(std::get<1>(v_), std::get<1>(o.v_), f_->prime()); break;
    case FieldKind::Cyclotomic: {
        const auto& a = std::get<2>(v_);
        const auto& b = std::get<2>(o.v_);
        std::vector<mpq_class> conv(2 * a.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j)
                if (b[j] != 0) conv[i + j] += a[i] * b[j];
        }
        r.v_ = cyclo_reduce(*f_, conv);
        break;
    }
    case FieldKind::RationalFunctions: {
        const auto& a = std::get<3>(v_);
        const auto& b = std::get<3>(o.v_);
        int n = f_->nvars();
        if (a.num.is_zero() || b.num.is_zero()) return Scalar(f_);
        std::vector<int> m(n);
        for (int i = 0; i < n; ++i) m[i] = a.mono[i] + b.mono[i];
        // cross-cancel first to keep the gcd small
        MPoly g1 = gcd(a.num, b.den), g2 = gcd(b.num, a.den);
        MPoly an = exact_div(a.num, g1), bd = exact_div(b.den, g1);
        MPoly bn = exact_div(b.num, g2), ad = exact_div(a.den, g2);
        r.v_ = normalize(an * bn, ad * bd, m);
        break;
    }
    }
    return r;
}

Scalar Scalar::inv() const
{
    if (is_zero()) throw PreconditionError("division by zero in " + f_->describe());
    Scalar r(f_);
    switch (f_->kind()) {
    case FieldKind::Rationals: r.v_ = 1 / std::get<0>(v_); break;
    case FieldKind::PrimeField: r.v_ = powmod(std::get<1>(v_), f_->prime() - 2, f_->prime()); break;
    case FieldKind::Cyclotomic: {
        UPoly a(std::get<2>(v_));
        XGcd g = xgcd(a, f_->cyclotomic_polynomial());
        std::vector<mpq_class> c(f_->degree(), 0);
        UPoly s = divmod(g.s, f_->cyclotomic_polynomial()).second;
        for (int i = 0; i <= s.degree(); ++i) c[i] = s.coeff(i);
        r.v_ = std::move(c);
        break;
    }
    case FieldKind::RationalFunctions: {
        const auto& a = std::get<3>(v_);
        std::vector<int> m(a.mono);
        for (auto& x : m) x = -x;
        r.v_ = normalize(a.den, a.num, m);
        break;
    }
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const
{
    check_same(o);
    return *this * o.inv();
}

Scalar Scalar::pow(long e) const
{
    Scalar base = e < 0 ? inv() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Scalar r = from_int(f_, 1);
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

Scalar Scalar::conj() const
{
    switch (f_->kind()) {
    case FieldKind::Rationals:
    case FieldKind::PrimeField: return *this;
    case FieldKind::Cyclotomic: {
        const auto& a = std::get<2>(v_);
        int d = f_->order();
        std::vector<mpq_class> conv(d + 1, 0);
        for (size_t k = 0; k < a.size(); ++k) {
            if (a[k] == 0) continue;
            conv[k == 0 ? 0 : d - k] += a[k];
        }
        Scalar r(f_);
        r.v_ = cyclo_reduce(*f_, conv);
        return r;
    }
    case FieldKind::RationalFunctions: {
        const auto& a = std::get<3>(v_);
        auto dn = a.num.max_exponents(), dd = a.den.max_exponents();
        std::vector<int> m(a.mono.size());
        for (size_t i = 0; i < m.size(); ++i) m[i] = -a.mono[i] - dn[i] + dd[i];
        Scalar r(f_);
        r.v_ = normalize(a.num.reversed(), a.den.reversed(), m);
        return r;
    }
    }
    return *this;
}

bool Scalar::operator==(const Scalar& o) const
{
    if (!same_field(f_, o.f_)) return false;
    switch (f_->kind()) {
    case FieldKind::Rationals: return std::get<0>(v_) == std::get<0>(o.v_);
    case FieldKind::PrimeField: return std::get<1>(v_) == std::get<1>(o.v_);
    case FieldKind::Cyclotomic: return std::get<2>(v_) == std::get<2>(o.v_);
    case FieldKind::RationalFunctions: {
        const auto& a = std::get<3>(v_);
        const auto& b = std::get<3>(o.v_);
        return a.num == b.num && a.den == b.den && a.mono == b.mono;
    }
    }
    return false;
}

bool Scalar::is_zero() const
{
    switch (f_->kind()) {
    case FieldKind::Rationals: return std::get<0>(v_) == 0;
    case FieldKind::PrimeField: return std::get<1>(v_) == 0;
    case FieldKind::Cyclotomic:
        for (const auto& x : std::get<2>(v_))
            if (x != 0) return false;
        return true;
    case FieldKind::RationalFunctions: return std::get<3>(v_).num.is_zero();
    }
    return false;
}

bool Scalar::is_one() const { return *this == from_int(f_, 1); }

bool Scalar::is_rational() const
{
    switch (f_->kind()) {
    case FieldKind::Rationals: return true;
    case FieldKind::PrimeField: return false;
    case FieldKind::Cyclotomic: {
        const auto& a = std::get<2>(v_);
        for (size_t i = 1; i < a.size(); ++i)
            if (a[i] != 0) return false;
        return true;
    }
    case FieldKind::RationalFunctions: {
        const auto& a = std::get<3>(v_);
        for (int x : a.mono)
            if (x != 0) return false;
        return a.num.is_constant() && a.den.is_constant();
    }
    }
    return false;
}

mpq_class Scalar::to_rational() const
{
    if (!is_rational()) throw ValidationError("scalar " + str() + " is not rational");
    switch (f_->kind()) {
    case FieldKind::Rationals: return std::get<0>(v_);
    case FieldKind::Cyclotomic: return std::get<2>(v_)[0];
    case FieldKind::RationalFunctions: {
        const auto& a = std::get<3>(v_);
        return a.num.constant_term() / a.den.constant_term();
    }
    default: break;
    }
    throw ValidationError("not rational");
}

std::uint64_t Scalar::residue() const
{
    if (f_->kind() != FieldKind::PrimeField) throw ValidationError("residue requires a prime field");
    return std::get<1>(v_);
}

cplx Scalar::to_complex() const
{
    switch (f_->kind()) {
    case FieldKind::Rationals: return cplx(std::get<0>(v_).get_d(), 0);
    case FieldKind::Cyclotomic: {
        const auto& a = std::get<2>(v_);
        const long double tau = 2.0L * std::numbers::pi_v<long double> / f_->order();
        cplx acc(0, 0);
        for (size_t k = 0; k < a.size(); ++k) {
            if (a[k] == 0) continue;
            // exact long double conversion of the rational coordinate
            long double num = std::stold(a[k].get_num().get_str());
            long double den = std::stold(a[k].get_den().get_str());
            acc += (num / den) * std::polar(1.0L, tau * static_cast<long double>(k));
        }
        return acc;
    }
    default: throw ValidationError("no complex embedding for " + f_->describe());
    }
}

const std::vector<mpq_class>& Scalar::coords() const
{
    if (f_->kind() != FieldKind::Cyclotomic) throw ValidationError("coords require a cyclotomic field");
    return std::get<2>(v_);
}

const RatFunc& Scalar::ratfunc() const
{
    if (f_->kind() != FieldKind::RationalFunctions) throw ValidationError("not a rational function");
    return std::get<3>(v_);
}

std::string Scalar::str() const
{
    switch (f_->kind()) {
    case FieldKind::Rationals: return std::get<0>(v_).get_str();
    case FieldKind::PrimeField: return std::to_string(std::get<1>(v_)) + " mod " + std::to_string(f_->prime());
    case FieldKind::Cyclotomic:
        return UPoly(std::get<2>(v_)).str("z") + " (order " + std::to_string(f_->order()) + ")";
    case FieldKind::RationalFunctions: {
        const auto& a = std::get<3>(v_);
        std::string num = a.num.times_monomial(a.mono).str(f_->var_names());
        if (a.den.is_constant() && a.den.constant_term() == 1) return num;
        return "(" + num + ")/(" + a.den.str(f_->var_names()) + ")";
    }
    }
    return "?";
}

std::string Scalar::value_str() const
{
    switch (f_->kind()) {
    case FieldKind::PrimeField: return std::to_string(std::get<1>(v_));
    case FieldKind::Cyclotomic: return UPoly(std::get<2>(v_)).str("z");
    default: return str();
    }
}

// ---------------------------------------------------------------- parser

namespace {

class ScalarParser {
public:
    ScalarParser(const std::string& s, const FieldPtr& f, size_t limit) : s_(s), f_(f), end_(limit) {}

    Scalar parse()
    {
        Scalar v = expr();
        skip();
        if (pos_ < end_) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
        return v;
    }

private:
    const std::string& s_;
    FieldPtr f_;
    size_t end_;
    size_t pos_ = 0;

    void skip()
    {
        while (pos_ < end_ && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c)
    {
        skip();
        return pos_ < end_ && s_[pos_] == c;
    }
    bool starts_primary()
    {
        skip();
        if (pos_ >= end_) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    Scalar expr()
    {
        Scalar v = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                v = v + term();
            } else if (peek('-')) {
                ++pos_;
                v = v - term();
            } else {
                return v;
            }
        }
    }

    Scalar term()
    {
        Scalar v = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                v = v * unary();
            } else if (peek('/')) {
                size_t at = pos_++;
                Scalar d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                v = v / d;
            } else if (starts_primary()) {
                v = v * power();
            } else {
                return v;
            }
        }
    }

    Scalar unary()
    {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    Scalar power()
    {
        Scalar b = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            size_t at = pos_;
            bool neg = false;
            if (pos_ < end_ && (s_[pos_] == '-' || s_[pos_] == '+')) {
                neg = s_[pos_] == '-';
                ++pos_;
            }
            size_t st = pos_;
            while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (st == pos_) throw ParseError("expected integer exponent", at);
            long e = std::stol(s_.substr(st, pos_ - st));
            if (neg) e = -e;
            if (e < 0 && b.is_zero()) throw ParseError("negative power of zero", at);
            return b.pow(e);
        }
        return b;
    }

    Scalar primary()
    {
        skip();
        if (pos_ >= end_) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            size_t at = pos_++;
            Scalar v = expr();
            if (!peek(')')) throw ParseError("missing ')' for '(' opened", at);
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t st = pos_;
            while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Scalar::from_rational(f_, mpq_class(mpz_class(s_.substr(st, pos_ - st))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t st = pos_;
            while (pos_ < end_ && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string id = s_.substr(st, pos_ - st);
            return identifier(id, st);
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    Scalar identifier(const std::string& id, size_t at)
    {
        if (f_->kind() == FieldKind::Cyclotomic && (id == "z" || id == "zeta")) return Scalar::zeta(f_, 1);
        if (f_->kind() == FieldKind::RationalFunctions) {
            const auto& names = f_->var_names();
            for (size_t i = 0; i < names.size(); ++i) {
                if (id == names[i]) return Scalar::variable(f_, static_cast<int>(i));
                if (id == "t_" + std::to_string(i + 1)) return Scalar::variable(f_, static_cast<int>(i));
            }
        }
        throw ParseError("unknown identifier '" + id + "' for field " + f_->describe(), at);
    }
};

}  // namespace

Scalar parse_scalar(const std::string& text, const FieldPtr& f)
{
    size_t limit = text.size();
    // optional field suffixes: "k mod p" and "... (order d)"
    static const std::regex mod_re(R"(\s+mod\s+(\d+)\s*$)");
    static const std::regex order_re(R"(\s*\(order\s+(\d+)\)\s*$)");
    std::smatch m;
    if (std::regex_search(text, m, mod_re)) {
        if (f->kind() != FieldKind::PrimeField)
            throw ParseError("'mod p' suffix on a non-prime field", static_cast<size_t>(m.position(0)));
        if (std::stoull(m[1].str()) != f->prime())
            throw ParseError("modulus does not match the field " + f->describe(), static_cast<size_t>(m.position(1)));
        limit = static_cast<size_t>(m.position(0));
    } else if (std::regex_search(text, m, order_re)) {
        if (f->kind() != FieldKind::Cyclotomic)
            throw ParseError("'(order d)' suffix on a non-cyclotomic field", static_cast<size_t>(m.position(0)));
        if (std::stoi(m[1].str()) != f->order())
            throw ParseError("order does not match the field " + f->describe(), static_cast<size_t>(m.position(1)));
        limit = static_cast<size_t>(m.position(0));
    }
    ScalarParser p(text, f, limit);
    return p.parse();
}

}  // namespace ntor
