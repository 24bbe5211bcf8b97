#include "ntor/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ntor {

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }

UPoly UPoly::constant(const mpq_class& c) { return UPoly({c}); }

UPoly UPoly::monomial(const mpq_class& c, int deg)
{
    std::vector<mpq_class> v(deg + 1, 0);
    v[deg] = c;
    return UPoly(std::move(v));
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class UPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

mpq_class UPoly::lead() const { return c_.empty() ? mpq_class(0) : c_.back(); }

UPoly UPoly::operator+(const UPoly& o) const
{
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator-() const
{
    std::vector<mpq_class> r(c_);
    for (auto& x : r) x = -x;
    return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const
{
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly UPoly::scaled(const mpq_class& s) const
{
    std::vector<mpq_class> r(c_);
    for (auto& x : r) x *= s;
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const
{
    if (is_zero()) return {};
    return scaled(1 / lead());
}

UPoly UPoly::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<mpq_class> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(r));
}

UPoly UPoly::reversed() const
{
    std::vector<mpq_class> r(c_.rbegin(), c_.rend());
    return UPoly(std::move(r));
}

mpq_class UPoly::eval(const mpq_class& x) const
{
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class UPoly::content() const
{
    if (is_zero()) return 0;
    mpz_class num = 0, den = 1;
    for (const auto& x : c_) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    }
    mpq_class r(num, den);
    r.canonicalize();
    if (lead() < 0) r = -r;
    return r;
}

UPoly UPoly::primitive() const
{
    if (is_zero()) return {};
    return scaled(1 / content());
}

std::string UPoly::str(const std::string& var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpq_class& a = c_[i];
        if (a == 0) continue;
        mpq_class mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << var;
            if (i != 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<mpq_class> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<mpq_class> q(a.degree() - db + 1, 0);
    mpq_class inv = 1 / b.lead();
    const auto& bc = b.coeffs();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        mpq_class f = r[i] * inv;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * bc[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

XGcd xgcd(const UPoly& a, const UPoly& b)
{
    UPoly r0 = a, r1 = b;
    UPoly s0 = UPoly::constant(1), s1;
    UPoly t0, t1 = UPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UPoly s2 = s0 - q * s1;
        UPoly t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    mpq_class inv = 1 / r0.lead();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p)
{
    // Yun's algorithm over characteristic zero.
    std::vector<std::pair<UPoly, int>> out;
    if (p.degree() <= 0) return out;
    UPoly f = p.monic();
    UPoly fp = f.derivative();
    UPoly a = gcd(f, fp);
    UPoly b = divmod(f, a).first;
    UPoly c = divmod(fp, a).first;
    UPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// ------------------------------------------------- factoring over Z/p

namespace {

using ZP = std::vector<mpz_class>;

struct ModP {
    mpz_class p;

    mpz_class red(const mpz_class& x) const
    {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        return r;
    }
    mpz_class inv(const mpz_class& x) const
    {
        mpz_class r;
        if (!mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()))
            throw std::domain_error("non-invertible residue");
        return r;
    }
    static void trim(ZP& a)
    {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    ZP sub(const ZP& a, const ZP& b) const
    {
        ZP r(std::max(a.size(), b.size()), 0);
        for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
        for (auto& x : r) x = red(x);
        trim(r);
        return r;
    }
    ZP mul(const ZP& a, const ZP& b) const
    {
        if (a.empty() || b.empty()) return {};
        ZP r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        for (auto& x : r) x = red(x);
        trim(r);
        return r;
    }
    std::pair<ZP, ZP> divmod(const ZP& a, const ZP& b) const
    {
        ZP r = a;
        int db = static_cast<int>(b.size()) - 1;
        if (static_cast<int>(a.size()) - 1 < db) return {{}, r};
        ZP q(a.size() - db, 0);
        mpz_class il = inv(b.back());
        for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
            if (r[i] == 0) continue;
            mpz_class f = red(r[i] * il);
            q[i - db] = f;
            for (int j = 0; j <= db; ++j) r[i - db + j] = red(r[i - db + j] - f * b[j]);
        }
        trim(q);
        trim(r);
        return {q, r};
    }
    ZP monic(const ZP& a) const
    {
        if (a.empty()) return a;
        mpz_class il = inv(a.back());
        ZP r(a);
        for (auto& x : r) x = red(x * il);
        return r;
    }
    ZP gcd(ZP a, ZP b) const
    {
        while (!b.empty()) {
            ZP r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    ZP powmod(ZP base, mpz_class e, const ZP& m) const
    {
        ZP result{1};
        base = divmod(base, m).second;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) result = divmod(mul(result, base), m).second;
            e >>= 1;
            if (e > 0) base = divmod(mul(base, base), m).second;
        }
        return result;
    }
    ZP derivative(const ZP& a) const
    {
        if (a.size() <= 1) return {};
        ZP r(a.size() - 1);
        for (size_t i = 1; i < a.size(); ++i) r[i - 1] = red(a[i] * static_cast<unsigned long>(i));
        trim(r);
        return r;
    }
};

int zdeg(const ZP& a) { return static_cast<int>(a.size()) - 1; }

void equal_degree_split(const ModP& F, const ZP& g, int d, gmp_randclass& rng, std::vector<ZP>& out)
{
    if (zdeg(g) == d) {
        out.push_back(g);
        return;
    }
    mpz_class pd;
    mpz_pow_ui(pd.get_mpz_t(), F.p.get_mpz_t(), d);
    mpz_class e = (pd - 1) / 2;
    for (;;) {
        ZP a(zdeg(g));
        for (auto& x : a) x = rng.get_z_range(F.p);
        ModP::trim(a);
        if (zdeg(a) < 1) continue;
        ZP b = F.sub(F.powmod(a, e, g), ZP{1});
        ZP c = F.gcd(g, b);
        if (zdeg(c) > 0 && zdeg(c) < zdeg(g)) {
            equal_degree_split(F, c, d, rng, out);
            equal_degree_split(F, F.divmod(g, c).first, d, rng, out);
            return;
        }
    }
}

std::vector<ZP> factor_mod_p(const ModP& F, ZP f)
{
    std::vector<ZP> out;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20240611UL);
    f = F.monic(f);
    ZP x{0, 1};
    ZP h = x;
    for (int d = 1; 2 * d <= zdeg(f); ++d) {
        h = F.powmod(h, F.p, f);
        ZP g = F.gcd(f, F.sub(h, x));
        if (zdeg(g) > 0) {
            equal_degree_split(F, g, d, rng, out);
            f = F.divmod(f, g).first;
            h = F.divmod(h, f).second;
        }
    }
    if (zdeg(f) > 0) out.push_back(f);
    return out;
}

mpz_class symmetric(const mpz_class& x, const mpz_class& p)
{
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    if (2 * r > p) r -= p;
    return r;
}

UPoly to_q(const ZP& a, const mpz_class& p)
{
    std::vector<mpq_class> c;
    for (const auto& x : a) c.emplace_back(symmetric(x, p));
    return UPoly(std::move(c));
}

bool lex_less(const UPoly& a, const UPoly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

// Irreducible factors of a monic squarefree rational polynomial (Zassenhaus, big prime).
std::vector<UPoly> factor_squarefree(const UPoly& f)
{
    if (f.degree() <= 1) return {f.monic()};
    UPoly g = f.primitive();  // integer coefficients, positive leading coefficient
    int n = g.degree();
    mpz_class lc = g.lead().get_num();
    mpz_class norm2 = 0;
    for (const auto& c : g.coeffs()) norm2 += c.get_num() * c.get_num();
    mpz_class norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    mpz_class bound = (mpz_class(1) << n) * norm * abs(lc);
    mpz_class p = 2 * bound + 1;
    ModP F;
    ZP gz;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        F.p = p;
        if (F.red(lc) == 0) continue;
        gz.clear();
        for (const auto& c : g.coeffs()) gz.push_back(F.red(c.get_num()));
        ModP::trim(gz);
        ZP gg = F.gcd(gz, F.derivative(gz));
        if (zdeg(gg) == 0) break;
    }
    std::vector<ZP> mods = factor_mod_p(F, gz);

    std::vector<UPoly> found;
    UPoly rest = g;
    std::vector<ZP> pool = mods;
    size_t s = 1;
    while (2 * s <= pool.size()) {
        bool hit = false;
        std::vector<size_t> idx(s);
        std::function<bool(size_t, size_t)> rec = [&](size_t pos, size_t start) -> bool {
            if (pos == s) {
                mpz_class l = rest.lead().get_num();
                ZP prod{F.red(l)};
                for (size_t k : idx) prod = F.mul(prod, pool[k]);
                UPoly cand = to_q(prod, p).primitive();
                if (cand.degree() <= 0) return false;
                auto [q, r] = divmod(rest, cand);
                if (!r.is_zero()) return false;
                found.push_back(cand.monic());
                rest = q.primitive();
                std::vector<ZP> keep;
                for (size_t k = 0; k < pool.size(); ++k)
                    if (std::find(idx.begin(), idx.end(), k) == idx.end()) keep.push_back(pool[k]);
                pool = std::move(keep);
                return true;
            }
            for (size_t k = start; k < pool.size(); ++k) {
                idx[pos] = k;
                if (rec(pos + 1, k + 1)) return true;
            }
            return false;
        };
        hit = rec(0, 0);
        if (!hit) ++s;
    }
    if (rest.degree() > 0) found.push_back(rest.monic());
    return found;
}

}  // namespace

Factorization factor(const UPoly& p)
{
    if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    Factorization out;
    out.lead = p.lead();
    for (const auto& [sq, mult] : squarefree_decomposition(p)) {
        for (auto& q : factor_squarefree(sq)) out.factors.emplace_back(std::move(q), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    // merge equal factors (cannot happen after squarefree split, kept for safety)
    std::vector<std::pair<UPoly, int>> merged;
    for (auto& f : out.factors) {
        if (!merged.empty() && merged.back().first == f.first)
            merged.back().second += f.second;
        else
            merged.push_back(std::move(f));
    }
    out.factors = std::move(merged);
    return out;
}

// ---------------------------------------------------------------- MPoly

MPoly MPoly::constant(int nvars, const mpq_class& c)
{
    MPoly r(nvars);
    r.add_term(Exp(nvars, 0), c);
    return r;
}

MPoly MPoly::variable(int nvars, int i)
{
    Exp e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, e, 1);
}

MPoly MPoly::monomial(int nvars, const Exp& e, const mpq_class& c)
{
    MPoly r(nvars);
    r.add_term(e, c);
    return r;
}

void MPoly::add_term(const Exp& e, const mpq_class& c)
{
    if (c == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

bool MPoly::is_constant() const
{
    if (t_.empty()) return true;
    if (t_.size() > 1) return false;
    for (int x : t_.begin()->first)
        if (x != 0) return false;
    return true;
}

mpq_class MPoly::constant_term() const
{
    auto it = t_.find(Exp(n_, 0));
    return it == t_.end() ? mpq_class(0) : it->second;
}

MPoly MPoly::operator+(const MPoly& o) const
{
    MPoly r = *this;
    if (r.n_ == 0) r.n_ = o.n_;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-() const
{
    MPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const
{
    MPoly r(std::max(n_, o.n_));
    for (const auto& [e1, c1] : t_) {
        for (const auto& [e2, c2] : o.t_) {
            Exp e(e1.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

MPoly MPoly::scaled(const mpq_class& s) const
{
    if (s == 0) return MPoly(n_);
    MPoly r = *this;
    for (auto& [e, c] : r.t_) c *= s;
    return r;
}

int MPoly::degree_in(int var) const
{
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e[var]);
    return d;
}

int MPoly::min_degree_in(int var) const
{
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (first || e[var] < d) d = e[var];
        first = false;
    }
    return d;
}

MPoly::Exp MPoly::min_exponents() const
{
    Exp m(n_, 0);
    for (int v = 0; v < n_; ++v) m[v] = min_degree_in(v);
    return m;
}

MPoly::Exp MPoly::max_exponents() const
{
    Exp m(n_, 0);
    for (int v = 0; v < n_; ++v) m[v] = std::max(0, degree_in(v));
    return m;
}

std::vector<MPoly> MPoly::coeffs_in(int var) const
{
    std::vector<MPoly> out(std::max(0, degree_in(var) + 1), MPoly(n_));
    for (const auto& [e, c] : t_) {
        Exp f = e;
        f[var] = 0;
        out[e[var]].add_term(f, c);
    }
    return out;
}

MPoly MPoly::times_monomial(const Exp& m) const
{
    MPoly r(n_);
    for (const auto& [e, c] : t_) {
        Exp f(e.size());
        for (size_t i = 0; i < f.size(); ++i) f[i] = e[i] + m[i];
        r.t_.emplace(std::move(f), c);
    }
    return r;
}

std::pair<MPoly::Exp, mpq_class> MPoly::leading_term() const
{
    if (t_.empty()) throw std::domain_error("leading term of zero polynomial");
    auto it = std::prev(t_.end());
    return {it->first, it->second};
}

MPoly MPoly::normalized() const
{
    if (t_.empty()) return *this;
    return scaled(1 / leading_term().second);
}

MPoly MPoly::reversed() const
{
    Exp d = max_exponents();
    MPoly r(n_);
    for (const auto& [e, c] : t_) {
        Exp f(e.size());
        for (size_t i = 0; i < f.size(); ++i) f[i] = d[i] - e[i];
        r.t_.emplace(std::move(f), c);
    }
    return r;
}

UPoly MPoly::to_upoly() const
{
    if (n_ != 1) throw std::logic_error("to_upoly requires one variable");
    std::vector<mpq_class> c(std::max(0, degree_in(0) + 1), 0);
    for (const auto& [e, x] : t_) {
        if (e[0] < 0) throw std::domain_error("negative exponent in polynomial");
        c[e[0]] = x;
    }
    return UPoly(std::move(c));
}

MPoly MPoly::from_upoly(const UPoly& p)
{
    MPoly r(1);
    for (int i = 0; i <= p.degree(); ++i) r.add_term(Exp{i}, p.coeff(i));
    return r;
}

std::string MPoly::str(const std::vector<std::string>& names) const
{
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, a] = *it;
        mpq_class mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        bool any = false;
        std::ostringstream mono;
        for (int v = 0; v < n_; ++v) {
            if (e[v] == 0) continue;
            if (any) mono << "*";
            mono << names[v];
            if (e[v] != 1) mono << "^" << e[v];
            any = true;
        }
        if (!any) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << mono.str();
        }
    }
    return os.str();
}

bool divides(const MPoly& b, const MPoly& a, MPoly* quotient)
{
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    MPoly q(a.nvars() ? a.nvars() : b.nvars());
    MPoly r = a;
    auto [eb, cb] = b.leading_term();
    while (!r.is_zero()) {
        auto [er, cr] = r.leading_term();
        MPoly::Exp d(er.size());
        for (size_t i = 0; i < er.size(); ++i) {
            d[i] = er[i] - eb[i];
            if (d[i] < 0) return false;
        }
        MPoly t = MPoly::monomial(static_cast<int>(er.size()), d, cr / cb);
        q = q + t;
        r = r - t * b;
    }
    if (quotient) *quotient = std::move(q);
    return true;
}

MPoly exact_div(const MPoly& a, const MPoly& b)
{
    MPoly q;
    if (!divides(b, a, &q)) throw std::domain_error("inexact polynomial division");
    return q;
}

namespace {

MPoly content_in(const MPoly& p, int var)
{
    MPoly g(p.nvars());
    for (const auto& c : p.coeffs_in(var)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

MPoly prem(const MPoly& a, const MPoly& b, int var)
{
    int db = b.degree_in(var);
    MPoly lb = b.coeffs_in(var).back();
    MPoly r = a;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        int dr = r.degree_in(var);
        MPoly lr = r.coeffs_in(var).back();
        MPoly::Exp shift(a.nvars(), 0);
        shift[var] = dr - db;
        r = r * lb - (lr * b).times_monomial(shift);
    }
    return r;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b)
{
    int n = std::max(a.nvars(), b.nvars());
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    int var = -1;
    for (int v = n - 1; v >= 0; --v) {
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
            var = v;
            break;
        }
    }
    if (var < 0) return MPoly::constant(n, 1);
    if (a.degree_in(var) <= 0) return gcd(a, content_in(b, var));
    if (b.degree_in(var) <= 0) return gcd(b, content_in(a, var));

    MPoly ca = content_in(a, var), cb = content_in(b, var);
    MPoly c = gcd(ca, cb);
    MPoly pa = exact_div(a, ca), pb = exact_div(b, cb);
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MPoly r = prem(pa, pb, var);
        pa = pb;
        if (r.is_zero()) break;
        if (r.degree_in(var) <= 0) {
            pa = MPoly::constant(n, 1);
            break;
        }
        pb = exact_div(r, content_in(r, var));
    }
    if (pa.degree_in(var) > 0) pa = exact_div(pa, content_in(pa, var));
    return (c * pa).normalized();
}

}  // namespace ntor
