#include "ntor/quotient.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace ntor {

namespace {

std::atomic<double> g_precision{1e-12};

mpz_class combine_squarefree(const mpz_class& a, const mpz_class& b)
{
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return a * b / (g * g);
}

mpz_class rational_squarefree(const mpq_class& q)
{
    return combine_squarefree(squarefree_part(q.get_num()), squarefree_part(q.get_den()));
}

long double reduce_angle(long double theta, int m)
{
    const long double pi = std::numbers::pi_v<long double>;
    long double period = 2 * pi / m;
    long double r = theta - period * std::floor((theta + period / 2) / period);
    if (r >= pi / m - static_cast<long double>(numeric_precision())) r -= period;
    return r;
}

cplx canonical_unit(cplx z, int m)
{
    long double th = std::arg(z);
    if (m > 1) th = reduce_angle(th, m);
    return std::polar(1.0L, th);
}

CoeffKey key_of(const UPoly& p) { return p.coeffs(); }

UPoly star_monic(const UPoly& q)
{
    UPoly r = q.reversed();
    return r.scaled(1 / r.lead());
}

bool coeff_less(const CoeffKey& a, const CoeffKey& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Adds sign * [p] to the Laurent payload; p is a nonzero polynomial free of the factor t.
void add_laurent(ClassPayload& c, const UPoly& p, int sign)
{
    Factorization f = factor(p);
    if (f.lead < 0) c.z4 += 2;
    c.squarefree = combine_squarefree(c.squarefree, rational_squarefree(abs(f.lead)));
    const UPoly tp1({mpq_class(1), mpq_class(1)}), tm1({mpq_class(-1), mpq_class(1)});
    for (const auto& [q, m] : f.factors) {
        long sm = static_cast<long>(sign) * m;
        if (q == tp1) {
            c.e_exp += sm;
        } else if (q == tm1) {
            c.e_exp += sm;
            c.z4 += static_cast<int>(sm);
        } else if (q.degree() == 1 && q.coeff(0) == 0) {
            c.e_exp += 2 * sm;
        } else {
            long n = q.degree();
            UPoly qs = star_monic(q);
            if (qs == q) {
                c.e_exp += n * sm;
                if (m % 2) {
                    auto k = key_of(q);
                    if (c.sym_parity.count(k)) c.sym_parity.erase(k);
                    else c.sym_parity[k] = 1;
                }
            } else {
                CoeffKey kq = key_of(q), ks = key_of(qs);
                if (coeff_less(kq, ks)) {
                    c.asym[kq] += sm;
                } else {
                    c.e_exp += 2 * n * sm;
                    c.asym[ks] -= sm;
                    mpq_class q0 = q.coeff(0);
                    if (q0 < 0 && (m % 2)) c.z4 += 2;
                    if (m % 2) c.squarefree = combine_squarefree(c.squarefree, rational_squarefree(abs(q0)));
                }
            }
        }
    }
}

void reduce_laurent(ClassPayload& c)
{
    if (c.e_mod) c.e_exp = ((c.e_exp % c.e_mod) + c.e_mod) % c.e_mod;
    c.z4 = ((c.z4 % c.z4_mod) + c.z4_mod) % c.z4_mod;
    for (auto it = c.asym.begin(); it != c.asym.end();) {
        if (it->second == 0) it = c.asym.erase(it);
        else ++it;
    }
}

std::string key_str(const CoeffKey& k) { return UPoly(k).str("t"); }

mpq_class mpoly_content(const MPoly& p)
{
    mpz_class num = 0, den = 1;
    for (const auto& [e, c] : p.terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    mpq_class r(num, den);
    r.canonicalize();
    if (p.leading_term().second < 0) r = -r;
    return r;
}

}  // namespace

double numeric_precision() { return g_precision.load(); }

int precision_digits()
{
    int d = static_cast<int>(std::ceil(-std::log10(numeric_precision())));
    return std::clamp(d, 1, 17);
}

void set_numeric_precision(double eps)
{
    if (!(eps > 0) || eps >= 1) throw ValidationError("precision must lie in (0, 1)");
    g_precision.store(eps);
}

mpz_class squarefree_part(const mpz_class& n)
{
    if (n == 0) throw ValidationError("squarefree part of zero");
    mpz_class m = abs(n), out = 1;
    for (unsigned long p = 2; p <= 1000000 && mpz_class(p) * p <= m; ++p) {
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++e;
        }
        if (e % 2) out *= p;
    }
    // Leftover cofactor: a perfect square contributes nothing; otherwise treat as squarefree.
    if (m > 1 && !mpz_perfect_square_p(m.get_mpz_t())) out *= m;
    return n < 0 ? mpz_class(-out) : out;
}

// ---------------------------------------------------------------- descriptor

QuotientDescriptor QuotientDescriptor::parse(const std::string& spec, const FieldPtr& f)
{
    QuotientDescriptor q;
    q.base = f;
    std::stringstream ss(spec);
    std::string part;
    if (spec == "sign-only") {
        q.subgroup = Subgroup::SignOnly;
        return q;
    }
    bool first = true;
    while (std::getline(ss, part, '+')) {
        if (first) {
            if (part == "squares") q.subgroup = Subgroup::Squares;
            else if (part == "norms") q.subgroup = Subgroup::Norms;
            else throw ValidationError("unknown quotient subgroup '" + part + "'");
            first = false;
            continue;
        }
        if (part == "sign") q.units.sign = true;
        else if (part == "monomials") q.units.monomials = true;
        else if (part.rfind("mu", 0) == 0 && part.size() > 2) {
            int m = 0;
            try {
                m = std::stoi(part.substr(2));
            } catch (...) {
                throw ValidationError("bad root-of-unity order in '" + part + "'");
            }
            if (m < 1) throw ValidationError("root-of-unity order must be positive");
            q.units.root_order = q.units.root_order ? std::lcm(q.units.root_order, m) : m;
        } else {
            throw ValidationError("unknown unit set '" + part + "'");
        }
        q.subgroup = q.subgroup == Subgroup::Squares ? Subgroup::Squares : Subgroup::NormsAndUnits;
    }
    if (first) throw ValidationError("empty quotient specification");
    if (q.units.monomials && f->kind() != FieldKind::RationalFunctions)
        throw ValidationError("monomial units require a rational function field");
    if (q.units.root_order > 2 && f->kind() != FieldKind::Cyclotomic)
        throw ValidationError("roots of unity beyond -1 require a cyclotomic field");
    if (q.units.root_order > 2 && f->order() % q.units.root_order != 0 && (2 * f->order()) % q.units.root_order != 0)
        throw ValidationError("mu_" + std::to_string(q.units.root_order) + " is not contained in " + f->describe());
    return q;
}

std::string QuotientDescriptor::describe() const
{
    if (subgroup == Subgroup::SignOnly) return "sign-only";
    std::string s = subgroup == Subgroup::Squares ? "squares" : "norms";
    if (units.sign) s += "+sign";
    if (units.monomials) s += "+monomials";
    if (units.root_order) s += "+mu" + std::to_string(units.root_order);
    return s;
}

bool QuotientDescriptor::operator==(const QuotientDescriptor& o) const
{
    return same_field(base, o.base) && subgroup == o.subgroup && units.sign == o.units.sign &&
           units.monomials == o.units.monomials && units.root_order == o.units.root_order;
}

// ---------------------------------------------------------------- payloads

std::string ClassPayload::str() const
{
    std::ostringstream os;
    switch (kind) {
    case PayloadKind::Trivial: return "1";
    case PayloadKind::Squarefree: return squarefree.get_str();
    case PayloadKind::ResidueBit: return nonresidue ? "nonresidue" : "residue";
    case PayloadKind::UnitCircle: {
        os.precision(precision_digits());
        const long double eps = numeric_precision();
        auto clean = [eps](long double v) { return std::abs(v) < eps ? 0.0 : static_cast<double>(v); };
        double re = clean(unit.real()), im = clean(unit.imag());
        os << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
        if (root_order > 1) os << " mod mu_" << root_order;
        return os.str();
    }
    case PayloadKind::Laurent: {
        os << "E=" << e_exp << (e_mod ? " (mod 2)" : "") << "; z4=" << z4 << " (mod " << z4_mod
           << "); rational=" << squarefree.get_str() << "; symmetric={";
        bool first = true;
        for (const auto& [k, v] : sym_parity) {
            os << (first ? "" : ", ") << key_str(k);
            first = false;
        }
        os << "}; asymmetric={";
        first = true;
        for (const auto& [k, v] : asym) {
            os << (first ? "" : ", ") << "(" << key_str(k) << ")^" << v;
            first = false;
        }
        os << "}";
        return os.str();
    }
    case PayloadKind::Partial: return "partial: " + partial_repr;
    case PayloadKind::Signed: return "+-(" + partial_repr + ")";
    }
    return "?";
}

bool ClassPayload::is_identity() const
{
    switch (kind) {
    case PayloadKind::Trivial: return true;
    case PayloadKind::Squarefree: return squarefree == 1;
    case PayloadKind::ResidueBit: return !nonresidue;
    case PayloadKind::UnitCircle: return std::abs(unit - cplx(1, 0)) < numeric_precision();
    case PayloadKind::Laurent:
        return e_exp == 0 && z4 == 0 && squarefree == 1 && sym_parity.empty() && asym.empty();
    case PayloadKind::Partial: return partial_repr == "1";
    case PayloadKind::Signed: return partial_repr == "1";
    }
    return false;
}

bool ClassPayload::equals(const ClassPayload& o, double eps) const
{
    if (kind != o.kind) return false;
    switch (kind) {
    case PayloadKind::Trivial: return true;
    case PayloadKind::Squarefree: return squarefree == o.squarefree;
    case PayloadKind::ResidueBit: return nonresidue == o.nonresidue;
    case PayloadKind::UnitCircle: {
        if (root_order != o.root_order) return false;
        // compare on the quotient circle so representatives near the cut agree
        cplx r = unit / o.unit;
        long double th = std::arg(r);
        if (root_order > 1) th = reduce_angle(th, root_order);
        return std::abs(th) < eps;
    }
    case PayloadKind::Laurent:
        return e_exp == o.e_exp && e_mod == o.e_mod && z4 == o.z4 && z4_mod == o.z4_mod &&
               squarefree == o.squarefree && sym_parity == o.sym_parity && asym == o.asym;
    case PayloadKind::Partial:
    case PayloadKind::Signed: return partial_repr == o.partial_repr;
    }
    return false;
}

ClassPayload combine(const ClassPayload& a, const ClassPayload& b)
{
    if (a.kind != b.kind) throw ValidationError("cannot combine payloads of different kinds");
    ClassPayload c = a;
    switch (a.kind) {
    case PayloadKind::Trivial: break;
    case PayloadKind::Squarefree: c.squarefree = combine_squarefree(a.squarefree, b.squarefree); break;
    case PayloadKind::ResidueBit: c.nonresidue = a.nonresidue != b.nonresidue; break;
    case PayloadKind::UnitCircle: c.unit = canonical_unit(a.unit * b.unit, a.root_order); break;
    case PayloadKind::Laurent:
        c.e_exp += b.e_exp;
        c.z4 += b.z4;
        c.squarefree = combine_squarefree(a.squarefree, b.squarefree);
        for (const auto& [k, v] : b.sym_parity) {
            if (c.sym_parity.count(k)) c.sym_parity.erase(k);
            else c.sym_parity[k] = 1;
        }
        for (const auto& [k, v] : b.asym) c.asym[k] += v;
        reduce_laurent(c);
        break;
    case PayloadKind::Partial: throw ValidationError("partial classes do not combine");
    case PayloadKind::Signed: throw ValidationError("sign-only classes combine through their raw values");
    }
    return c;
}

bool TorsionClass::same_class(const TorsionClass& o) const
{
    return quotient == o.quotient && canonical.equals(o.canonical, numeric_precision());
}

// ---------------------------------------------------------------- reduction

TorsionClass canonical_class(const Scalar& s, const QuotientDescriptor& q)
{
    if (s.is_zero()) throw ValidationError("torsion class of zero");
    if (!same_field(s.field(), q.base)) throw ValidationError("scalar and quotient live over different fields");
    const FieldPtr& f = q.base;
    ClassPayload c;
    if (q.subgroup == Subgroup::SignOnly) {
        c.kind = PayloadKind::Signed;
        Scalar r = sign_normalized(s);
        c.partial_repr = r.str();
        if (f->kind() == FieldKind::Rationals || f->kind() == FieldKind::Cyclotomic) c.unit = r.to_complex();
        return TorsionClass{s, q, c};
    }
    bool sign_unit = q.units.sign || (q.units.root_order % 2 == 0 && q.units.root_order > 0);
    switch (f->kind()) {
    case FieldKind::Rationals: {
        // N(Q) = squares since the involution is the identity
        c.kind = PayloadKind::Squarefree;
        c.squarefree = rational_squarefree(s.to_rational());
        if (sign_unit) c.squarefree = abs(c.squarefree);
        break;
    }
    case FieldKind::PrimeField: {
        c.kind = PayloadKind::ResidueBit;
        std::uint64_t p = f->prime();
        if (p == 2) break;
        bool nonres = s.pow(static_cast<long>((p - 1) / 2)).residue() != 1;
        bool minus_one_nonres = p % 4 == 3;
        if (sign_unit && minus_one_nonres) nonres = false;
        c.nonresidue = nonres;
        break;
    }
    case FieldKind::Cyclotomic: {
        if (q.subgroup == Subgroup::Squares)
            throw ValidationError("unsupported quotient: cyclotomic field modulo squares");
        c.kind = PayloadKind::UnitCircle;
        int m = 1;
        if (q.units.root_order) m = q.units.root_order;
        if (q.units.sign) m = std::lcm(m, 2);
        c.root_order = m;
        cplx z = s.to_complex();
        if (std::abs(z) < numeric_precision()) throw PreconditionError("embedded value too close to zero");
        c.unit = canonical_unit(z / std::abs(z), m);
        break;
    }
    case FieldKind::RationalFunctions: {
        const RatFunc& r = s.ratfunc();
        if (f->nvars() == 1) {
            if (q.subgroup == Subgroup::Squares)
                throw ValidationError("unsupported quotient: Q(t) modulo squares");
            c.kind = PayloadKind::Laurent;
            c.e_exp = 2L * r.mono[0];
            add_laurent(c, r.num.to_upoly(), 1);
            add_laurent(c, r.den.to_upoly(), -1);
            if (q.units.monomials) c.e_mod = 2;
            if (sign_unit) c.z4_mod = 2;
            reduce_laurent(c);
        } else {
            c.kind = PayloadKind::Partial;
            mpq_class cn = mpoly_content(r.num), cd = mpoly_content(r.den);
            mpz_class sq = rational_squarefree(cn / cd);
            if (sign_unit) sq = abs(sq);
            MPoly pn = r.num.scaled(1 / cn), pd = r.den.scaled(1 / cd);
            std::string repr = sq.get_str();
            if (!(pn.is_constant() && pd.is_constant())) {
                repr += "*(" + pn.str(f->var_names()) + ")";
                if (!pd.is_constant()) repr += "/(" + pd.str(f->var_names()) + ")";
            }
            if (!q.units.monomials) {
                std::string m;
                for (int i = 0; i < f->nvars(); ++i)
                    if (r.mono[i]) m += "*" + f->var_names()[i] + "^" + std::to_string(r.mono[i]);
                repr += m;
            }
            c.partial_repr = repr;
        }
        break;
    }
    }
    return TorsionClass{s, q, c};
}

Scalar sign_normalized(const Scalar& s)
{
    bool neg = false;
    switch (s.field()->kind()) {
    case FieldKind::Rationals: neg = s.to_rational() < 0; break;
    case FieldKind::PrimeField: neg = s.residue() > s.field()->prime() / 2; break;
    case FieldKind::Cyclotomic:
        for (const auto& c : s.coords())
            if (c != 0) {
                neg = c < 0;
                break;
            }
        break;
    case FieldKind::RationalFunctions:
        if (!s.is_zero()) neg = s.ratfunc().num.leading_term().second < 0;
        break;
    }
    return neg ? -s : s;
}

bool is_reciprocal(const Scalar& f)
{
    if (f.field()->kind() != FieldKind::RationalFunctions) throw ValidationError("is_reciprocal needs Q(t)");
    if (f.is_zero()) throw ValidationError("is_reciprocal of zero");
    Scalar ratio = f.conj() / f;
    const RatFunc& r = ratio.ratfunc();
    return r.num.is_constant() && r.den.is_constant();
}

}  // namespace ntor
