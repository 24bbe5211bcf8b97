#include "ntor/catalog.hpp"

#include <cmath>
#include <numeric>

namespace ntor {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

Word w(const std::string& s, const std::vector<std::string>& names) { return parse_word(s, names); }

Mat diag(const FieldPtr& f, const std::vector<Scalar>& d)
{
    Mat m(f, static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

long legendre(long a, long p)
{
    long r = 1, b = mod(a, p), e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r == 1 ? 1 : (r == 0 ? 0 : -1);
}

}  // namespace

Scalar RootOfUnity::in(const FieldPtr& f) const
{
    long d = reduced_den();
    if (f->kind() != FieldKind::Cyclotomic || f->order() % d != 0)
        throw ValidationError("root of unity of order " + std::to_string(d) + " is not in " + f->describe());
    long g = std::gcd(mod(num, den), den);
    return Scalar::zeta(f, (mod(num, den) / g) * (f->order() / d));
}

long RootOfUnity::reduced_den() const
{
    if (den <= 0) throw ValidationError("root of unity needs a positive denominator");
    return den / std::gcd(mod(num, den), den);
}

// ---------------------------------------------------------------- lens spaces

LensSpace lens_space(long p, long q)
{
    if (p < 2) throw ValidationError("lens space needs p >= 2");
    if (std::gcd(p, q) != 1) throw ValidationError("lens space needs gcd(p, q) = 1");
    LensSpace L{p, mod(q, p), {}, {}};
    L.pres.generators = {"x"};
    L.pres.relators = {Word::gen(0).pow(static_cast<int>(p))};
    L.identity.factors = {{Word::gen(0).pow(static_cast<int>(L.q)), 0, 1}, {Word(), 0, -1}};
    return L;
}

// ---------------------------------------------------------------- Seifert

SeifertSpec SeifertSpec::from_abk(long a, long b, long k)
{
    if (a < 1 || b < 1 || k < 1) throw ValidationError("a, b, k must be positive");
    if (std::gcd(a, b) != 1) throw ValidationError("a and b must be coprime");
    SeifertSpec s;
    s.l = b * (a + b) * k;
    s.m = a * (a + b) * k;
    s.n = a * b * k;
    s.abk = std::array<long, 3>{a, b, k};
    return s;
}

void SeifertSpec::validate() const
{
    if (n < 2 || m < 2 || l < 2) throw ValidationError("Seifert parameters must be at least 2");
    if (abk) {
        auto [a, b, k] = *abk;
        if (std::gcd(a, b) != 1) throw ValidationError("a and b must be coprime");
        if (l != b * (a + b) * k || m != a * (a + b) * k || n != a * b * k)
            throw ValidationError("(l, m, n) does not match (a, b, k)");
    }
}

Seifert seifert(const SeifertSpec& spec)
{
    spec.validate();
    Seifert s;
    s.spec = spec;
    s.pres.generators = {"g", "h"};
    Word g = Word::gen(0), h = Word::gen(1);
    s.pres.relators = {(g * h).pow(static_cast<int>(spec.n)) * h.pow(static_cast<int>(-spec.m)),
                       (h * g).pow(static_cast<int>(spec.n)) * g.pow(static_cast<int>(-spec.l))};
    s.identity.factors = {{Word(), 0, 1}, {h, 0, -1}, {Word(), 1, 1}, {g, 1, -1}};
    if (!verify_identity(s.pres, s.identity)) throw std::logic_error("Seifert identity does not verify");
    if (spec.abk) {
        auto [a, b, k] = *spec.abk;
        (void)k;
        s.sigma = TwoChain{{b, a}};
    }
    return s;
}

CyclotomicSqrt cyclotomic_sqrt(const mpq_class& q, int base_order)
{
    if (q <= 0) throw ValidationError("square root of a non-positive rational");
    mpz_class num = q.get_num() * q.get_den();  // sqrt(q) = sqrt(num) / den
    mpz_class m = squarefree_part(num);
    mpz_class s = sqrt(mpz_class(num / m));
    if (m > 1000000) throw ValidationError("square root conductor too large");
    long mm = m.get_si();
    long cond = mm % 4 == 1 ? mm : 4 * mm;
    int order = static_cast<int>(std::lcm<long>(base_order, cond));
    FieldPtr f = Field::cyclotomic(order);
    Scalar root = Scalar::from_int(f, 1);
    long rest = mm;
    for (long p = 2; rest > 1; ++p) {
        if (rest % p) continue;
        rest /= p;
        Scalar sp(f);
        if (p == 2) {
            sp = Scalar::zeta(f, order / 8) + Scalar::zeta(f, order / 8).inv();
        } else {
            Scalar G(f);
            for (long a = 1; a < p; ++a)
                G += Scalar::zeta(f, a * (order / p)) * Scalar::from_int(f, legendre(a, p));
            sp = p % 4 == 1 ? G : -(Scalar::zeta(f, order / 4) * G);
        }
        root = root * sp;
    }
    if (root.to_complex().real() < 0) root = -root;
    if (root * root != Scalar::from_int(f, mm)) throw std::logic_error("cyclotomic square root failed");
    return {order, root * Scalar::from_rational(f, mpq_class(s, q.get_den()))};
}

SU2Pair Seifert::su2(const SL2SpectraSpec& sp) const
{
    int d0 = static_cast<int>(std::lcm(sp.alpha.reduced_den(), std::lcm(sp.beta.reduced_den(), sp.gamma.reduced_den())));
    d0 = std::max(d0, 1);
    auto build = [&](int order, SU2Pair& r) {
        r.field = Field::cyclotomic(order);
        r.alpha = sp.alpha.in(r.field);
        r.beta = sp.beta.in(r.field);
        r.gamma = sp.gamma.in(r.field);
        Scalar a = r.alpha, b = r.beta, c = r.gamma;
        Scalar denom = a.inv() - a;
        if (denom.is_zero()) throw ValidationError("alpha must differ from +-1");
        r.x = (a.inv() * (b + b.inv()) - (c + c.inv())) / denom;
        r.w = ((c + c.inv()) - a * (b + b.inv())) / denom;
    };
    SU2Pair r;
    build(d0, r);
    const FieldPtr& f0 = r.field;
    Scalar al = r.alpha.pow(spec.l), bm = r.beta.pow(spec.m), gn = r.gamma.pow(spec.n);
    Scalar one = Scalar::from_int(f0, 1);
    if (!(al == bm && bm == gn) || !(al == one || al == -one))
        throw ValidationError("condition (I) fails: alpha^l, beta^m, gamma^n must agree and lie in {+-1}");
    r.case_sign = al == one ? 1 : -1;
    if (r.w != r.x.conj()) throw ValidationError("no SU(2) completion: w is not the conjugate of x");
    Scalar t = one - r.x * r.x.conj();
    if (t.to_complex().real() < -numeric_precision()) throw ValidationError("|x| > 1: no SU(2) completion");
    if (t.is_rational()) {
        mpq_class tq = t.to_rational();
        Scalar y;
        if (tq == 0) {
            y = Scalar(f0);
        } else {
            CyclotomicSqrt cs = cyclotomic_sqrt(tq, d0);
            if (cs.order != d0) build(cs.order, r);
            y = cs.value;
        }
        const FieldPtr& f = r.field;
        if (tq == 0) y = Scalar(f);
        r.A = diag(f, {r.alpha, r.alpha.inv()});
        r.B = Mat::from_rows(f, {{r.x, y}, {-y.conj(), r.w}});
        r.psi = BilinearForm::standard(f, 2);
        r.completion = "su2";
    } else {
        const FieldPtr& f = r.field;
        r.A = diag(f, {r.alpha, r.alpha.inv()});
        r.B = Mat::from_rows(f, {{r.x, one}, {-t, r.w}});
        r.psi = BilinearForm{diag(f, {t, one}), Symmetry::Hermitian};
        r.completion = "conjugate";
    }
    r.rho = Representation(pres, r.field, {r.A, r.B}, true);
    r.psi.check(r.rho);
    return r;
}

std::vector<SL2SpectraSpec> Seifert::spectra(int case_sign) const
{
    std::vector<SL2SpectraSpec> out;
    auto ok = [&](long k) { return case_sign > 0 ? k % 2 == 0 : k % 2 != 0; };
    auto z = [](long k, long d) { return std::polar(1.0L, 2 * M_PIl * k / d); };
    for (long ka = 0; ka < 2 * spec.l; ++ka) {
        if (!ok(ka)) continue;
        cplx a = z(ka, 2 * spec.l);
        if (std::abs(a * a - 1.0L) < 1e-9) continue;
        for (long kb = 0; kb < 2 * spec.m; ++kb) {
            if (!ok(kb)) continue;
            cplx b = z(kb, 2 * spec.m);
            for (long kg = 0; kg < 2 * spec.n; ++kg) {
                if (!ok(kg)) continue;
                cplx c = z(kg, 2 * spec.n);
                cplx x = (1.0L / a * (b + 1.0L / b) - (c + 1.0L / c)) / (1.0L / a - a);
                cplx wv = ((c + 1.0L / c) - a * (b + 1.0L / b)) / (1.0L / a - a);
                if (std::abs(wv - std::conj(x)) > 1e-9 || std::abs(x) > 1 + 1e-9) continue;
                out.push_back({{ka, 2 * spec.l}, {kb, 2 * spec.m}, {kg, 2 * spec.n}});
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- torus bundles

void TorusBundleSpec::validate() const
{
    long d = alpha * delta - beta * gamma;
    if (d != 1 && d != -1) throw ValidationError("torus bundle monodromy must have determinant +-1");
}

TorusBundle torus_bundle(const TorusBundleSpec& spec)
{
    spec.validate();
    TorusBundle T;
    T.spec = spec;
    const std::vector<std::string> names = {"a", "b", "t"};
    T.pres.generators = names;
    Word a = Word::gen(0), b = Word::gen(1), t = Word::gen(2);
    auto ip = [](long v) { return static_cast<int>(v); };
    Word fa = a.pow(ip(spec.alpha)) * b.pow(ip(spec.beta)), fb = a.pow(ip(spec.gamma)) * b.pow(ip(spec.delta));
    T.pres.relators = {t * fa * t.inverse() * a.inverse(), t * fb * t.inverse() * b.inverse(),
                       a * b * a.inverse() * b.inverse()};
    if (spec.qf) T.qf = *spec.qf;
    else if (spec.supported()) T.qf = a.inverse() * b.inverse();
    else throw ValidationError("q_f must be supplied outside the case alpha = delta = -1, gamma = 0");
    Word comm = a * b * a.inverse() * b.inverse();
    Word fcomm = fa * fb * fa.inverse() * fb.inverse();
    if (fcomm != T.qf * comm * T.qf.inverse())
        throw ValidationError("q_f does not conjugate [a, b] to its image under the monodromy");
    Word aba = a * b * a.inverse();
    T.identity.factors = {{Word(), 0, 1}, {a, 1, 1}, {aba, 0, -1}, {comm, 1, -1}, {Word(), 2, 1}, {t * T.qf, 2, -1}};
    if (!verify_identity(T.pres, T.identity)) throw ValidationError("torus bundle identity does not verify");
    T.fiber = TwoChain{{0, 0, 1}};
    T.sigma_plus = TwoChain{{0, 0, -1}};
    T.sigma_minus = TwoChain{{0, 0, 1}};
    return T;
}

Representation TorusBundle::rho(const TorusPoint& pt) const
{
    FieldPtr f = Field::cyclotomic(static_cast<int>(std::lcm(pt.u.reduced_den(), pt.v.reduced_den())));
    Scalar u = pt.u.in(f), v = pt.v.in(f), one = Scalar::from_int(f, 1), zero(f);
    return Representation(pres, f,
                          {diag(f, {u, u.inv()}), diag(f, {v, v.inv()}), Mat::from_rows(f, {{zero, one}, {-one, zero}})},
                          true);
}

Representation TorusBundle::adjoint(const TorusPoint& pt) const
{
    RootOfUnity u2{2 * pt.u.num, pt.u.den}, v2{2 * pt.v.num, pt.v.den};
    FieldPtr f = Field::cyclotomic(static_cast<int>(std::lcm(u2.reduced_den(), v2.reduced_den())));
    Scalar u = u2.in(f), v = v2.in(f), one = Scalar::from_int(f, 1), zero(f);
    Mat tm = Mat::from_rows(f, {{zero, zero, -one}, {zero, -one, zero}, {-one, zero, zero}});
    return Representation(pres, f, {diag(f, {u, one, u.inv()}), diag(f, {v, one, v.inv()}), tm}, true);
}

std::vector<TorusPoint> TorusBundle::solve(long N) const
{
    if (N < 1) throw ValidationError("grid order must be positive");
    std::vector<TorusPoint> out;
    for (long j = 0; j < N; ++j)
        for (long k = 0; k < N; ++k) {
            if (mod((spec.alpha + 1) * j + spec.beta * k, N) != 0) continue;
            if (mod(spec.gamma * j + (spec.delta + 1) * k, N) != 0) continue;
            if (mod(2 * j, N) == 0 && mod(2 * k, N) == 0) continue;
            out.push_back({{j, N}, {k, N}});
        }
    return out;
}

VolumeFamily TorusBundle::volume_family(long sample_den) const
{
    if (!spec.supported()) throw ValidationError("volume is only supported for alpha = delta = -1, gamma = 0");
    if (sample_den < 5) throw ValidationError("sample point must avoid u^4 = 1");
    VolumeFamily fam;
    fam.name = "torus-bundle beta=" + std::to_string(spec.beta);
    long nb = std::labs(spec.beta);
    for (long k = 0; k < nb; ++k) {
        TorusPoint pt{{1, sample_den}, {k, nb}};
        Representation ad = adjoint(pt);
        VolumeComponent c;
        c.label = "v = exp(2 pi i " + std::to_string(k) + "/" + std::to_string(nb) + ")";
        c.length = 2 * M_PIl;
        c.form = volume_form(pres, identity, ad, BilinearForm::standard(ad.field(), 3));
        fam.components.push_back(c);
    }
    return fam;
}

// ---------------------------------------------------------------- small examples

NamedPresentation t3()
{
    NamedPresentation r;
    std::vector<std::string> n = {"x", "y", "z"};
    r.pres.generators = n;
    r.pres.relators = {w("x y x^-1 y^-1", n), w("y z y^-1 z^-1", n), w("z x z^-1 x^-1", n)};
    r.identity = parse_identity("(z, 0, +) (1, 1, -) (y, 2, +) (y x y^-1, 1, +) (y x y^-1 x^-1, 2, -) (1, 0, -)", n);
    if (!verify_identity(r.pres, r.identity)) throw std::logic_error("T^3 identity does not verify");
    return r;
}

Presentation trefoil()
{
    Presentation p;
    p.generators = {"x", "y"};
    p.relators = {w("x y x y^-1 x^-1 y^-1", p.generators)};
    return p;
}

}  // namespace ntor
