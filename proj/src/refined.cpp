#include "ntor/refined.hpp"

#include <algorithm>
#include <numeric>

namespace ntor {

namespace {

bool is_acyclic(const std::vector<int>& dims)
{
    return std::all_of(dims.begin(), dims.end(), [](int d) { return d == 0; });
}

// Multiplicative order of a root of unity in a cyclotomic field, 0 if s is not one.
int root_of_unity_order(const Scalar& s)
{
    int bound = 2 * s.field()->order();
    Scalar x = s;
    for (int k = 1; k <= bound; ++k, x = x * s)
        if (x.is_one()) return k;
    return 0;
}

Mat zmat_to_mat(const ZMat& z)
{
    FieldPtr q = Field::rationals();
    Mat m(q, z.r, z.c);
    for (int i = 0; i < z.r; ++i)
        for (int j = 0; j < z.c; ++j) m(i, j) = Scalar::from_rational(q, mpq_class(z(i, j)));
    return m;
}

ZMat mat_to_zmat(const Mat& m)
{
    ZMat z(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            mpq_class v = m(i, j).to_rational();
            if (v.get_den() != 1) throw std::logic_error("expected an integral matrix");
            z(i, j) = v.get_num();
        }
    return z;
}

// Integral basis of the free part of H^j of an integral cochain complex, as rational columns.
Mat integral_free_basis(const IntegralComplex& ic, int j)
{
    FieldPtr q = Field::rationals();
    std::vector<int> dims = ic.dims();
    int dj = dims[j];
    Mat K;
    if (j < static_cast<int>(ic.delta.size())) {
        SmithForm s = smith_normal_form(ic.delta[j]);
        int r = static_cast<int>(s.divisors.size());
        std::vector<int> idx(dj - r);
        std::iota(idx.begin(), idx.end(), r);
        K = zmat_to_mat(s.V).select_columns(idx);
    } else {
        K = Mat::identity(q, dj);
    }
    if (j == 0 || K.cols() == 0) return K;
    // coordinates of Im delta^{j-1} in the saturated kernel basis
    Mat Y = solve(K, zmat_to_mat(ic.delta[j - 1]));
    SmithForm s = smith_normal_form(mat_to_zmat(Y));
    int r = static_cast<int>(s.divisors.size());
    Mat Uinv = inverse(zmat_to_mat(s.U));
    std::vector<int> idx(K.cols() - r);
    std::iota(idx.begin(), idx.end(), r);
    return K * Uinv.select_columns(idx);
}

std::vector<int> hdims(const CohomologyData& d) { return d.dims; }

TorsionReport base_report(const std::string& kind, const CohomologyData& d)
{
    TorsionReport r;
    r.kind = kind;
    r.dims = hdims(d);
    return r;
}

}  // namespace

QuotientDescriptor det_quotient(const Representation& rho)
{
    const FieldPtr& f = rho.field();
    QuotientDescriptor q;
    q.base = f;
    q.subgroup = Subgroup::Norms;
    Scalar one = Scalar::from_int(f, 1);
    for (int i = 0; i < rho.generators(); ++i) {
        Scalar d = det(rho.image(i));
        if (d.is_one()) continue;
        bool unit_added = true;
        if (d == -one) {
            q.units.sign = true;
        } else if (f->kind() == FieldKind::Cyclotomic && root_of_unity_order(d) > 0) {
            int m = root_of_unity_order(d);
            q.units.root_order = q.units.root_order ? std::lcm(q.units.root_order, m) : m;
        } else if (f->kind() == FieldKind::RationalFunctions) {
            const RatFunc& r = d.ratfunc();
            if (!r.num.is_constant() || !r.den.is_constant())
                throw ValidationError("det rho(generator " + std::to_string(i) + ") is not a monomial unit");
            mpq_class c = r.num.constant_term() / r.den.constant_term();
            if (c != 1 && c != -1)
                throw ValidationError("det rho(generator " + std::to_string(i) + ") is not a monomial unit");
            if (c == -1) q.units.sign = true;
            q.units.monomials = true;
        } else {
            unit_added = false;
        }
        if (!unit_added)
            throw ValidationError("det rho(generator " + std::to_string(i) + ") = " + d.str() +
                                  " is not a supported unit; pass an explicit quotient");
    }
    if (q.units.sign || q.units.monomials || q.units.root_order) q.subgroup = Subgroup::NormsAndUnits;
    return q;
}

RealSide real_side(const Presentation& p, const IdentityWord& W)
{
    FieldPtr q = Field::rationals();
    Representation triv = Representation::trivial(p, q, 1);
    BasedComplex c = BasedComplex::from(twisted_cochain_complex(p, W, triv));
    return {c, cohomology_bases(c).h};
}

std::vector<Mat> dual_bases(const Presentation& p, const IdentityWord& W, const Representation& rho,
                            const BilinearForm& psi, const CohomologyData& d, std::vector<PairingMatrix>* pairings)
{
    if (d.dims[0] != d.dims[3] || d.dims[1] != d.dims[2])
        throw PreconditionError("cohomology dimensions violate duality: " + std::to_string(d.dims[0]) + "," +
                                std::to_string(d.dims[1]) + "," + std::to_string(d.dims[2]) + "," +
                                std::to_string(d.dims[3]));
    PairingMatrix P03 = pairing03(psi, d.h[0], d.h[3]);
    PairingMatrix P12 = d_sharp_pairing(p, W, rho, psi, d.h[1], d.h[2]);
    if (pairings) *pairings = {P03, P12};
    return {d.h[0], d.h[1], dual_basis(P12.M, d.h[2]), dual_basis(P03.M, d.h[3])};
}

TorsionReport dual_refined_torsion(const Presentation& p, const IdentityWord& W, const Representation& rho,
                                   const BilinearForm& psi, const std::optional<QuotientDescriptor>& q)
{
    psi.check(rho);
    BasedComplex c = BasedComplex::from(twisted_cochain_complex(p, W, rho));
    CohomologyData d = cohomology_bases(c);
    TorsionReport r = base_report("dual-refined", d);
    r.bases = dual_bases(p, W, rho, psi, d, &r.pairings);
    r.provenance = "deterministic h_0, h_1; h_2, h_3 dual under the duality pairings";
    RealSide rs = real_side(p, W);
    r.raw = refined_sign_torsion(c, r.bases, rs.complex, rs.h, rho.dim());
    r.cls = canonical_class(r.raw, q ? *q : det_quotient(rho));
    if (is_acyclic(r.dims)) r.chain_torsion = chain_torsion(c);
    if (rho.dim() % 2 == 0) r.notes.push_back("even rank: real-side sign skipped");
    return r;
}

TorsionReport trivial_coefficient_torsion(const Presentation& p, const IdentityWord& W, const FieldPtr& f)
{
    Representation triv = Representation::trivial(p, f, 1);
    BilinearForm psi = BilinearForm::standard(f, 1);
    BasedComplex c = BasedComplex::from(twisted_cochain_complex(p, W, triv));
    CohomologyData d = cohomology_bases(c);
    TorsionReport r = base_report("trivial", d);
    r.provenance = "deterministic h_0, h_1; h_2, h_3 dual under the cup pairing";
    if (f->kind() == FieldKind::Rationals) {
        IntegralComplex ic = integral_complex(p, W);
        d.h[0] = integral_free_basis(ic, 0);
        d.h[1] = integral_free_basis(ic, 1);
        r.integral = smith_and_integral_torsion(ic);
        r.provenance = "integral free-part bases h_0, h_1; h_2, h_3 dual under the cup pairing";
        r.notes.push_back("sign of the rational torsion is undetermined (reported as +-)");
    }
    r.bases = dual_bases(p, W, triv, psi, d, &r.pairings);
    RealSide rs = real_side(p, W);
    r.raw = refined_sign_torsion(c, r.bases, rs.complex, rs.h, 1);
    QuotientDescriptor q;
    q.base = f;
    q.subgroup = Subgroup::Squares;
    if (f->kind() == FieldKind::Cyclotomic || f->kind() == FieldKind::RationalFunctions) q.subgroup = Subgroup::Norms;
    r.cls = canonical_class(r.raw, q);
    if (is_acyclic(r.dims)) r.chain_torsion = chain_torsion(c);
    return r;
}

TorsionReport admissible_torsion(const Presentation& p, const IdentityWord& W, const Representation& rho,
                                 const BilinearForm& psi, const TwoChain& sigma)
{
    psi.check(rho);
    BasedComplex c = BasedComplex::from(twisted_cochain_complex(p, W, rho));
    CohomologyData d = cohomology_bases(c);
    if (d.dims[0] != 0) throw PreconditionError("H^0 does not vanish");
    if (!sigma.is_cycle(p)) throw ValidationError("Sigma is not a 2-cycle");
    if (!is_admissible(p, W, rho, psi, sigma))
        throw PreconditionError("triple is not admissible: the surface pairing on H^1 is degenerate");
    TorsionReport r = base_report("admissible", d);
    PairingMatrix M = surface_matrix(p, rho, psi, d.h[1], sigma);
    r.bases = dual_bases(p, W, rho, psi, d, &r.pairings);
    r.pairings.push_back(M);
    RealSide rs = real_side(p, W);
    Scalar tau = refined_sign_torsion(c, r.bases, rs.complex, rs.h, rho.dim());
    // An orthonormal h_1' = h_1 X has |det X|^2 = 1/|det M|, and its dual rescales by conj(det X).
    Scalar dM = det(M.M);
    r.numeric["precision"] = numeric_precision();
    bool embeds = rho.field()->kind() == FieldKind::Rationals || rho.field()->kind() == FieldKind::Cyclotomic;
    if (embeds && M.symmetry != "none") {
        Orthonormalization o = orthonormal_basis(
            to_numeric(M.M), M.symmetry == "hermitian" ? Symmetry::Hermitian : Symmetry::AntiHermitian,
            numeric_precision());
        for (size_t k = 0; k < o.scales.size(); ++k) r.numeric["u2_" + std::to_string(k)] = o.scales[k];
        r.numeric["orthonormal_residual"] = o.residual;
        r.numeric["det_rotation_re"] = o.rotation.determinant().real();
        r.numeric["det_rotation_im"] = o.rotation.determinant().imag();
    }
    QuotientDescriptor q;
    q.base = rho.field();
    q.subgroup = Subgroup::SignOnly;
    if (dM == dM.conj()) {
        r.raw = tau / dM;
        r.provenance = "orthonormal h_1 under the surface pairing (exact: tau / det M, sign absorbed)";
    } else {
        if (!embeds) throw PreconditionError("det of the surface pairing is not real and the field has no embedding");
        r.raw = tau;
        r.provenance = "deterministic h_1; orthonormal correction applied numerically";
        r.notes.push_back("det M is not real; only the numeric payload is normalized");
    }
    r.cls = canonical_class(r.raw, q);
    if (embeds) {
        cplx z = tau.to_complex() / std::abs(dM.to_complex());
        r.numeric["abs_value"] = std::abs(z);
    }
    try {
        QuotientDescriptor dq = det_quotient(rho);
        if (dq.subgroup != Subgroup::Norms) r.notes.push_back("det rho is not trivial; class is reported modulo sign only");
    } catch (const ValidationError&) {
        r.notes.push_back("det rho is not trivial; class is reported modulo sign only");
    }
    return r;
}

TorsionReport sigma_torsion(const Presentation& p, const IdentityWord& W, const Representation& rho,
                            const BilinearForm& psi, const TwoChain& sigma, const std::optional<Mat>& generator)
{
    psi.check(rho);
    TwistedCochainComplex tc = twisted_cochain_complex(p, W, rho);
    BasedComplex c = BasedComplex::from(tc);
    CohomologyData d = cohomology_bases(c);
    if (d.dims[2] != 1) throw PreconditionError("H^2 is not one-dimensional (dim " + std::to_string(d.dims[2]) + ")");
    if (!sigma.is_cycle(p)) throw ValidationError("Sigma is not a 2-cycle");
    TorsionReport r = base_report("sigma", d);
    const FieldPtr& f = rho.field();
    int n = rho.dim(), g = p.g();
    Mat h2;
    if (generator) {
        const Mat& gen = *generator;
        if (gen.rows() != g * n || gen.cols() != 1) throw ValidationError("generator must be a single 2-cochain");
        if (!(tc.delta[2] * gen).is_zero()) throw ValidationError("generator is not a 2-cocycle");
        if (rank(hstack({d.b[2], gen}, f, g * n)) == d.b[2].cols())
            throw PreconditionError("generator is a coboundary");
        h2 = gen;
        r.provenance = "supplied generator h_2; h_1 its left dual";
    } else {
        // restriction to Sigma followed by a psi-functional vanishing on coboundaries
        Mat S(f, n, g * n);
        for (int j = 0; j < g; ++j)
            if (sigma.c[j] != 0)
                S.set_block(0, j * n, Mat::identity(f, n).scaled(Scalar::from_int(f, static_cast<long>(sigma.c[j]))));
        Mat V = nullspace((psi.psi0 * S * tc.delta[1]).adjoint());
        if (V.cols() != 1)
            throw PreconditionError("H^2 of Sigma is not one-dimensional (dim " + std::to_string(V.cols()) + ")");
        Mat ev = V.adjoint() * psi.psi0 * S;
        Scalar e = (ev * d.h[2])(0, 0);
        if (e.is_zero()) throw PreconditionError("the class of Sigma does not generate H^2: evaluation vanishes");
        h2 = d.h[2].scaled(e.inv());
        r.provenance = "h_2 normalized by psi-evaluation on Sigma; h_1 its left dual";
    }
    PairingMatrix P = d_sharp_pairing(p, W, rho, psi, d.h[1], h2);
    Mat h1 = left_dual_basis(P.M, d.h[1]);
    PairingMatrix P03 = pairing03(psi, d.h[0], d.h[3]);
    r.bases = {d.h[0], h1, h2, dual_basis(P03.M, d.h[3])};
    r.pairings = {P03, d_sharp_pairing(p, W, rho, psi, h1, h2)};
    RealSide rs = real_side(p, W);
    r.raw = refined_sign_torsion(c, r.bases, rs.complex, rs.h, n);
    QuotientDescriptor q;
    q.base = f;
    q.subgroup = Subgroup::SignOnly;
    r.cls = canonical_class(r.raw, q);
    if (f->kind() == FieldKind::Rationals || f->kind() == FieldKind::Cyclotomic)
        r.numeric["abs_value"] = std::abs(r.raw.to_complex());
    return r;
}

cplx unit_circle_character(const Presentation& p, const IdentityWord& W, const Representation& rho,
                           const BilinearForm& psi)
{
    if (!rho.is_unitary()) throw ValidationError("unit circle character needs a unitary representation");
    FieldKind k = rho.field()->kind();
    if (k != FieldKind::Rationals && k != FieldKind::Cyclotomic)
        throw ValidationError("unit circle character needs a field with a complex embedding");
    TorsionReport r = dual_refined_torsion(p, W, rho, psi);
    cplx z = r.raw.to_complex();
    return z / std::abs(z);
}

VolumeFormValue volume_form(const Presentation& p, const IdentityWord& W, const Representation& rho,
                            const BilinearForm& psi, const std::optional<Mat>& h2in)
{
    FieldKind k = rho.field()->kind();
    if (k != FieldKind::Rationals && k != FieldKind::Cyclotomic)
        throw ValidationError("volume form needs a field with a complex embedding");
    BasedComplex c = BasedComplex::from(twisted_cochain_complex(p, W, rho));
    CohomologyData d = cohomology_bases(c);
    Mat h2 = h2in ? *h2in : d.h[2];
    PairingMatrix P = d_sharp_pairing(p, W, rho, psi, d.h[1], h2);
    Mat h1 = left_dual_basis(P.M, d.h[1]);
    PairingMatrix P03 = pairing03(psi, d.h[0], d.h[3]);
    RealSide rs = real_side(p, W);
    VolumeFormValue v;
    v.d = d.dims[2];
    v.tau = refined_sign_torsion(c, {d.h[0], h1, h2, dual_basis(P03.M, d.h[3])}, rs.complex, rs.h, rho.dim());
    // std::sqrt is the principal branch: Re > 0, or Im >= 0 on the negative axis
    v.coefficient = std::sqrt(v.tau.to_complex());
    v.branch = "principal: Re > 0, ties Im > 0";
    return v;
}

long double volume(const VolumeFamily& fam)
{
    long double tot = 0;
    for (const auto& c : fam.components) tot += c.length * std::abs(c.form.coefficient);
    return tot;
}

AlexanderResult alexander_polynomial(const Presentation& p, const std::vector<std::vector<int>>& meridians)
{
    int g = p.g(), r = static_cast<int>(p.relators.size());
    if (static_cast<int>(meridians.size()) != g) throw ValidationError("need one meridian image per generator");
    int l = meridians.empty() ? 1 : static_cast<int>(meridians[0].size());
    for (const auto& m : meridians)
        if (static_cast<int>(m.size()) != l) throw ValidationError("meridian images have different lengths");
    if (l < 1) throw ValidationError("meridian images need at least one variable");
    FieldPtr f = Field::rational_functions(l);
    AlexanderResult res{MPoly::constant(l, 1), f->var_names()};
    if (g - 1 == 0) return res;
    if (r < g - 1) throw ValidationError("too few relators for the (g-1)-minors");
    std::vector<Scalar> gen_img;
    for (int i = 0; i < g; ++i) {
        Scalar s = Scalar::from_int(f, 1);
        for (int k = 0; k < l; ++k) s = s * Scalar::variable(f, k).pow(meridians[i][k]);
        gen_img.push_back(s);
    }
    auto ab = [&](const Word& w) {
        Scalar s = Scalar::from_int(f, 1);
        for (const Letter& x : w.letters()) s = s * gen_img[x.gen].pow(x.exp);
        return s;
    };
    Mat A(f, r, g);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < g; ++i) {
            Scalar s(f);
            GroupRingElement d = fox_derivative(p.relators[j], i);
            for (const auto& [w, c] : d.terms())
                s += ab(w) * Scalar::from_int(f, static_cast<long>(c));
            A(j, i) = s;
        }
    MPoly acc(l);
    // rows: all (g-1)-subsets; columns: drop one generator
    std::vector<int> rows(g - 1);
    std::iota(rows.begin(), rows.end(), 0);
    while (true) {
        for (int drop = 0; drop < g; ++drop) {
            std::vector<int> cols;
            for (int i = 0; i < g; ++i)
                if (i != drop) cols.push_back(i);
            Scalar m = det(A.select_rows(rows).select_columns(cols));
            if (m.is_zero()) continue;
            if (!m.ratfunc().den.is_constant()) throw std::logic_error("minor is not a Laurent polynomial");
            acc = gcd(acc, m.ratfunc().num);
        }
        int k = g - 2;
        while (k >= 0 && rows[k] == r - (g - 1) + k) --k;
        if (k < 0) break;
        ++rows[k];
        for (int t = k + 1; t < g - 1; ++t) rows[t] = rows[t - 1] + 1;
    }
    if (acc.is_zero()) {
        res.poly = acc;
        return res;
    }
    acc = acc.times_monomial([&] {
        MPoly::Exp e = acc.min_exponents();
        for (int& x : e) x = -x;
        return e;
    }());
    mpz_class den = 1, num = 0;
    for (const auto& [e, c] : acc.terms()) den = lcm(den, mpz_class(c.get_den()));
    acc = acc.scaled(mpq_class(den));
    for (const auto& [e, c] : acc.terms()) num = gcd(num, mpz_class(c.get_num()));
    if (acc.leading_term().second < 0) num = -num;
    res.poly = acc.scaled(mpq_class(1, 1) / mpq_class(num));
    return res;
}

}  // namespace ntor
