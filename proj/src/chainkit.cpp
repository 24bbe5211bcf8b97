#include "ntor/chainkit.hpp"

namespace ntor {

BasedComplex BasedComplex::from(const TwistedCochainComplex& t)
{
    BasedComplex c{t.field, t.dims(), t.delta, {}};
    c.validate();
    return c;
}

Mat BasedComplex::c(int i) const
{
    if (cbasis.empty()) return Mat::identity(field, dims[i]);
    return cbasis[i];
}

void BasedComplex::validate() const
{
    if (dims.empty()) throw ValidationError("complex without degrees");
    if (delta.size() + 1 != dims.size()) throw ValidationError("need one coboundary between consecutive degrees");
    for (size_t i = 0; i < delta.size(); ++i) {
        if (delta[i].rows() != dims[i + 1] || delta[i].cols() != dims[i])
            throw ValidationError("coboundary " + std::to_string(i) + " has the wrong shape");
        if (i + 1 < delta.size() && !(delta[i + 1] * delta[i]).is_zero())
            throw ValidationError("coboundaries " + std::to_string(i) + ", " + std::to_string(i + 1) +
                                  " do not compose to zero");
    }
    if (!cbasis.empty()) {
        if (cbasis.size() != dims.size()) throw ValidationError("one cochain basis per degree required");
        for (size_t i = 0; i < dims.size(); ++i)
            if (cbasis[i].rows() != dims[i] || cbasis[i].cols() != dims[i] || det(cbasis[i]).is_zero())
                throw ValidationError("cochain basis in degree " + std::to_string(i) + " is not a basis");
    }
}

BasedComplex BasedComplex::permuted(const std::vector<std::vector<int>>& perm) const
{
    auto pmat = [&](int i) {
        Mat P(field, dims[i], dims[i]);  // new coords = P * old coords
        for (int k = 0; k < dims[i]; ++k) P(k, perm[i][k]) = Scalar::from_int(field, 1);
        return P;
    };
    BasedComplex out = *this;
    for (size_t i = 0; i < delta.size(); ++i) out.delta[i] = pmat(i + 1) * delta[i] * pmat(i).transpose();
    if (!cbasis.empty())
        for (size_t i = 0; i < dims.size(); ++i) out.cbasis[i] = pmat(i) * cbasis[i];
    return out;
}

ImageChoice deterministic_image_choice(const BasedComplex& c)
{
    int k = c.top();
    ImageChoice ch;
    ch.b.push_back(Mat(c.field, c.dims[0], 0));
    for (int i = 0; i < k; ++i) {
        auto cols = independent_columns(c.delta[i]);
        Mat lift = Mat::identity(c.field, c.dims[i]).select_columns(cols);
        ch.lifts.push_back(lift);
        ch.b.push_back(c.delta[i] * lift);
    }
    ch.lifts.push_back(Mat(c.field, c.dims[k], 0));
    return ch;
}

std::vector<int> cohomology_dims(const BasedComplex& c)
{
    std::vector<int> r(c.dims.size(), 0);
    for (int i = 0; i <= c.top(); ++i) {
        int z = c.dims[i] - (i < c.top() ? rank(c.delta[i]) : 0);
        int b = i > 0 ? rank(c.delta[i - 1]) : 0;
        r[i] = z - b;
    }
    return r;
}

CohomologyData cohomology_bases(const BasedComplex& c)
{
    c.validate();
    ImageChoice ch = deterministic_image_choice(c);
    CohomologyData d;
    d.b = ch.b;
    d.lifts = ch.lifts;
    for (int i = 0; i <= c.top(); ++i) {
        // cocycles in the distinguished basis coordinates, then back to standard coordinates
        Mat Z = i < c.top() ? c.c(i) * nullspace(c.delta[i] * c.c(i)) : c.c(i);
        const Mat& B = d.b[i];
        Mat both = hstack({B, Z}, c.field, c.dims[i]);
        std::vector<int> piv = independent_columns(both);
        std::vector<int> pick;
        for (int p : piv)
            if (p >= B.cols()) pick.push_back(p);
        d.h.push_back(both.select_columns(pick));
        d.dims.push_back(static_cast<int>(pick.size()));
    }
    return d;
}

namespace {

void check_h(const BasedComplex& c, const std::vector<Mat>& h, const std::vector<int>& dimsH)
{
    if (h.size() != c.dims.size()) throw ValidationError("need one cohomology basis per degree");
    for (int i = 0; i <= c.top(); ++i) {
        if (h[i].rows() != c.dims[i])
            throw ValidationError("cohomology basis in degree " + std::to_string(i) + " has the wrong length");
        if (h[i].cols() != dimsH[i])
            throw PreconditionError("degree " + std::to_string(i) + " needs " + std::to_string(dimsH[i]) +
                                    " cohomology classes, got " + std::to_string(h[i].cols()));
        if (i < c.top() && !(c.delta[i] * h[i]).is_zero())
            throw PreconditionError("cohomology basis in degree " + std::to_string(i) + " is not made of cocycles");
    }
}

}  // namespace

Scalar torsion(const BasedComplex& c, const std::vector<Mat>& h, const ImageChoice& ch)
{
    c.validate();
    check_h(c, h, cohomology_dims(c));
    Scalar tau = Scalar::from_int(c.field, 1);
    for (int i = 0; i <= c.top(); ++i) {
        Mat M = hstack({ch.b[i], h[i], ch.lifts[i]}, c.field, c.dims[i]);
        if (!M.is_square()) throw PreconditionError("image bases and lifts do not fill degree " + std::to_string(i));
        if (i < c.top() && i + 1 < static_cast<int>(ch.b.size()) && c.delta[i] * ch.lifts[i] != ch.b[i + 1])
            throw ValidationError("lifts do not map onto the image basis in degree " + std::to_string(i));
        Scalar d = det(M) / det(c.c(i));
        if (d.is_zero()) throw PreconditionError("cohomology classes in degree " + std::to_string(i) + " are not a basis");
        tau = (i % 2 == 1) ? tau * d : tau / d;
    }
    return tau;
}

Scalar torsion(const BasedComplex& c, const std::vector<Mat>& h) { return torsion(c, h, deterministic_image_choice(c)); }

Scalar chain_torsion(const BasedComplex& c)
{
    c.validate();
    for (int d : cohomology_dims(c))
        if (d != 0) throw PreconditionError("chain torsion needs an acyclic complex");
    int m = c.top();
    // boundary bd[i] : C_{i+1} -> C_i in the distinguished bases
    std::vector<Mat> bd;
    for (int i = 0; i < m; ++i) bd.push_back((inverse(c.c(i + 1)) * c.delta[i] * c.c(i)).transpose());
    std::vector<Mat> pick{Mat(c.field, c.dims[0], 0)};
    for (int i = 1; i <= m; ++i)
        pick.push_back(Mat::identity(c.field, c.dims[i]).select_columns(independent_columns(bd[i - 1])));
    Scalar tau = Scalar::from_int(c.field, 1);
    for (int i = 0; i <= m; ++i) {
        std::vector<Mat> parts;
        if (i < m) parts.push_back(bd[i] * pick[i + 1]);
        parts.push_back(pick[i]);
        Scalar d = det(hstack(parts, c.field, c.dims[i]));
        tau = (i % 2 == 1) ? tau * d : tau / d;
    }
    return tau;
}

long sign_exponent(const std::vector<int>& dimH, const std::vector<int>& dimC)
{
    int top = static_cast<int>(dimC.size()) - 1;
    long N = 0;
    for (int i = 0; i <= top; ++i) {
        long sh = 0, sc = 0;
        for (int j = 0; j <= i; ++j) {
            sh += dimH[top - j];
            sc += dimC[top - j];
        }
        N += sh * sc;
    }
    return N;
}

Scalar refined_sign_torsion(const BasedComplex& c, const std::vector<Mat>& h, const BasedComplex& real,
                            const std::vector<Mat>& hR, int n)
{
    Scalar tau = torsion(c, h);
    if (n % 2 == 0) return tau;
    if (!real.field->characteristic_zero() || real.field->kind() == FieldKind::RationalFunctions)
        throw ValidationError("the real complex must be defined over Q");
    Scalar tr = torsion(real, hR);
    mpq_class v = tr.to_rational();
    long N = sign_exponent(cohomology_dims(real), real.dims);
    int s = (v > 0 ? 1 : -1) * (N % 2 ? -1 : 1);
    return s > 0 ? tau : -tau;
}

DetLineElement DetLineElement::rebased(const std::vector<Mat>& nb) const
{
    if (nb.size() != basis.size()) throw ValidationError("determinant line degree mismatch");
    Scalar c = coeff;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].cols() != nb[i].cols()) throw ValidationError("determinant line dimension mismatch");
        if (basis[i].cols() == 0) continue;
        // basis = nb * T
        Mat T = solve(nb[i], basis[i]);
        if (nb[i] * T != basis[i]) throw PreconditionError("new basis does not span the same space");
        Scalar d = det(T);
        c = (i % 2 == 0) ? c * d : c / d;
    }
    return DetLineElement{nb, c};
}

Mat embed_direct_sum(const Mat& h, int n, int which)
{
    if (n <= 0 || h.rows() % n) throw ValidationError("direct-sum embedding: bad block size");
    int cells = h.rows() / n;
    Mat out(h.field(), 2 * n * cells, h.cols());
    for (int cell = 0; cell < cells; ++cell)
        for (int a = 0; a < n; ++a)
            for (int j = 0; j < h.cols(); ++j) out(cell * 2 * n + which * n + a, j) = h(cell * n + a, j);
    return out;
}

Scalar pr_full(const DetLineElement& alpha, const DetLineElement& beta, const BasedComplex& sum_complex, int n)
{
    if (alpha.basis.size() != beta.basis.size() || alpha.basis.size() != sum_complex.dims.size())
        throw ValidationError("PR product: degree mismatch");
    std::vector<Mat> h;
    for (size_t i = 0; i < alpha.basis.size(); ++i) {
        if (alpha.basis[i].cols() != beta.basis[i].cols()) throw ValidationError("PR product: dimension mismatch");
        h.push_back(hstack({embed_direct_sum(alpha.basis[i], n, 0), embed_direct_sum(beta.basis[i].conj(), n, 1)},
                           sum_complex.field, sum_complex.dims[i]));
    }
    // rho + conj(rho) has even rank, so the refinement sign is +1
    Scalar tau = torsion(sum_complex, h);
    return alpha.coeff * beta.coeff.conj() / tau;
}

Scalar pr_half(const Scalar& a, const std::vector<Mat>& g, const Scalar& b, const std::vector<Mat>& dual_of_gp,
               const BasedComplex& c, const BasedComplex& real, const std::vector<Mat>& hR, int n)
{
    std::vector<Mat> h = g;
    h.insert(h.end(), dual_of_gp.begin(), dual_of_gp.end());
    if (h.size() != c.dims.size()) throw ValidationError("half PR product: degree mismatch");
    return a * b.conj() / refined_sign_torsion(c, h, real, hR, n);
}

}  // namespace ntor
