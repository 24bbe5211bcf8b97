#include "ntor/cellular.hpp"

namespace ntor {

Representation::Representation(const Presentation& p, FieldPtr f, std::vector<Mat> images, bool unimodular)
    : f_(std::move(f)), unimodular_(unimodular), img_(std::move(images))
{
    if (static_cast<int>(img_.size()) != p.g())
        throw ValidationError("representation needs one image per generator (" + std::to_string(p.g()) + ")");
    n_ = img_.empty() ? 0 : img_[0].rows();
    for (size_t i = 0; i < img_.size(); ++i) {
        const Mat& m = img_[i];
        if (m.rows() != n_ || m.cols() != n_)
            throw ValidationError("image of " + p.generators[i] + " is not " + std::to_string(n_) + "x" +
                                  std::to_string(n_));
        if (!same_field(m.field(), f_)) throw ValidationError("image of " + p.generators[i] + " over the wrong field");
        Scalar d = det(m);
        if (d.is_zero()) throw ValidationError("image of " + p.generators[i] + " is not invertible");
        if (unimodular_ && !d.is_one())
            throw ValidationError("image of " + p.generators[i] + " has determinant " + d.str() + ", expected 1");
        inv_.push_back(inverse(m));
    }
    for (size_t j = 0; j < p.relators.size(); ++j)
        if (word(p.relators[j]) != Mat::identity(f_, n_))
            throw ValidationError("relator " + std::to_string(j) + " (" + p.relators[j].str(p.generators) +
                                  ") does not map to the identity");
}

Representation Representation::trivial(const Presentation& p, const FieldPtr& f, int n)
{
    return Representation(p, f, std::vector<Mat>(p.g(), Mat::identity(f, n)), true);
}

Mat Representation::word(const Word& w) const
{
    Mat m = Mat::identity(f_, n_);
    for (const Letter& l : w.letters()) {
        if (l.gen >= generators()) throw ValidationError("word uses a generator without an image");
        m = m * (l.exp > 0 ? img_[l.gen] : inv_[l.gen]);
    }
    return m;
}

Representation Representation::conjugated(const Presentation& p, const Mat& P) const
{
    Mat Pi = inverse(P);
    std::vector<Mat> im;
    for (const auto& m : img_) im.push_back(P * m * Pi);
    return Representation(p, f_, im, unimodular_);
}

Representation Representation::conj(const Presentation& p) const
{
    std::vector<Mat> im;
    for (const auto& m : img_) im.push_back(m.conj());
    return Representation(p, f_, im, unimodular_);
}

Representation Representation::direct_sum(const Presentation& p, const Representation& o) const
{
    std::vector<Mat> im;
    for (size_t i = 0; i < img_.size(); ++i) im.push_back(block_diag({img_[i], o.img_.at(i)}, f_));
    return Representation(p, f_, im, unimodular_ && o.unimodular_);
}

bool Representation::is_unitary() const
{
    for (const auto& m : img_)
        if (m.adjoint() * m != Mat::identity(f_, n_)) return false;
    return true;
}

Mat evaluate(const GroupRingElement& e, const Representation& rho)
{
    Mat out(rho.field(), rho.dim(), rho.dim());
    for (const auto& [w, c] : e.terms()) out = out + rho.word(w).scaled(Scalar::from_int(rho.field(), static_cast<long>(c)));
    return out;
}

BoundaryData boundary_matrices(const Presentation& p, const IdentityWord& W)
{
    if (!verify_identity(p, W)) throw ValidationError("identity does not reduce to the trivial word");
    int g = p.g();
    BoundaryData b;
    for (int i = 0; i < g; ++i) b.d1.push_back(GroupRingElement::of(Word()) - GroupRingElement::of(Word::gen(i)));
    for (const auto& r : p.relators) {
        std::vector<GroupRingElement> row;
        for (int i = 0; i < g; ++i) row.push_back(fox_derivative(r, i));
        b.d2.push_back(row);
    }
    b.d3.assign(p.relators.size(), GroupRingElement());
    Word pre;
    for (const auto& f : W.factors) {
        const Word& rel = p.relators[f.j];
        if (f.eps > 0) b.d3[f.j].add(pre * f.w, 1);
        else b.d3[f.j].add(pre * f.w * rel.inverse(), -1);
        pre = pre * f.w * (f.eps > 0 ? rel : rel.inverse()) * f.w.inverse();
    }
    return b;
}

std::vector<std::string> TwistedCochainComplex::labels(int degree, const Presentation& p) const
{
    std::vector<std::string> out;
    auto coord = [&](const std::string& cell) {
        for (int k = 0; k < n; ++k) out.push_back(cell + "[" + std::to_string(k) + "]");
    };
    if (degree == 0) coord("pt");
    else if (degree == 1) for (const auto& gname : p.generators) coord(gname);
    else if (degree == 2) for (int j = 0; j < g; ++j) coord("r" + std::to_string(j));
    else if (degree == 3) coord("top");
    return out;
}

TwistedCochainComplex twisted_cochain_complex(const Presentation& p, const IdentityWord& W, const Representation& rho)
{
    p.validate(true);
    if (rho.generators() != p.g()) throw ValidationError("representation does not match the presentation");
    BoundaryData b = boundary_matrices(p, W);
    const FieldPtr& f = rho.field();
    int g = p.g(), n = rho.dim();
    TwistedCochainComplex c{f, g, n, {}};
    Mat d0(f, g * n, n), d1(f, g * n, g * n), d2(f, n, g * n);
    for (int i = 0; i < g; ++i) d0.set_block(i * n, 0, evaluate(b.d1[i], rho));
    for (int j = 0; j < g; ++j)
        for (int i = 0; i < g; ++i) d1.set_block(j * n, i * n, evaluate(b.d2[j][i], rho));
    for (int j = 0; j < g; ++j) d2.set_block(0, j * n, evaluate(b.d3[j], rho));
    if (!(d1 * d0).is_zero() || !(d2 * d1).is_zero())
        throw ValidationError("coboundaries do not compose to zero; check the identity and relators");
    c.delta = {d0, d1, d2};
    return c;
}

// ---------------------------------------------------------------- integer side

ZMat ZMat::identity(int n)
{
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ZMat ZMat::operator*(const ZMat& o) const
{
    if (c != o.r) throw ValidationError("integer matrix size mismatch");
    ZMat m(r, o.c);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < c; ++k) {
            if ((*this)(i, k) == 0) continue;
            for (int j = 0; j < o.c; ++j) m(i, j) += (*this)(i, k) * o(k, j);
        }
    return m;
}

bool ZMat::is_zero() const
{
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

std::vector<int> IntegralComplex::dims() const
{
    std::vector<int> d;
    if (delta.empty()) return d;
    d.push_back(delta[0].c);
    for (const auto& m : delta) d.push_back(m.r);
    return d;
}

void IntegralComplex::validate() const
{
    for (size_t i = 0; i + 1 < delta.size(); ++i) {
        if (delta[i + 1].c != delta[i].r) throw ValidationError("integral complex dimensions do not chain");
        if (!(delta[i + 1] * delta[i]).is_zero()) throw ValidationError("integral coboundaries do not compose to zero");
    }
}

IntegralComplex integral_complex(const Presentation& p, const IdentityWord& W)
{
    p.validate(true);
    BoundaryData b = boundary_matrices(p, W);
    int g = p.g();
    ZMat d0(g, 1), d1(g, g), d2(1, g);
    for (int j = 0; j < g; ++j)
        for (int i = 0; i < g; ++i) d1(j, i) = static_cast<long>(b.d2[j][i].augmentation());
    for (int j = 0; j < g; ++j) d2(0, j) = static_cast<long>(b.d3[j].augmentation());
    IntegralComplex c{{d0, d1, d2}};
    c.validate();
    return c;
}

namespace {

void swap_rows(ZMat& m, int a, int b)
{
    if (a == b) return;
    for (int j = 0; j < m.c; ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(ZMat& m, int a, int b)
{
    if (a == b) return;
    for (int i = 0; i < m.r; ++i) std::swap(m(i, a), m(i, b));
}

// row_a -= q * row_b
void add_row(ZMat& m, int a, int b, const mpz_class& q)
{
    for (int j = 0; j < m.c; ++j) m(a, j) -= q * m(b, j);
}

void add_col(ZMat& m, int a, int b, const mpz_class& q)
{
    for (int i = 0; i < m.r; ++i) m(i, a) -= q * m(i, b);
}

}  // namespace

SmithForm smith_normal_form(const ZMat& A)
{
    SmithForm s{A, ZMat::identity(A.r), ZMat::identity(A.c), {}};
    ZMat& D = s.D;
    int t = 0;
    while (t < D.r && t < D.c) {
        // smallest nonzero entry of the trailing block becomes the pivot
        int pi = -1, pj = -1;
        for (int i = t; i < D.r; ++i)
            for (int j = t; j < D.c; ++j)
                if (D(i, j) != 0 && (pi < 0 || abs(D(i, j)) < abs(D(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        swap_rows(D, t, pi);
        swap_rows(s.U, t, pi);
        swap_cols(D, t, pj);
        swap_cols(s.V, t, pj);
        for (;;) {
            bool dirty = false;
            for (int i = t + 1; i < D.r; ++i) {
                if (D(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                add_row(D, i, t, q);
                add_row(s.U, i, t, q);
                if (D(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < D.c; ++j) {
                if (D(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                add_col(D, j, t, q);
                add_col(s.V, j, t, q);
                if (D(t, j) != 0) dirty = true;
            }
            if (dirty) {
                int bi = t, bj = t;
                for (int i = t + 1; i < D.r; ++i)
                    if (D(i, t) != 0 && abs(D(i, t)) < abs(D(bi, bj))) {
                        bi = i;
                        bj = t;
                    }
                for (int j = t + 1; j < D.c; ++j)
                    if (D(t, j) != 0 && abs(D(t, j)) < abs(D(bi, bj))) {
                        bi = t;
                        bj = j;
                    }
                swap_rows(D, t, bi);
                swap_rows(s.U, t, bi);
                swap_cols(D, t, bj);
                swap_cols(s.V, t, bj);
                continue;
            }
            // divisibility of the trailing block
            int bad = -1;
            for (int i = t + 1; i < D.r && bad < 0; ++i)
                for (int j = t + 1; j < D.c; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            add_row(D, t, bad, -1);
            add_row(s.U, t, bad, -1);
        }
        if (D(t, t) < 0) {
            for (int j = 0; j < D.c; ++j) D(t, j) = -D(t, j);
            for (int j = 0; j < s.U.c; ++j) s.U(t, j) = -s.U(t, j);
        }
        s.divisors.push_back(D(t, t));
        ++t;
    }
    return s;
}

IntegralTorsion smith_and_integral_torsion(const IntegralComplex& c)
{
    c.validate();
    IntegralTorsion out;
    for (const auto& m : c.delta) out.divisors.push_back(smith_normal_form(m).divisors);
    out.h1_order = 1;
    if (c.delta.size() > 1)
        for (const auto& d : out.divisors[1]) out.h1_order *= d;
    out.magnitude = mpq_class(1) / mpq_class(out.h1_order);
    return out;
}

}  // namespace ntor
