#include "ntor/linalg.hpp"

#include <sstream>

namespace ntor {

Mat::Mat(FieldPtr f, int rows, int cols) : f_(std::move(f)), r_(rows), c_(cols)
{
    if (rows < 0 || cols < 0) throw ValidationError("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, Scalar(f_));
}

Mat Mat::identity(const FieldPtr& f, int n)
{
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar::from_int(f, 1);
    return m;
}

Mat Mat::from_rows(const FieldPtr& f, const std::vector<std::vector<Scalar>>& rows)
{
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Mat m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw ValidationError("ragged matrix rows");
        for (int j = 0; j < c; ++j) {
            if (!same_field(rows[i][j].field(), f)) throw ValidationError("matrix entry over the wrong field");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Mat Mat::column(const std::vector<Scalar>& v)
{
    Mat m(v.at(0).field(), static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
    return m;
}

Mat Mat::operator+(const Mat& o) const
{
    if (r_ != o.r_ || c_ != o.c_) throw ValidationError("matrix size mismatch in addition");
    Mat m(*this);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] += o.a_[k];
    return m;
}

Mat Mat::operator-(const Mat& o) const
{
    if (r_ != o.r_ || c_ != o.c_) throw ValidationError("matrix size mismatch in subtraction");
    Mat m(*this);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] -= o.a_[k];
    return m;
}

Mat Mat::operator-() const
{
    Mat m(*this);
    for (auto& x : m.a_) x = -x;
    return m;
}

Mat Mat::operator*(const Mat& o) const
{
    if (c_ != o.r_) throw ValidationError("matrix size mismatch in product");
    Mat m(f_ ? f_ : o.f_, r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Scalar& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                const Scalar& y = o(k, j);
                if (!y.is_zero()) m(i, j) += x * y;
            }
        }
    return m;
}

Mat Mat::scaled(const Scalar& s) const
{
    Mat m(*this);
    for (auto& x : m.a_) x = x * s;
    return m;
}

bool Mat::operator==(const Mat& o) const
{
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (size_t k = 0; k < a_.size(); ++k)
        if (a_[k] != o.a_[k]) return false;
    return true;
}

Mat Mat::transpose() const
{
    Mat m(f_, c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Mat Mat::conj() const
{
    Mat m(*this);
    for (auto& x : m.a_) x = x.conj();
    return m;
}

Mat Mat::block(int r0, int c0, int nr, int nc) const
{
    if (r0 < 0 || c0 < 0 || r0 + nr > r_ || c0 + nc > c_) throw ValidationError("block out of range");
    Mat m(f_, nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void Mat::set_block(int r0, int c0, const Mat& b)
{
    if (r0 < 0 || c0 < 0 || r0 + b.r_ > r_ || c0 + b.c_ > c_) throw ValidationError("block out of range");
    for (int i = 0; i < b.r_; ++i)
        for (int j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat Mat::col(int j) const { return block(0, j, r_, 1); }

Mat Mat::select_columns(const std::vector<int>& idx) const
{
    Mat m(f_, r_, static_cast<int>(idx.size()));
    for (int i = 0; i < r_; ++i)
        for (size_t k = 0; k < idx.size(); ++k) m(i, static_cast<int>(k)) = (*this)(i, idx[k]);
    return m;
}

Mat Mat::select_rows(const std::vector<int>& idx) const
{
    Mat m(f_, static_cast<int>(idx.size()), c_);
    for (size_t k = 0; k < idx.size(); ++k)
        for (int j = 0; j < c_; ++j) m(static_cast<int>(k), j) = (*this)(idx[k], j);
    return m;
}

bool Mat::is_zero() const
{
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<std::vector<std::string>> Mat::str_rows() const
{
    std::vector<std::vector<std::string>> out(r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out[i].push_back((*this)(i, j).str());
    return out;
}

std::string Mat::str() const
{
    std::ostringstream os;
    for (int i = 0; i < r_; ++i) {
        os << "[";
        for (int j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
        os << "]\n";
    }
    return os.str();
}

Mat hstack(const std::vector<Mat>& parts, const FieldPtr& f, int rows)
{
    int c = 0;
    for (const auto& p : parts) {
        if (p.rows() != rows) throw ValidationError("hstack row mismatch");
        c += p.cols();
    }
    Mat m(f, rows, c);
    int at = 0;
    for (const auto& p : parts) {
        m.set_block(0, at, p);
        at += p.cols();
    }
    return m;
}

Mat vstack(const std::vector<Mat>& parts, const FieldPtr& f, int cols)
{
    int r = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols) throw ValidationError("vstack column mismatch");
        r += p.rows();
    }
    Mat m(f, r, cols);
    int at = 0;
    for (const auto& p : parts) {
        m.set_block(at, 0, p);
        at += p.rows();
    }
    return m;
}

Mat block_diag(const std::vector<Mat>& parts, const FieldPtr& f)
{
    int r = 0, c = 0;
    for (const auto& p : parts) {
        r += p.rows();
        c += p.cols();
    }
    Mat m(f, r, c);
    int ar = 0, ac = 0;
    for (const auto& p : parts) {
        m.set_block(ar, ac, p);
        ar += p.rows();
        ac += p.cols();
    }
    return m;
}

Rref rref(const Mat& m)
{
    Rref out{m, {}};
    Mat& a = out.R;
    int row = 0;
    for (int c = 0; c < a.cols() && row < a.rows(); ++c) {
        int piv = -1;
        for (int i = row; i < a.rows(); ++i)
            if (!a(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
        Scalar inv = a(row, c).inv();
        for (int j = c; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, c).is_zero()) continue;
            Scalar fct = a(i, c);
            for (int j = c; j < a.cols(); ++j)
                if (!a(row, j).is_zero()) a(i, j) -= fct * a(row, j);
        }
        out.pivots.push_back(c);
        ++row;
    }
    return out;
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

Scalar det(const Mat& m)
{
    if (!m.is_square()) throw ValidationError("determinant of a non-square matrix");
    Scalar d = Scalar::from_int(m.field(), 1);
    Mat a = m;
    int n = a.rows();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!a(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return Scalar(m.field());
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
            d = -d;
        }
        d = d * a(c, c);
        Scalar inv = a(c, c).inv();
        for (int i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            Scalar fct = a(i, c) * inv;
            for (int j = c; j < n; ++j)
                if (!a(c, j).is_zero()) a(i, j) -= fct * a(c, j);
        }
    }
    return d;
}

Mat inverse(const Mat& m)
{
    if (!m.is_square()) throw ValidationError("inverse of a non-square matrix");
    int n = m.rows();
    Rref r = rref(hstack({m, Mat::identity(m.field(), n)}, m.field(), n));
    if (static_cast<int>(r.pivots.size()) < n || (n > 0 && r.pivots[n - 1] >= n))
        throw PreconditionError("singular matrix");
    return r.R.block(0, n, n, n);
}

Mat nullspace(const Mat& m)
{
    Rref r = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (int p : r.pivots) is_piv[p] = true;
    std::vector<int> free;
    for (int j = 0; j < m.cols(); ++j)
        if (!is_piv[j]) free.push_back(j);
    Mat k(m.field(), m.cols(), static_cast<int>(free.size()));
    for (size_t t = 0; t < free.size(); ++t) {
        int fc = free[t];
        k(fc, static_cast<int>(t)) = Scalar::from_int(m.field(), 1);
        for (size_t i = 0; i < r.pivots.size(); ++i)
            k(r.pivots[i], static_cast<int>(t)) = -r.R(static_cast<int>(i), fc);
    }
    return k;
}

Mat solve(const Mat& a, const Mat& b)
{
    if (a.rows() != b.rows()) throw ValidationError("solve: row mismatch");
    int n = a.cols();
    Rref r = rref(hstack({a, b}, a.field(), a.rows()));
    Mat x(a.field(), n, b.cols());
    for (size_t i = 0; i < r.pivots.size(); ++i) {
        int p = r.pivots[i];
        if (p >= n) throw PreconditionError("inconsistent linear system");
        for (int j = 0; j < b.cols(); ++j) x(p, j) = r.R(static_cast<int>(i), n + j);
    }
    return x;
}

std::vector<int> independent_columns(const Mat& m) { return rref(m).pivots; }

CMat to_numeric(const Mat& m)
{
    CMat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
    return out;
}

}  // namespace ntor
