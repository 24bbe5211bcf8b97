#pragma once

#include "ntor/scalars.hpp"

#include <Eigen/Dense>

#include <vector>

namespace ntor {

// Dense matrix over one of the exact fields; row-major.
class Mat {
public:
    Mat() = default;
    Mat(FieldPtr f, int rows, int cols);
    static Mat identity(const FieldPtr& f, int n);
    static Mat from_rows(const FieldPtr& f, const std::vector<std::vector<Scalar>>& rows);
    static Mat column(const std::vector<Scalar>& v);  // v nonempty

    const FieldPtr& field() const { return f_; }
    int rows() const { return r_; }
    int cols() const { return c_; }
    Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Scalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Scalar& s) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const;
    Mat conj() const;
    Mat adjoint() const { return conj().transpose(); }
    Mat block(int r0, int c0, int nr, int nc) const;
    void set_block(int r0, int c0, const Mat& b);
    Mat col(int j) const;
    Mat select_columns(const std::vector<int>& idx) const;
    Mat select_rows(const std::vector<int>& idx) const;
    bool is_zero() const;
    bool is_square() const { return r_ == c_; }

    std::vector<std::vector<std::string>> str_rows() const;
    std::string str() const;

private:
    FieldPtr f_;
    int r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

Mat hstack(const std::vector<Mat>& parts, const FieldPtr& f, int rows);
Mat vstack(const std::vector<Mat>& parts, const FieldPtr& f, int cols);
Mat block_diag(const std::vector<Mat>& parts, const FieldPtr& f);

struct Rref {
    Mat R;
    std::vector<int> pivots;
};
// Reduced row echelon form; the pivot in each column is the first nonzero entry below.
Rref rref(const Mat& m);
int rank(const Mat& m);
Scalar det(const Mat& m);
Mat inverse(const Mat& m);  // PreconditionError when singular
// Basis of the right kernel, one column per free variable (free variable set to 1).
Mat nullspace(const Mat& m);
// Some X with A X = B; PreconditionError if inconsistent.
Mat solve(const Mat& a, const Mat& b);
// Greedy leftmost maximal set of linearly independent columns.
std::vector<int> independent_columns(const Mat& m);

using CMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;
CMat to_numeric(const Mat& m);

}  // namespace ntor
