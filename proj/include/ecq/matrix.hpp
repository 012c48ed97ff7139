#pragma once

#include <cstddef>
#include <vector>

namespace ecq {

/// Dense row-major real matrix. Everything in this project is small and
/// dense (adjacency matrices, QUBO coefficient matrices), so no sparse path.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[idx(i, j)]; }
    double operator()(int i, int j) const { return a_[idx(i, j)]; }

    const double* row(int i) const { return a_.data() + idx(i, 0); }
    double* row(int i) { return a_.data() + idx(i, 0); }

    const std::vector<double>& data() const { return a_; }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator*=(double s);

  private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
std::vector<double> matvec(const Matrix& a, const std::vector<double>& x);
Matrix outer(const std::vector<double>& u, const std::vector<double>& v);
Matrix transpose(const Matrix& a);

/// Maximum absolute column sum.
double norm1(const Matrix& a);
double max_abs(const Matrix& a);
bool is_symmetric(const Matrix& a, double tol);

double norm2(const std::vector<double>& x);
double dot(const std::vector<double>& a, const std::vector<double>& b);

/// exp(m) by scaling-and-squaring: scale by 2^-k so that norm1(m)/2^k <= 0.5,
/// sum the Taylor series until the term's 1-norm drops below tol, then square
/// k times.
Matrix matrix_exponential(const Matrix& m, double tol = 1e-12);

namespace reference {
/// Plain triple-loop product kept as the serial oracle for the OpenMP kernel.
Matrix matmul(const Matrix& a, const Matrix& b);
}  // namespace reference

}  // namespace ecq
