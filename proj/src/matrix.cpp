#include "ecq/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace ecq {

namespace {
// Below this, the OpenMP fork costs more than the loop.
constexpr int kParallelDim = 64;
}  // namespace

Matrix& Matrix::operator+=(const Matrix& o) {
    if (!same_shape(o)) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (auto& v : a_) v *= s;
    return *this;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul shape mismatch");
    const int n = a.rows(), m = b.cols(), k = a.cols();
    Matrix c(n, m);
#pragma omp parallel for schedule(static) if (n >= kParallelDim)
    for (int i = 0; i < n; ++i) {
        double* ci = c.row(i);
        const double* ai = a.row(i);
        for (int t = 0; t < k; ++t) {
            const double av = ai[t];
            if (av == 0.0) continue;
            const double* bt = b.row(t);
            for (int j = 0; j < m; ++j) ci[j] += av * bt[j];
        }
    }
    return c;
}

namespace reference {
Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul shape mismatch");
    const int n = a.rows(), m = b.cols(), k = a.cols();
    Matrix c(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            double s = 0.0;
            for (int t = 0; t < k; ++t) s += a(i, t) * b(t, j);
            c(i, j) = s;
        }
    return c;
}
}  // namespace reference

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x) {
    if (static_cast<std::size_t>(a.cols()) != x.size())
        throw std::invalid_argument("matvec shape mismatch");
    std::vector<double> y(static_cast<std::size_t>(a.rows()), 0.0);
    for (int i = 0; i < a.rows(); ++i) {
        const double* ai = a.row(i);
        double s = 0.0;
        for (int j = 0; j < a.cols(); ++j) s += ai[j] * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
    return y;
}

Matrix outer(const std::vector<double>& u, const std::vector<double>& v) {
    Matrix m(static_cast<int>(u.size()), static_cast<int>(v.size()));
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = u[i] * v[j];
    return m;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

double norm1(const Matrix& a) {
    double best = 0.0;
    for (int j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (int i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
        if (s > best) best = s;
    }
    return best;
}

double max_abs(const Matrix& a) {
    double best = 0.0;
    for (double v : a.data()) best = std::max(best, std::abs(v));
    return best;
}

bool is_symmetric(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j)
            if (std::abs(a(i, j) - a(j, i)) > tol) return false;
    return true;
}

double norm2(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Matrix matrix_exponential(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix_exponential: square matrix required");
    const int n = m.rows();

    int squarings = 0;
    double scale = norm1(m);
    while (scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }

    Matrix b = m;
    b *= std::ldexp(1.0, -squarings);

    Matrix sum = Matrix::identity(n);
    Matrix term = Matrix::identity(n);
    // ||b||_1 <= 0.5 makes the terms shrink at least geometrically.
    for (int k = 1; k <= 100; ++k) {
        term = matmul(term, b);
        term *= 1.0 / k;
        sum += term;
        if (norm1(term) < tol) break;
    }

    for (int s = 0; s < squarings; ++s) sum = matmul(sum, sum);
    return sum;
}

}  // namespace ecq
