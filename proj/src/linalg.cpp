#include "qwalk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

// Off-diagonal Frobenius norm target for the Jacobi sweep and the hard sweep
// cap. Exhausting the cap is an error rather than a silent return.
constexpr double kJacobiOffTol = 1e-14;
constexpr int kJacobiMaxSweeps = 100;
constexpr int kMaxEigenDim = 8;

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  require(rows > 0 && cols > 0, "matrix dimensions must be positive");
}

Matrix::Matrix(int rows, int cols, std::initializer_list<cplx> entries)
    : Matrix(rows, cols) {
  require(entries.size() == data_.size(), "entry count does not match shape");
  std::size_t k = 0;
  for (const cplx& e : entries) data_[k++] = e;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

cplx Matrix::trace() const {
  require(rows_ == cols_, "trace requires a square matrix");
  cplx t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, "matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const cplx aik = a(i, k);
      for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum shape mismatch");
  Matrix out(a.rows_, a.cols_);
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference shape mismatch");
  Matrix out(a.rows_, a.cols_);
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
  return out;
}

Matrix operator*(const cplx& s, const Matrix& m) {
  Matrix out = m;
  for (auto& e : out.data_) e *= s;
  return out;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs_diff(m.adjoint() * m, Matrix::identity(m.rows())) < tol;
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs_diff(m, m.adjoint()) < tol;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "shape mismatch");
  double worst = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

const Matrix& pauli_x() {
  static const Matrix m(2, 2, {0.0, 1.0, 1.0, 0.0});
  return m;
}

const Matrix& pauli_z() {
  static const Matrix m(2, 2, {1.0, 0.0, 0.0, -1.0});
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja)
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb)
          out(ia * b.rows() + ib, ja * b.cols() + jb) = a(ia, ja) * b(ib, jb);
  return out;
}

Matrix projector(const std::vector<cplx>& v) {
  const int n = static_cast<int>(v.size());
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out(i, j) = v[static_cast<std::size_t>(i)] * std::conj(v[static_cast<std::size_t>(j)]);
  return out;
}

std::vector<cplx> apply(const Matrix& m, const std::vector<cplx>& v) {
  require(m.cols() == static_cast<int>(v.size()), "matrix-vector shape mismatch");
  std::vector<cplx> out(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    cplx s = 0.0;
    for (int j = 0; j < m.cols(); ++j) s += m(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

cplx inner(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  require(x.size() == y.size(), "inner product shape mismatch");
  cplx s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) s += std::conj(x[k]) * y[k];
  return s;
}

double norm(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& e : v) s += std::norm(e);
  return std::sqrt(s);
}

bool is_normalized(const std::vector<cplx>& v, double tol) {
  double s = 0.0;
  for (const cplx& e : v) s += std::norm(e);
  return std::abs(s - 1.0) < tol;
}

Matrix partial_trace(const Matrix& rho, const std::vector<int>& dims, int keep) {
  require(rho.rows() == rho.cols(), "partial_trace requires a square matrix");
  require(!dims.empty(), "partial_trace requires subsystem dimensions");
  require(keep >= 0 && keep < static_cast<int>(dims.size()),
          "partial_trace: kept subsystem out of range");
  int total = 1;
  for (int d : dims) {
    require(d >= 1, "partial_trace: subsystem dimensions must be positive");
    total *= d;
  }
  require(total == rho.rows(), "partial_trace: dimension product mismatch");
  require(is_hermitian(rho), "partial_trace requires a Hermitian matrix");

  const int dk = dims[static_cast<std::size_t>(keep)];
  const int rest = total / dk;

  // full index for kept value k and row-major rest index r over the other factors
  auto compose = [&](int k, int r) {
    int idx = 0;
    int remaining = r;
    // compute the rest block sizes right-to-left
    std::vector<int> digits(dims.size(), 0);
    for (int m = static_cast<int>(dims.size()) - 1; m >= 0; --m) {
      if (m == keep) continue;
      digits[static_cast<std::size_t>(m)] = remaining % dims[static_cast<std::size_t>(m)];
      remaining /= dims[static_cast<std::size_t>(m)];
    }
    digits[static_cast<std::size_t>(keep)] = k;
    for (std::size_t m = 0; m < dims.size(); ++m) idx = idx * dims[m] + digits[m];
    return idx;
  };

  Matrix out(dk, dk);
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j) {
      cplx s = 0.0;
      for (int r = 0; r < rest; ++r) s += rho(compose(i, r), compose(j, r));
      out(i, j) = s;
    }
  return out;
}

namespace {

std::vector<double> jacobi_eigenvalues(Matrix m) {
  const int n = m.rows();
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) off += std::norm(m(i, j));
    if (std::sqrt(off) < kJacobiOffTol) {
      std::vector<double> ev(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = m(i, i).real();
      std::sort(ev.begin(), ev.end());
      return ev;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = m(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const cplx phase = apq / r;
        const double app = m(p, p).real();
        const double aqq = m(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // unitary plane rotation: column p <- c*p - conj(phase)*s*q,
        //                          column q <- s*p + conj(phase)*c*q
        for (int k = 0; k < n; ++k) {
          const cplx mkp = m(k, p);
          const cplx mkq = m(k, q);
          m(k, p) = c * mkp - std::conj(phase) * s * mkq;
          m(k, q) = s * mkp + std::conj(phase) * c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          const cplx mpk = m(p, k);
          const cplx mqk = m(q, k);
          m(p, k) = c * mpk - phase * s * mqk;
          m(q, k) = s * mpk + phase * c * mqk;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        m(p, p) = cplx(m(p, p).real(), 0.0);
        m(q, q) = cplx(m(q, q).real(), 0.0);
      }
    }
  }
  throw std::runtime_error("hermitian_eigenvalues: Jacobi sweep limit exceeded");
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  require(m.rows() == m.cols() && m.rows() >= 1, "eigenvalues require a square matrix");
  require(m.rows() <= kMaxEigenDim, "eigenvalues: dimension exceeds supported bound");
  require(is_hermitian(m), "eigenvalues require a Hermitian matrix");

  const int n = m.rows();
  if (n == 1) return {m(0, 0).real()};
  if (n == 2) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double h = std::hypot((a - d) / 2.0, std::abs(m(0, 1)));
    const double mid = (a + d) / 2.0;
    return {mid - h, mid + h};
  }
  return jacobi_eigenvalues(m);
}

double von_neumann_entropy(const Matrix& rho) {
  require(is_hermitian(rho), "entropy requires a Hermitian matrix");
  require(std::abs(rho.trace().real() - 1.0) < kDerivedTol &&
              std::abs(rho.trace().imag()) < kDerivedTol,
          "entropy requires unit trace");
  double h = 0.0;
  for (double lambda : hermitian_eigenvalues(rho)) {
    require(lambda >= -kDerivedTol, "entropy requires a positive semidefinite matrix");
    if (lambda > 0.0) h -= lambda * std::log2(lambda);
  }
  return h;
}

}  // namespace qwalk
