#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace qwalk {

using cplx = std::complex<double>;

// Tolerance for construction-level identity checks (unitarity, normalization,
// Hermiticity). Derived quantities that pass through the iterative eigensolver
// get the looser kDerivedTol.
inline constexpr double kConstructTol = 1e-12;
inline constexpr double kDerivedTol = 1e-9;

// Dense row-major complex matrix. Every dimension in this project is <= 12,
// so there is no sparse or blocked storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  Matrix(int rows, int cols, std::initializer_list<cplx> entries);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& operator()(int i, int j) { return data_[index(i, j)]; }
  const cplx& operator()(int i, int j) const { return data_[index(i, j)]; }

  Matrix adjoint() const;
  cplx trace() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const cplx& s, const Matrix& m);

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

bool is_unitary(const Matrix& m, double tol = kConstructTol);
bool is_hermitian(const Matrix& m, double tol = kConstructTol);
double max_abs_diff(const Matrix& a, const Matrix& b);

const Matrix& pauli_x();
const Matrix& pauli_z();

// Kronecker product; dims multiply, row-major index (i_a * rows_b + i_b).
Matrix kron(const Matrix& a, const Matrix& b);

// |v><v|
Matrix projector(const std::vector<cplx>& v);

std::vector<cplx> apply(const Matrix& m, const std::vector<cplx>& v);
cplx inner(const std::vector<cplx>& x, const std::vector<cplx>& y);  // <x|y>
double norm(const std::vector<cplx>& v);
bool is_normalized(const std::vector<cplx>& v, double tol = kConstructTol);

// Reduced density matrix on subsystem `keep` of a density matrix whose
// subsystem dimensions are `dims` (Alice-first, row-major). Trace preserving.
Matrix partial_trace(const Matrix& rho, const std::vector<int>& dims, int keep);

// Real eigenvalues, ascending. Closed form for n <= 2, cyclic Jacobi rotations
// otherwise. Dimension capped at 8.
std::vector<double> hermitian_eigenvalues(const Matrix& m);

// -sum lambda log2(lambda), in bits, with 0 log 0 := 0. Requires unit trace;
// eigenvalues below -kDerivedTol are rejected, tiny negatives are clamped.
double von_neumann_entropy(const Matrix& rho);

}  // namespace qwalk
