#pragma once

#include <complex>
#include <vector>

namespace csq {

using cdouble = std::complex<double>;

// Dense row-major complex matrix.  Everything in this library is small
// (a few hundred rows at most), so there is no view or expression
// machinery, just owned storage.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols);
  static CMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cdouble& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const cdouble& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  CMatrix adjoint() const;
  double max_abs() const;           // max entrywise |a_rc|
  double hermitian_defect() const;  // ||A - A^dagger||_max, square only
  double frobenius() const;
  bool all_finite() const;

  std::vector<cdouble> apply(const std::vector<cdouble>& v) const;

  const std::vector<cdouble>& data() const { return data_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<cdouble> data_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cdouble s, const CMatrix& a);

// Dense row-major real matrix; same storage conventions as CMatrix.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const double& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  std::vector<double> apply(const std::vector<double>& v) const;
  std::vector<double> apply_transpose(const std::vector<double>& v) const;

  const std::vector<double>& data() const { return data_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

// Eigendecomposition of a hermitian matrix.  values ascending; vectors
// stored as columns, A v_k = values[k] v_k.
struct EigenSystem {
  std::vector<double> values;
  CMatrix vectors;
  int sweeps = 0;
};

// Cyclic complex Jacobi rotations.  Each pivot (p,q) is annihilated by a
// unitary built from the phase of a_pq and a real rotation; off-diagonal
// mass decreases monotonically.  Throws std::runtime_error when the
// off-diagonal Frobenius mass has not reached rounding level within
// max_sweeps sweeps, and std::invalid_argument for non-square input.
// The input is symmetrized as (A + A^dagger)/2 before iterating.
EigenSystem hermitian_eigensystem(const CMatrix& a, int max_sweeps = 100);

}  // namespace csq
