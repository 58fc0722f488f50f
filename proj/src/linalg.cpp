#include "csq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace csq {

CMatrix::CMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("CMatrix: negative dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, cdouble(0.0, 0.0));
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const cdouble& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double CMatrix::hermitian_defect() const {
  if (rows_ != cols_) throw std::invalid_argument("hermitian_defect: matrix not square");
  double d = 0.0;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return d;
}

double CMatrix::frobenius() const {
  double s = 0.0;
  for (const cdouble& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool CMatrix::all_finite() const {
  for (const cdouble& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

std::vector<cdouble> CMatrix::apply(const std::vector<cdouble>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("CMatrix::apply: length mismatch");
  std::vector<cdouble> out(rows_, cdouble(0.0, 0.0));
  for (int r = 0; r < rows_; ++r) {
    cdouble s = 0.0;
    for (int c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

namespace {
void check_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
}
}  // namespace

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  check_same_shape(a, b, "operator+");
  CMatrix m(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c) + b(r, c);
  return m;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  check_same_shape(a, b, "operator-");
  CMatrix m(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c) - b(r, c);
  return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("operator*: inner dimension mismatch");
  CMatrix m(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      cdouble arK = a(r, k);
      if (arK == cdouble(0.0, 0.0)) continue;
      for (int c = 0; c < b.cols(); ++c) m(r, c) += arK * b(k, c);
    }
  return m;
}

CMatrix operator*(cdouble s, const CMatrix& a) {
  CMatrix m(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m(r, c) = s * a(r, c);
  return m;
}

RMatrix::RMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RMatrix: negative dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

std::vector<double> RMatrix::apply(const std::vector<double>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("RMatrix::apply: length mismatch");
  std::vector<double> out(rows_, 0.0);
  for (int r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (int c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

std::vector<double> RMatrix::apply_transpose(const std::vector<double>& v) const {
  if (static_cast<int>(v.size()) != rows_)
    throw std::invalid_argument("RMatrix::apply_transpose: length mismatch");
  std::vector<double> out(cols_, 0.0);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[c] += (*this)(r, c) * v[r];
  return out;
}

namespace {

double offdiag_frobenius(const CMatrix& a) {
  double s = 0.0;
  for (int p = 0; p < a.rows(); ++p)
    for (int q = p + 1; q < a.cols(); ++q) s += std::norm(a(p, q));
  return std::sqrt(2.0 * s);
}

}  // namespace

EigenSystem hermitian_eigensystem(const CMatrix& a, int max_sweeps) {
  if (a.rows() != a.cols()) throw std::invalid_argument("hermitian_eigensystem: not square");
  const int n = a.rows();

  // work on the hermitian part; the caller is responsible for rejecting
  // genuinely non-hermitian input at a meaningful tolerance
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));

  CMatrix v = CMatrix::identity(n);
  const double scale = std::max(m.frobenius(), 1e-300);
  const double stop = 1e-14 * scale;

  int sweeps = 0;
  if (n > 1) {
    bool converged = offdiag_frobenius(m) <= stop;
    while (!converged) {
      if (sweeps >= max_sweeps)
        throw std::runtime_error("hermitian_eigensystem: no convergence after sweep cap");
      ++sweeps;
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          cdouble b = m(p, q);
          double ab = std::abs(b);
          if (ab <= 1e-300) continue;
          // unitary U = diag(1, conj(b)/|b|) * real rotation: makes the
          // pivot real, then annihilates it
          cdouble phase = std::conj(b) / ab;
          double tau = (m(q, q).real() - m(p, p).real()) / (2.0 * ab);
          double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
          double c = 1.0 / std::sqrt(1.0 + t * t);
          double s = t * c;

          for (int k = 0; k < n; ++k) {  // columns: M <- M U
            cdouble mk_p = m(k, p), mk_q = m(k, q);
            m(k, p) = c * mk_p - s * phase * mk_q;
            m(k, q) = s * mk_p + c * phase * mk_q;
          }
          for (int k = 0; k < n; ++k) {  // rows: M <- U^dagger M
            cdouble mp_k = m(p, k), mq_k = m(q, k);
            m(p, k) = c * mp_k - s * std::conj(phase) * mq_k;
            m(q, k) = s * mp_k + c * std::conj(phase) * mq_k;
          }
          for (int k = 0; k < n; ++k) {  // eigenvector accumulation: V <- V U
            cdouble vk_p = v(k, p), vk_q = v(k, q);
            v(k, p) = c * vk_p - s * phase * vk_q;
            v(k, q) = s * vk_p + c * phase * vk_q;
          }
          m(p, q) = 0.0;
          m(q, p) = 0.0;
        }
      }
      converged = offdiag_frobenius(m) <= stop;
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return m(i, i).real() < m(j, j).real(); });

  EigenSystem sys;
  sys.sweeps = sweeps;
  sys.values.resize(n);
  sys.vectors = CMatrix(n, n);
  for (int c = 0; c < n; ++c) {
    sys.values[c] = m(order[c], order[c]).real();
    for (int r = 0; r < n; ++r) sys.vectors(r, c) = v(r, order[c]);
  }
  return sys;
}

}  // namespace csq
