#include "csq/quantize.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "csq/kahan.hpp"

namespace csq {

namespace {
constexpr double kRealnessTol = 1e-14;
constexpr double kHermitianTol = 1e-12;
}  // namespace

Observable Observable::from_values(std::vector<cdouble> values) {
  Observable f;
  double im = 0.0;
  for (const cdouble& z : values) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("Observable: non-finite value");
    im = std::max(im, std::abs(z.imag()));
  }
  f.values = std::move(values);
  f.real = im <= kRealnessTol;
  return f;
}

Observable Observable::from_real(std::vector<double> values) {
  std::vector<cdouble> v(values.begin(), values.end());
  return from_values(std::move(v));
}

Observable Observable::from_function(const MeasureSpace& space,
                                     const std::function<cdouble(const Point&)>& f) {
  std::vector<cdouble> v;
  v.reserve(space.size());
  for (const Point& x : space.points()) v.push_back(f(x));
  return from_values(std::move(v));
}

Operator make_operator(CMatrix m) {
  if (!m.all_finite()) throw std::invalid_argument("Operator: non-finite entry");
  Operator op;
  const bool square = m.rows() == m.cols();
  const double scale = std::max(1.0, m.max_abs());
  op.hermitian = square && m.hermitian_defect() <= kHermitianTol * scale;
  op.matrix = std::move(m);
  return op;
}

Operator sigma0() { return make_operator(CMatrix::identity(2)); }

Operator sigma1() {
  CMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return make_operator(m);
}

Operator sigma2() {
  CMatrix m(2, 2);
  m(0, 1) = cdouble(0.0, -1.0);
  m(1, 0) = cdouble(0.0, 1.0);
  return make_operator(m);
}

Operator sigma3() {
  CMatrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return make_operator(m);
}

Operator quantize(const Frame& frame, const Observable& f) {
  const int np = frame.n_points();
  if (static_cast<int>(f.values.size()) != np)
    throw std::invalid_argument("quantize: observable length does not match the frame's space");
  const int nb = frame.n_basis();
  const std::vector<double>& w = frame.space().weights();

  CMatrix a(nb, nb);
  for (int m = 0; m < nb; ++m) {
    const cdouble* rm = frame.values().data() + static_cast<std::size_t>(m) * np;
    for (int n = 0; n < nb; ++n) {
      const cdouble* rn = frame.values().data() + static_cast<std::size_t>(n) * np;
      KahanComplexSum s;
      for (int i = 0; i < np; ++i) s.add(w[i] * f.values[i] * rm[i] * std::conj(rn[i]));
      a(m, n) = s.value();
    }
  }
  return make_operator(std::move(a));
}

cdouble lower_symbol(const Frame& frame, const Operator& a, const Point& x) {
  if (a.matrix.rows() != frame.n_basis() || a.matrix.cols() != frame.n_basis())
    throw std::invalid_argument("lower_symbol: operator dimension does not match the frame");
  const CoherentState cs = coherent_state(frame, x);
  const std::vector<cdouble> ac = a.matrix.apply(cs.coeffs);
  KahanComplexSum s;
  for (std::size_t m = 0; m < ac.size(); ++m) s.add(std::conj(cs.coeffs[m]) * ac[m]);
  return s.value();
}

RMatrix transition_matrix(const Frame& frame) {
  if (!frame.pair().has_value())
    throw std::invalid_argument("transition_matrix: frame was not built from a vector pair");
  const VectorPair& pair = *frame.pair();
  const int n = pair.size();
  RMatrix p(n, n);
  for (int l = 0; l < n; ++l) {
    const double nl = std::norm(pair.alpha[l]) + std::norm(pair.beta[l]);
    if (!(nl > 0.0))
      throw std::domain_error("transition_matrix: N = 0 at atom " + std::to_string(l));
    for (int i = 0; i < n; ++i) {
      const cdouble u = std::conj(pair.alpha[l]) * pair.alpha[i] +
                        std::conj(pair.beta[l]) * pair.beta[i];
      p(l, i) = std::norm(u) / nl;
    }
  }
  return p;
}

PairAverages averages(const VectorPair& pair, const Observable& f) {
  validate_pair(pair);
  if (f.values.size() != static_cast<std::size_t>(pair.size()))
    throw std::invalid_argument("averages: observable length does not match the pair");
  if (!f.real) throw std::invalid_argument("averages: observable must be real");

  KahanSum plus, minus;
  KahanComplexSum off;
  for (int i = 0; i < pair.size(); ++i) {
    const double fi = f.values[i].real();
    const double na = std::norm(pair.alpha[i]);
    const double nb = std::norm(pair.beta[i]);
    plus.add(0.5 * (na + nb) * fi);
    minus.add(0.5 * (na - nb) * fi);
    off.add(pair.alpha[i] * std::conj(pair.beta[i]) * fi);
  }
  return PairAverages{plus.value(), minus.value(), off.value()};
}

Operator pauli_assemble(const PairAverages& av) {
  CMatrix m(2, 2);
  m(0, 0) = av.plus + av.minus;
  m(1, 1) = av.plus - av.minus;
  m(0, 1) = av.offdiag;
  m(1, 0) = std::conj(av.offdiag);
  return make_operator(m);
}

std::pair<double, double> spectrum2(const Operator& a) {
  if (a.matrix.rows() != 2 || a.matrix.cols() != 2)
    throw std::invalid_argument("spectrum2: operator is not 2x2");
  if (!a.hermitian) throw std::invalid_argument("spectrum2: operator is not hermitian");
  const double t = 0.5 * (a.matrix(0, 0).real() + a.matrix(1, 1).real());
  const double d = 0.5 * (a.matrix(0, 0).real() - a.matrix(1, 1).real());
  const double r = std::hypot(d, std::abs(a.matrix(0, 1)));
  return {t - r, t + r};
}

std::vector<double> spectrum(const Operator& a) {
  if (a.matrix.rows() != a.matrix.cols())
    throw std::invalid_argument("spectrum: operator is not square");
  if (!a.hermitian) throw std::invalid_argument("spectrum: operator is not hermitian");
  return hermitian_eigensystem(a.matrix).values;
}

namespace {

// Singular values via the eigenvalues of the small normal matrix M M^T.
// Rank counts values above max(rows, cols) * eps * sigma_max.
void singular_values_and_rank(const RMatrix& m, std::vector<double>& sv, int& rank) {
  const int k = m.rows();
  CMatrix g(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      KahanSum s;
      for (int j = 0; j < m.cols(); ++j) s.add(m(r, j) * m(c, j));
      g(r, c) = s.value();
    }
  EigenSystem sys = hermitian_eigensystem(g);
  sv.assign(k, 0.0);
  for (int i = 0; i < k; ++i)
    sv[i] = std::sqrt(std::max(0.0, sys.values[k - 1 - i]));  // descending
  const double threshold = std::max(m.rows(), m.cols()) *
                           std::numeric_limits<double>::epsilon() * (sv.empty() ? 0.0 : sv[0]);
  rank = 0;
  for (double s : sv)
    if (s > threshold) ++rank;
}

}  // namespace

CoefficientMatrix coefficient_matrix(const VectorPair& pair) {
  validate_pair(pair);
  const int n = pair.size();
  CoefficientMatrix cm;
  cm.entries = RMatrix(4, n);
  for (int i = 0; i < n; ++i) {
    const cdouble ab = pair.alpha[i] * std::conj(pair.beta[i]);
    cm.entries(0, i) = std::norm(pair.alpha[i]);
    cm.entries(1, i) = std::norm(pair.beta[i]);
    cm.entries(2, i) = ab.real();
    cm.entries(3, i) = ab.imag();
  }
  singular_values_and_rank(cm.entries, cm.singular_values, cm.rank);
  return cm;
}

CoefficientMatrix coefficient_matrix_real3(const VectorPair& pair) {
  validate_pair(pair);
  if (pair.size() != 3) throw std::invalid_argument("coefficient_matrix_real3: need length 3");
  if (!pair_is_real(pair)) throw std::invalid_argument("coefficient_matrix_real3: pair must be real");
  const double a1 = pair.alpha[0].real(), a2 = pair.alpha[1].real();
  const double b1 = pair.beta[0].real(), b2 = pair.beta[1].real();
  CoefficientMatrix cm;
  cm.entries = RMatrix(3, 3);
  cm.entries(0, 0) = a1 * a1;
  cm.entries(0, 1) = a2 * a2;
  cm.entries(0, 2) = 1.0 - a1 * a1 - a2 * a2;
  cm.entries(1, 0) = b1 * b1;
  cm.entries(1, 1) = b2 * b2;
  cm.entries(1, 2) = 1.0 - b1 * b1 - b2 * b2;
  cm.entries(2, 0) = a1 * b1;
  cm.entries(2, 1) = a2 * b2;
  cm.entries(2, 2) = -a1 * b1 - a2 * b2;
  singular_values_and_rank(cm.entries, cm.singular_values, cm.rank);
  return cm;
}

double real3_det_closed_form(const VectorPair& pair) {
  if (pair.size() != 3) throw std::invalid_argument("real3_det_closed_form: need length 3");
  if (!pair_is_real(pair)) throw std::invalid_argument("real3_det_closed_form: pair must be real");
  const double a1 = pair.alpha[0].real(), a2 = pair.alpha[1].real();
  const double b1 = pair.beta[0].real(), b2 = pair.beta[1].real();
  return (a2 * b1 - a1 * b2) * (a1 * a2 + b1 * b2);
}

double det3(const RMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("det3: matrix is not 3x3");
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

namespace {

// Gaussian elimination with partial pivoting on a square system.
// Backward stable, so the residual of the returned solution is
// ~eps * ||M|| * ||f|| even when M is ill conditioned (unlike the
// normal-matrix route, which squares the condition number).  Returns
// false on an exactly zero pivot.
bool solve_square_gepp(const RMatrix& m, std::vector<double> rhs, std::vector<double>& out) {
  const int k = m.rows();
  std::vector<double> a(m.data());
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::abs(a[static_cast<std::size_t>(r) * k + col]) >
          std::abs(a[static_cast<std::size_t>(piv) * k + col]))
        piv = r;
    if (a[static_cast<std::size_t>(piv) * k + col] == 0.0) return false;
    if (piv != col) {
      for (int c = 0; c < k; ++c)
        std::swap(a[static_cast<std::size_t>(piv) * k + c],
                  a[static_cast<std::size_t>(col) * k + c]);
      std::swap(rhs[piv], rhs[col]);
    }
    for (int r = col + 1; r < k; ++r) {
      const double factor =
          a[static_cast<std::size_t>(r) * k + col] / a[static_cast<std::size_t>(col) * k + col];
      a[static_cast<std::size_t>(r) * k + col] = 0.0;
      for (int c = col + 1; c < k; ++c)
        a[static_cast<std::size_t>(r) * k + c] -= factor * a[static_cast<std::size_t>(col) * k + c];
      rhs[r] -= factor * rhs[col];
    }
  }
  out.assign(k, 0.0);
  for (int r = k - 1; r >= 0; --r) {
    double s = rhs[r];
    for (int c = r + 1; c < k; ++c) s -= a[static_cast<std::size_t>(r) * k + c] * out[c];
    out[r] = s / a[static_cast<std::size_t>(r) * k + r];
  }
  return true;
}

// Minimum-norm least-squares solve of M f = rhs through the
// pseudoinverse of the k x k normal matrix.  range_residual reports
// the norm of the rhs component along the truncated eigendirections:
// nonzero exactly when rhs lies (numerically) outside the range of M.
std::vector<double> min_norm_solve(const RMatrix& m, const std::vector<double>& rhs,
                                   double& range_residual) {
  const int k = m.rows();
  CMatrix g(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      KahanSum s;
      for (int j = 0; j < m.cols(); ++j) s.add(m(r, j) * m(c, j));
      g(r, c) = s.value();
    }
  EigenSystem sys = hermitian_eigensystem(g);
  const double lam_max = sys.values.empty() ? 0.0 : std::abs(sys.values.back());
  const double sigma_max = std::sqrt(std::max(0.0, lam_max));
  const double sigma_cut = std::max(m.rows(), m.cols()) *
                           std::numeric_limits<double>::epsilon() * sigma_max;
  const double lam_cut = sigma_cut * sigma_cut;

  std::vector<double> y(k, 0.0);
  double cut_mass = 0.0;
  for (int i = 0; i < k; ++i) {
    const double lam = sys.values[i];
    double dot = 0.0;
    for (int r = 0; r < k; ++r) dot += sys.vectors(r, i).real() * rhs[r];
    if (lam <= lam_cut || lam <= 0.0) {
      cut_mass += dot * dot;
      continue;
    }
    const double coeff = dot / lam;
    for (int r = 0; r < k; ++r) y[r] += coeff * sys.vectors(r, i).real();
  }
  range_residual = std::sqrt(cut_mass);
  return m.apply_transpose(y);
}

void check_consistency(double residual, const std::vector<double>& rhs, const char* what) {
  double rhs_scale = 1.0;
  for (double r : rhs) rhs_scale = std::max(rhs_scale, std::abs(r));
  if (residual > 1e-9 * rhs_scale) {
    std::ostringstream os;
    os << what << ": no upper symbol exists for this frame (residual " << residual << ")";
    throw std::runtime_error(os.str());
  }
}

void check_hermitian_2x2(const Operator& target, const char* what) {
  if (target.matrix.rows() != 2 || target.matrix.cols() != 2)
    throw std::invalid_argument(std::string(what) + ": target is not 2x2");
  if (!target.hermitian)
    throw std::invalid_argument(std::string(what) + ": target is not hermitian");
}

}  // namespace

Observable upper_symbol_solve(const VectorPair& pair, const Operator& target) {
  check_hermitian_2x2(target, "upper_symbol_solve");
  const CoefficientMatrix cm = coefficient_matrix(pair);
  const std::vector<double> rhs = {target.matrix(0, 0).real(), target.matrix(1, 1).real(),
                                   target.matrix(0, 1).real(), target.matrix(0, 1).imag()};
  std::vector<double> f;
  if (pair.size() == 4 && cm.rank == 4 && solve_square_gepp(cm.entries, rhs, f))
    return Observable::from_real(std::move(f));
  double range_residual = 0.0;
  f = min_norm_solve(cm.entries, rhs, range_residual);
  check_consistency(range_residual, rhs, "upper_symbol_solve");
  return Observable::from_real(std::move(f));
}

Observable upper_symbol_solve_real3(const VectorPair& pair, const Operator& target) {
  check_hermitian_2x2(target, "upper_symbol_solve_real3");
  const CoefficientMatrix cm = coefficient_matrix_real3(pair);
  const std::vector<double> rhs = {target.matrix(0, 0).real(), target.matrix(1, 1).real(),
                                   target.matrix(0, 1).real()};
  // a real pair cannot reach the sigma2 component; fold it into the residual
  const double sigma2_part = std::abs(target.matrix(0, 1).imag());
  std::vector<double> f;
  if (cm.rank == 3 && solve_square_gepp(cm.entries, rhs, f)) {
    check_consistency(sigma2_part, rhs, "upper_symbol_solve_real3");
    return Observable::from_real(std::move(f));
  }
  double range_residual = 0.0;
  f = min_norm_solve(cm.entries, rhs, range_residual);
  check_consistency(std::max(range_residual, sigma2_part), rhs, "upper_symbol_solve_real3");
  return Observable::from_real(std::move(f));
}

std::vector<double> pauli_lower_symbols(const VectorPair& pair, int l) {
  if (l < 0 || l >= pair.size())
    throw std::invalid_argument("pauli_lower_symbols: atom index out of range");
  const double nl = std::norm(pair.alpha[l]) + std::norm(pair.beta[l]);
  if (!(nl > 0.0))
    throw std::domain_error("pauli_lower_symbols: N = 0 at atom " + std::to_string(l));
  const cdouble ab = std::conj(pair.alpha[l]) * pair.beta[l];
  return {1.0, 2.0 * ab.real() / nl, 2.0 * ab.imag() / nl,
          (std::norm(pair.alpha[l]) - std::norm(pair.beta[l])) / nl};
}

}  // namespace csq
