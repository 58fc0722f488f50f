#pragma once

#include "csq/coherent.hpp"
#include "csq/frames.hpp"

namespace csq {

// A function tabulated on the points of a MeasureSpace, in point order.
// `real` is measured at construction (max |Im| <= 1e-14).
struct Observable {
  std::vector<cdouble> values;
  bool real = false;

  static Observable from_values(std::vector<cdouble> values);
  static Observable from_real(std::vector<double> values);
  static Observable from_function(const MeasureSpace& space,
                                  const std::function<cdouble(const Point&)>& f);
};

inline cdouble integrate(const MeasureSpace& space, const Observable& f) {
  return integrate(space, f.values);
}

// A matrix in the frame basis.  `hermitian` is measured at construction
// (defect <= 1e-12 relative to the matrix scale).
struct Operator {
  CMatrix matrix;
  bool hermitian = false;
};

Operator make_operator(CMatrix m);

Operator sigma0();
Operator sigma1();
Operator sigma2();
Operator sigma3();

// A_f with entries (A_f)_{mn} = sum_i w_i f(x_i) phi_m(x_i) conj(phi_n(x_i)),
// each entry a compensated sum in node order.  Real f gives a hermitian
// operator (exactly, entrywise conjugate sums).
Operator quantize(const Frame& frame, const Observable& f);

// <x|A|x> for the coherent state at x; real for hermitian A.
cdouble lower_symbol(const Frame& frame, const Operator& a, const Point& x);

// Stochastic matrix pi_{li} = |<alpha_l alpha_i + beta_l beta_i>|^2 /
// (|alpha_l|^2 + |beta_l|^2): rows sum to 1, entries >= 0, and
// (pi f)_l = <x_l|A_f|x_l>.  Requires a frame built from a VectorPair.
RMatrix transition_matrix(const Frame& frame);

// <f>+- = (1/2) sum_i (|alpha_i|^2 +- |beta_i|^2) f_i and the
// off-diagonal sum_i alpha_i conj(beta_i) f_i.
struct PairAverages {
  double plus = 0.0;
  double minus = 0.0;
  cdouble offdiag;
};

PairAverages averages(const VectorPair& pair, const Observable& f);

// <f>+ sigma0 + <f>- sigma3 + Re(off) sigma1 - Im(off) sigma2; equals
// quantize(frame_from_pair(...), f) when f is real.
Operator pauli_assemble(const PairAverages& av);

// Eigenvalues of a hermitian 2x2 via the shifted closed form
// t -+ hypot(d, |o|), t = tr/2, d = (a11 - a22)/2, o = a12.  Ascending.
std::pair<double, double> spectrum2(const Operator& a);

// Ascending eigenvalues of a dense hermitian operator (Jacobi sweeps,
// cap 100).  Throws std::invalid_argument when the operator is not
// hermitian.
std::vector<double> spectrum(const Operator& a);

// Rows over atoms i: |alpha_i|^2, |beta_i|^2, Re(alpha_i conj(beta_i)),
// Im(alpha_i conj(beta_i)).  Rank counts singular values above
// max(4, N) * eps * sigma_max.
struct CoefficientMatrix {
  RMatrix entries;
  std::vector<double> singular_values;  // descending
  int rank = 0;
};

CoefficientMatrix coefficient_matrix(const VectorPair& pair);

// Real pairs of length 3 reduce to a 3x3 system (rows carry the T00,
// T11, T01 components).  det factorizes as
// (alpha2 beta1 - alpha1 beta2)(alpha1 alpha2 + beta1 beta2).
CoefficientMatrix coefficient_matrix_real3(const VectorPair& pair);
double real3_det_closed_form(const VectorPair& pair);
double det3(const RMatrix& m);

// Solve C f = rhs(target) for an upper symbol of the hermitian target:
// rhs = (T00, T11, Re T01, Im T01).  Unique when N = 4 and C is
// nonsingular; minimum-norm when N > 4; throws std::runtime_error (with
// the residual in the message) when the system is inconsistent.
Observable upper_symbol_solve(const VectorPair& pair, const Operator& target);

// Same for real length-3 pairs and real-symmetric targets,
// rhs = (T00, T11, T01).
Observable upper_symbol_solve_real3(const VectorPair& pair, const Operator& target);

// (sigma0_check, ..., sigma3_check) at atom l: lower symbols of the four
// Pauli operators, computed from the closed forms
// 2Re(conj(alpha_l) beta_l)/n_l, 2Im(...)/n_l, (|alpha_l|^2-|beta_l|^2)/n_l.
std::vector<double> pauli_lower_symbols(const VectorPair& pair, int l);

}  // namespace csq
