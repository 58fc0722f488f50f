#pragma once

#include "csq/quantize.hpp"

namespace csq {

// Truncated ladder pair on the Fock-Bargmann frame: a = quantize(z),
// a_dagger = quantize(conj z).  On the truncation, [a, a+] =
// diag(1, ..., 1, -n_max) rather than the identity.
struct TruncatedLadder {
  Operator a;
  Operator a_dagger;
  int n_max = 0;
  // Max entrywise deviation of `a` from the ideal truncated lowering
  // matrix sqrt(n+1)|n><n+1|; every ladder tolerance is stated against it.
  double quadrature_defect = 0.0;
};

// Requires a Fock frame.  The superdiagonal of `a` reproduces
// sqrt(n + 1) up to quadrature error.
TruncatedLadder ladder_from_quantization(const Frame& frame);

// Q = (a + a+)/sqrt(2), P = (a - a+)/(i sqrt(2)); [Q, P] = i I on the
// interior of the truncation.
std::pair<Operator, Operator> position_momentum(const TruncatedLadder& ladder);

// N = a+ a, diagonal 0..n_max up to quadrature error.
Operator number_operator(const TruncatedLadder& ladder);

// [A, B] = AB - BA; throws std::invalid_argument on dimension mismatch.
CMatrix commutator(const CMatrix& a, const CMatrix& b);
Operator commutator(const Operator& a, const Operator& b);

}  // namespace csq
