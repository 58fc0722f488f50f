#include "csq/canonical.hpp"

#include <cmath>
#include <stdexcept>
#include <variant>

namespace csq {

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

Operator commutator(const Operator& a, const Operator& b) {
  return make_operator(commutator(a.matrix, b.matrix));
}

TruncatedLadder ladder_from_quantization(const Frame& frame) {
  if (frame.family() != FrameFamily::Fock)
    throw std::invalid_argument("ladder_from_quantization: frame is not a Fock frame");
  const MeasureSpace& space = frame.space();

  Observable z = Observable::from_function(space, [](const Point& p) {
    return std::get<cdouble>(p);
  });
  Observable zbar = Observable::from_function(space, [](const Point& p) {
    return std::conj(std::get<cdouble>(p));
  });

  TruncatedLadder ladder;
  ladder.n_max = frame.fock_n_max();
  ladder.a = quantize(frame, z);
  ladder.a_dagger = quantize(frame, zbar);

  const int dim = ladder.n_max + 1;
  double defect = 0.0;
  for (int m = 0; m < dim; ++m)
    for (int n = 0; n < dim; ++n) {
      const double ideal = (n == m + 1) ? std::sqrt(static_cast<double>(n)) : 0.0;
      defect = std::max(defect, std::abs(ladder.a.matrix(m, n) - ideal));
    }
  ladder.quadrature_defect = defect;
  return ladder;
}

std::pair<Operator, Operator> position_momentum(const TruncatedLadder& ladder) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CMatrix q = inv_sqrt2 * (ladder.a.matrix + ladder.a_dagger.matrix);
  CMatrix p = cdouble(0.0, -inv_sqrt2) * (ladder.a.matrix - ladder.a_dagger.matrix);
  return {make_operator(std::move(q)), make_operator(std::move(p))};
}

Operator number_operator(const TruncatedLadder& ladder) {
  return make_operator(ladder.a_dagger.matrix * ladder.a.matrix);
}

}  // namespace csq
