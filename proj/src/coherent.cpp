#include "csq/coherent.hpp"

#include <cmath>
#include <stdexcept>

#include "csq/kahan.hpp"

namespace csq {

double normalization(const Frame& frame, const Point& x) {
  const std::vector<cdouble> phi = frame.evaluate(x);
  KahanSum s;
  for (const cdouble& v : phi) s.add(std::norm(v));
  const double n = s.value();
  if (!(n > 0.0))
    throw std::domain_error("normalization: N(x) = 0 at " + point_to_string(x) +
                            " (coherent state undefined there)");
  return n;
}

CoherentState coherent_state(const Frame& frame, const Point& x) {
  std::vector<cdouble> phi = frame.evaluate(x);
  KahanSum s;
  for (const cdouble& v : phi) s.add(std::norm(v));
  const double n = s.value();
  if (!(n > 0.0))
    throw std::domain_error("coherent_state: N(x) = 0 at " + point_to_string(x) +
                            " (state undefined there)");
  const double scale = 1.0 / std::sqrt(n);
  for (cdouble& v : phi) v *= scale;
  return CoherentState{std::move(phi), x, n};
}

cdouble overlap(const Frame& frame, const Point& x, const Point& xprime) {
  const CoherentState a = coherent_state(frame, x);
  const CoherentState b = coherent_state(frame, xprime);
  KahanComplexSum s;
  for (std::size_t n = 0; n < a.coeffs.size(); ++n) s.add(std::conj(a.coeffs[n]) * b.coeffs[n]);
  return s.value();
}

cdouble kernel(const Frame& frame, const Point& x, const Point& xprime) {
  const std::vector<cdouble> phi = frame.evaluate(x);
  const std::vector<cdouble> psi = frame.evaluate(xprime);
  KahanComplexSum s;
  for (std::size_t n = 0; n < phi.size(); ++n) s.add(phi[n] * std::conj(psi[n]));
  return s.value();
}

double resolution_defect(const Frame& frame) {
  // sum_i w_i N(x_i) |x_i><x_i| accumulated from the unnormalized
  // coefficient columns: N(x_i)|x_i><x_i| = phi(x_i) phi(x_i)^dagger.
  const int nb = frame.n_basis();
  const int np = frame.n_points();
  const std::vector<double>& w = frame.space().weights();
  std::vector<KahanComplexSum> acc(static_cast<std::size_t>(nb) * nb);
  std::vector<cdouble> col(nb);
  for (int i = 0; i < np; ++i) {
    for (int n = 0; n < nb; ++n) col[n] = frame.value(n, i);
    for (int m = 0; m < nb; ++m)
      for (int n = 0; n < nb; ++n)
        acc[static_cast<std::size_t>(m) * nb + n].add(w[i] * col[m] * std::conj(col[n]));
  }
  double defect = 0.0;
  for (int m = 0; m < nb; ++m)
    for (int n = 0; n < nb; ++n) {
      const cdouble expected = (m == n) ? cdouble(1.0, 0.0) : cdouble(0.0, 0.0);
      defect = std::max(defect,
                        std::abs(acc[static_cast<std::size_t>(m) * nb + n].value() - expected));
    }
  return defect;
}

}  // namespace csq
