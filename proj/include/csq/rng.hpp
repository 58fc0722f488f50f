#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace csq {

// Deterministic stream of uniforms and Gaussians.  Uniforms are built
// from the raw mt19937_64 output and Gaussians by Box-Muller, so a seed
// produces the same stream on every standard library (std::*_distribution
// output is implementation-defined and would not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // uniform on (0, 1]; never returns 0, so log() below is safe
  double uniform() {
    return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1p-53;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = uniform();
    double v = uniform();
    double r = std::sqrt(-2.0 * std::log(u));
    double angle = 2.0 * M_PI * v;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
  }

  std::complex<double> complex_gaussian() {
    double a = gaussian();
    double b = gaussian();
    return {a, b};
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace csq
