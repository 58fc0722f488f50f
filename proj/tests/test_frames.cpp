#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <variant>

#include "csq/coherent.hpp"
#include "csq/frames.hpp"

using namespace csq;

TEST_CASE("haar wavelet point evaluation: supports, signs, endpoint") {
  // mother wavelet
  CHECK(haar_wavelet(0, 0, 0.0) == 1.0);
  CHECK(haar_wavelet(0, 0, 0.49) == 1.0);
  CHECK(haar_wavelet(0, 0, 0.5) == -1.0);   // right-continuous at the jump
  CHECK(haar_wavelet(0, 0, 0.99) == -1.0);
  CHECK(haar_wavelet(0, 0, 1.0) == -1.0);   // x = 1 belongs to the last cell
  CHECK(haar_wavelet(0, 0, -0.1) == 0.0);
  CHECK(haar_wavelet(0, 0, 1.1) == 0.0);

  // scale 2, translate 1: support [1/4, 1/2), amplitude 2
  CHECK(haar_wavelet(2, 1, 0.20) == 0.0);
  CHECK(haar_wavelet(2, 1, 0.25) == 2.0);
  CHECK(haar_wavelet(2, 1, 0.374) == 2.0);
  CHECK(haar_wavelet(2, 1, 0.375) == -2.0);
  CHECK(haar_wavelet(2, 1, 0.499) == -2.0);
  CHECK(haar_wavelet(2, 1, 0.5) == 0.0);
  CHECK(haar_wavelet(2, 1, 1.0) == 0.0);    // only the last translate reaches x = 1
  CHECK(haar_wavelet(2, 3, 1.0) == -2.0);

  CHECK(haar_indicator(0.0) == 1.0);
  CHECK(haar_indicator(1.0) == 1.0);
  CHECK(haar_indicator(1.0000001) == 0.0);

  CHECK_THROWS_AS(haar_wavelet(-1, 0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(haar_wavelet(1, 2, 0.5), std::invalid_argument);
}

TEST_CASE("haar frame: member count, node values, zero means, Gram") {
  const MeasureSpace space = interval_space(3, 6);
  const Frame frame = haar_frame(space, 2);
  CHECK(frame.n_basis() == 8);  // 1 + 1 + 2 + 4
  CHECK(frame.gram_defect() <= 1e-12);

  // node values lie in {0, +-2^{j/2}}
  for (int n = 1; n < frame.n_basis(); ++n) {
    bool ok = true;
    for (int i = 0; i < frame.n_points(); ++i) {
      const double v = frame.value(n, i).real();
      const double av = std::abs(v);
      bool member = v == 0.0;
      for (int j = 0; j <= 2 && !member; ++j)
        member = std::abs(av - std::exp2(0.5 * j)) <= 1e-15;
      ok = ok && member && frame.value(n, i).imag() == 0.0;
    }
    CHECK(ok);
  }

  // wavelet rows integrate to zero against the measure
  for (int n = 1; n < frame.n_basis(); ++n) {
    std::vector<cdouble> row(frame.n_points());
    for (int i = 0; i < frame.n_points(); ++i) row[i] = frame.value(n, i);
    CHECK(std::abs(integrate(space, row)) <= 1e-12);
  }

  // too coarse a partition for the requested scale is rejected
  CHECK_THROWS_AS(haar_frame(interval_space(0, 4), 2), std::invalid_argument);

  // scale -1 keeps only the constant member
  const Frame flat = haar_frame(interval_space(0, 4), -1);
  CHECK(flat.n_basis() == 1);
  CHECK_THROWS_AS(haar_frame(interval_space(0, 4), -2), std::invalid_argument);
}

TEST_CASE("haar frame construction is deterministic") {
  const Frame a = haar_frame(interval_space(2, 5), 1);
  const Frame b = haar_frame(interval_space(2, 5), 1);
  REQUIRE(a.values().size() == b.values().size());
  CHECK(std::memcmp(a.values().data(), b.values().data(),
                    a.values().size() * sizeof(cdouble)) == 0);
}

TEST_CASE("trig frame is orthonormal and evaluates in closed form") {
  const Frame frame = trig_frame(interval_space(2, 16));
  CHECK(frame.n_basis() == 2);
  CHECK(frame.gram_defect() <= 1e-12);
  CHECK(frame.labels()[0] == "1");

  const std::vector<cdouble> at_quarter = frame.evaluate(0.25);
  CHECK(std::abs(at_quarter[0] - 1.0) == 0.0);
  CHECK(std::abs(at_quarter[1] - std::sqrt(2.0)) <= 1e-15);
  CHECK_THROWS_AS(frame.evaluate(1.5), std::invalid_argument);
  CHECK_THROWS_AS(frame.evaluate(-0.1), std::invalid_argument);
}

TEST_CASE("vector pair validation and seeded generation") {
  VectorPair bad;
  bad.alpha = {1.0, 0.0};
  bad.beta = {1.0, 0.0};  // not orthogonal
  CHECK_THROWS_AS(validate_pair(bad), std::invalid_argument);

  VectorPair mismatch;
  mismatch.alpha = {1.0, 0.0};
  mismatch.beta = {0.0};
  CHECK_THROWS_AS(validate_pair(mismatch), std::invalid_argument);

  for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
    const VectorPair p = random_pair(5, seed);
    validate_pair(p);  // must not throw
    const VectorPair q = random_pair(5, seed);
    CHECK(p.alpha == q.alpha);
    CHECK(p.beta == q.beta);
  }
  const VectorPair r = random_real_pair(3, 9);
  validate_pair(r);
  CHECK(pair_is_real(r));
  for (const cdouble& z : r.alpha) CHECK(z.imag() == 0.0);
  const VectorPair c = random_pair(3, 9);
  CHECK_FALSE(pair_is_real(c));
  CHECK_THROWS_AS(random_pair(1, 0), std::invalid_argument);
}

TEST_CASE("finite-set frame scales pair entries by the atom masses") {
  const std::vector<double> masses = {0.4, 1.3, 2.2, 0.8};
  const MeasureSpace space = finite_space({"p", "q", "r", "s"}, masses);
  const VectorPair pair = random_pair(4, 3);
  const Frame frame = frame_from_pair(space, pair);
  CHECK(frame.gram_defect() <= 1e-12);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(frame.value(0, i) - pair.alpha[i] / std::sqrt(masses[i])) <= 1e-15);
    CHECK(std::abs(frame.value(1, i) - pair.beta[i] / std::sqrt(masses[i])) <= 1e-15);
  }
  CHECK(frame.pair().has_value());

  // evaluation at a stored atom returns the same column
  const std::vector<cdouble> col = frame.evaluate(frame.atom_point(2));
  CHECK(col[0] == frame.value(0, 2));
  CHECK(col[1] == frame.value(1, 2));
  CHECK_THROWS_AS(frame.evaluate(Atom{"missing", {}}), std::invalid_argument);

  // wrong-size pair is rejected
  CHECK_THROWS_AS(frame_from_pair(space, random_pair(3, 1)), std::invalid_argument);
}

TEST_CASE("Fock frame: orthonormal under the Gaussian, rejects bad truncation") {
  const Frame frame = fock_frame(plane_space(10.0, 400, 64), 12);
  CHECK(frame.n_basis() == 13);
  CHECK(frame.gram_defect() <= 1e-8);  // measured ~1e-12 at this resolution
  CHECK(frame.fock_n_max() == 12);

  const std::vector<cdouble> at_zero = frame.evaluate(cdouble(0.0, 0.0));
  CHECK(at_zero[0] == cdouble(1.0, 0.0));
  for (int n = 1; n <= 12; ++n) CHECK(at_zero[n] == cdouble(0.0, 0.0));

  const cdouble z(0.5, -0.25);
  const std::vector<cdouble> at_z = frame.evaluate(z);
  CHECK(std::abs(at_z[3] - z * z * z / std::sqrt(6.0)) <= 1e-15);

  // radius far too small for the requested degree: Gram defect blows up
  CHECK_THROWS_AS(fock_frame(plane_space(3.0, 200, 64), 8), std::runtime_error);
  CHECK_THROWS_AS(fock_frame(plane_space(10.0, 400, 64), -1), std::invalid_argument);
}

TEST_CASE("frames reject spaces of the wrong kind") {
  CHECK_THROWS_AS(haar_frame(finite_space({"a", "b"}, {1, 1}), 0), std::invalid_argument);
  CHECK_THROWS_AS(trig_frame(plane_space(5.0, 50, 16)), std::invalid_argument);
  CHECK_THROWS_AS(fock_frame(interval_space(2, 8), 4), std::invalid_argument);
  CHECK_THROWS_AS(frame_from_pair(interval_space(2, 8), random_pair(2, 0)),
                  std::invalid_argument);
}
