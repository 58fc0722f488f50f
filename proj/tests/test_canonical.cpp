#include <doctest.h>

#include <cmath>
#include <complex>

#include "csq/canonical.hpp"
#include "csq/coherent.hpp"

using namespace csq;

namespace {

const Frame& default_fock() {
  static const Frame frame = fock_frame(plane_space(10.0, 400, 64), 12);
  return frame;
}

}  // namespace

TEST_CASE("ladder from quantization: superdiagonal and adjacency") {
  const TruncatedLadder ladder = ladder_from_quantization(default_fock());
  CHECK(ladder.n_max == 12);
  CHECK(ladder.quadrature_defect <= 1e-8);

  for (int n = 0; n < 12; ++n)
    CHECK(std::abs(ladder.a.matrix(n, n + 1) - std::sqrt(n + 1.0)) <= 1e-8);

  // every off-pattern entry is quadrature noise
  for (int m = 0; m <= 12; ++m)
    for (int n = 0; n <= 12; ++n)
      if (n != m + 1) CHECK(std::abs(ladder.a.matrix(m, n)) <= 1e-8);

  // a_dagger is the exact adjoint of a (same sums, conjugated termwise)
  CHECK((ladder.a_dagger.matrix - ladder.a.matrix.adjoint()).max_abs() <= 1e-15);

  CHECK_THROWS_AS(ladder_from_quantization(trig_frame(interval_space(2, 16))),
                  std::invalid_argument);
}

TEST_CASE("commutator of the ladder pair is the truncated identity") {
  const TruncatedLadder ladder = ladder_from_quantization(default_fock());
  const CMatrix comm = commutator(ladder.a.matrix, ladder.a_dagger.matrix);
  for (int m = 0; m < 12; ++m)
    for (int n = 0; n < 12; ++n) {
      const double ideal = (m == n) ? 1.0 : 0.0;
      CHECK(std::abs(comm(m, n) - ideal) <= 1e-7);
    }
  CHECK(std::abs(comm(12, 12) - (-12.0)) <= 1e-5);
  CHECK(std::abs(comm(12, 12) - (-12.0)) <= 10 * std::max(ladder.quadrature_defect, 1e-9));
}

TEST_CASE("position and momentum close the canonical commutation relation") {
  const TruncatedLadder ladder = ladder_from_quantization(default_fock());
  const auto [q, p] = position_momentum(ladder);
  CHECK(q.matrix.hermitian_defect() <= 1e-12);
  CHECK(p.matrix.hermitian_defect() <= 1e-12);
  CHECK(q.hermitian);
  CHECK(p.hermitian);

  const CMatrix qp = commutator(q.matrix, p.matrix);
  for (int m = 0; m < 12; ++m)
    for (int n = 0; n < 12; ++n) {
      const cdouble ideal = (m == n) ? cdouble(0.0, 1.0) : cdouble(0.0, 0.0);
      CHECK(std::abs(qp(m, n) - ideal) <= 1e-7);
    }
  // [Q,P] = i [a, a+], so the truncation corner carries -n_max * i
  CHECK(std::abs(qp(12, 12) - cdouble(0.0, -12.0)) <= 1e-5);
}

TEST_CASE("number operator diagonal counts quanta; trace is the integer sum") {
  const TruncatedLadder ladder = ladder_from_quantization(default_fock());
  const Operator num = number_operator(ladder);
  double trace = 0.0;
  for (int n = 0; n <= 12; ++n) {
    CHECK(std::abs(num.matrix(n, n) - static_cast<double>(n)) <= 1e-6);
    trace += num.matrix(n, n).real();
  }
  CHECK(std::abs(trace - 78.0) <= 1e-6);  // 12 * 13 / 2
}

TEST_CASE("lower symbol of the lowering operator tracks z with a Poisson tail") {
  const Frame& fock = default_fock();
  const TruncatedLadder ladder = ladder_from_quantization(fock);
  const cdouble z(std::sqrt(3.0), 0.0);  // |z|^2 = 3 <= n_max / 4
  const cdouble sym = lower_symbol(fock, ladder.a, z);

  // frozen ideal-ladder value at this truncation
  CHECK(std::abs(sym - cdouble(1.7319551317280317, 0.0)) <= 1e-9);
  // inside the stated validity region the symbol approximates z itself...
  CHECK(std::abs(sym - z) <= 1e-4);
  // ...but the truncation correction (9.57e-5) is genuinely present
  CHECK(std::abs(sym - z) > 5e-5);
}

TEST_CASE("commutator algebra basics") {
  const Operator s1 = sigma1(), s2 = sigma2(), s3 = sigma3();
  const CMatrix lhs = commutator(s1.matrix, s2.matrix);
  const CMatrix rhs = cdouble(0.0, 2.0) * s3.matrix;
  CHECK((lhs - rhs).max_abs() <= 1e-15);

  CHECK(commutator(s1.matrix, s1.matrix).max_abs() == 0.0);

  CMatrix wrong(3, 3);
  CHECK_THROWS_AS(commutator(s1.matrix, wrong), std::invalid_argument);
}

TEST_CASE("degenerate truncation: n_max = 0 is trivially consistent") {
  const Frame frame = fock_frame(plane_space(9.0, 200, 32), 0);
  const TruncatedLadder ladder = ladder_from_quantization(frame);
  CHECK(ladder.a.matrix.rows() == 1);
  CHECK(std::abs(ladder.a.matrix(0, 0)) <= 1e-10);
  CHECK(ladder.quadrature_defect <= 1e-10);
  const auto [q, p] = position_momentum(ladder);
  const CMatrix qp = commutator(q.matrix, p.matrix);
  CHECK(std::abs(qp(0, 0)) <= 1e-10);  // 1x1 commutators vanish
}
