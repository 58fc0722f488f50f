#include <doctest.h>

#include <cmath>
#include <complex>
#include <variant>

#include "csq/measure_space.hpp"
#include "csq/rng.hpp"

using namespace csq;

namespace {

// numpy.polynomial.legendre.leggauss reference values
constexpr double kGl5Nodes[5] = {-0.906179845938664, -0.5384693101056831, 0.0,
                                 0.5384693101056831, 0.906179845938664};
constexpr double kGl5Weights[5] = {0.23692688505618942, 0.4786286704993662,
                                   0.568888888888889, 0.4786286704993662,
                                   0.23692688505618942};
constexpr double kGl16Node0 = -0.9894009349916499;
constexpr double kGl16Weight0 = 0.027152459411754037;

double real_at(const MeasureSpace& s, int i) { return std::get<double>(s.points()[i]); }

}  // namespace

TEST_CASE("Gauss-Legendre nodes and weights match the reference rule") {
  std::vector<double> x, w;
  detail::gauss_legendre(5, x, w);
  for (int i = 0; i < 5; ++i) {
    CHECK(std::abs(x[i] - kGl5Nodes[i]) <= 1e-15);
    CHECK(std::abs(w[i] - kGl5Weights[i]) <= 1e-15);
  }

  detail::gauss_legendre(16, x, w);
  CHECK(std::abs(x[0] - kGl16Node0) <= 1e-15);
  CHECK(std::abs(w[0] - kGl16Weight0) <= 1e-15);
  double sum = 0.0;
  for (double v : w) sum += v;
  CHECK(std::abs(sum - 2.0) <= 1e-14);
}

TEST_CASE("interval quadrature is exact on per-cell polynomials up to 2n-1") {
  const MeasureSpace s = interval_space(1, 8);  // 4 cells, degree 15 per cell
  for (int k = 0; k <= 15; ++k) {
    const cdouble v = integrate(s, [k](const Point& p) {
      return cdouble(std::pow(std::get<double>(p), k), 0.0);
    });
    CHECK(std::abs(v.real() - 1.0 / (k + 1)) <= 1e-14);
    CHECK(std::abs(v.imag()) == 0.0);
  }
}

TEST_CASE("interval space: weights sum to 1, nodes avoid breakpoints") {
  const MeasureSpace s = interval_space(3, 4);
  CHECK(s.size() == 16 * 4);
  CHECK(s.dyadic_level() == 4);
  CHECK(std::abs(s.total_weight() - 1.0) <= 1e-12);
  const int cells = 1 << s.dyadic_level();
  for (int i = 0; i < s.size(); ++i) {
    const double x = real_at(s, i);
    CHECK(s.weights()[i] > 0.0);
    const double scaled = x * cells;
    CHECK(std::abs(scaled - std::round(scaled)) > 1e-6);  // never at k/2^level
  }
  CHECK_THROWS_AS(interval_space(-1, 4), std::invalid_argument);
  CHECK_THROWS_AS(interval_space(2, 0), std::invalid_argument);
}

TEST_CASE("finite space validates labels and masses") {
  const MeasureSpace s = finite_space({"a", "b"}, {0.25, 1.75});
  CHECK(s.size() == 2);
  CHECK(s.exact());
  CHECK(std::abs(s.total_weight() - 2.0) <= 1e-15);
  CHECK(std::get<Atom>(s.points()[0]).name == "a");

  CHECK_THROWS_AS(finite_space({"a", "a"}, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(finite_space({"a", "b"}, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(finite_space({"a"}, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(finite_space({}, {}), std::invalid_argument);
}

TEST_CASE("plane space mass equals the Gaussian minus its tail") {
  const MeasureSpace s = plane_space(10.0, 400, 64);
  CHECK(s.size() == 400 * 64);
  CHECK_FALSE(s.exact());
  CHECK(std::abs(s.tail_bound() - std::exp(-100.0)) <= 1e-25);
  CHECK(std::abs(s.total_weight() - (1.0 - std::exp(-100.0))) <= 1e-12);
  CHECK_THROWS_AS(plane_space(-1.0, 10, 8), std::invalid_argument);
  CHECK_THROWS_AS(plane_space(1.0, 10, 2), std::invalid_argument);
}

TEST_CASE("plane space moments approach k! monotonically under refinement") {
  auto moment_err = [](double radius, int nr, int na) {
    const MeasureSpace s = plane_space(radius, nr, na);
    double worst = 0.0;
    double factorial = 1.0;
    for (int k = 0; k <= 3; ++k) {
      if (k > 0) factorial *= k;
      const cdouble v = integrate(s, [k](const Point& p) {
        return cdouble(std::pow(std::norm(std::get<cdouble>(p)), k), 0.0);
      });
      worst = std::max(worst, std::abs(v.real() - factorial));
    }
    return worst;
  };
  const double e1 = moment_err(1.5, 12, 8);
  const double e2 = moment_err(3.0, 24, 8);
  const double e3 = moment_err(6.0, 48, 8);
  CHECK(e2 <= e1);
  CHECK(e3 <= e2);
  CHECK(e3 <= 1e-10);  // measured 1.18e-11 at (6, 48, 8)
}

TEST_CASE("integrate is linear and rejects non-finite integrands") {
  const MeasureSpace s = interval_space(2, 6);
  Rng rng(11);
  std::vector<cdouble> f(s.size()), g(s.size());
  double fmax = 0.0, gmax = 0.0;
  for (int i = 0; i < s.size(); ++i) {
    f[i] = cdouble(rng.uniform() - 0.5, rng.uniform());
    g[i] = cdouble(rng.uniform(), -rng.uniform());
    fmax = std::max(fmax, std::abs(f[i]));
    gmax = std::max(gmax, std::abs(g[i]));
  }
  const cdouble a(1.7, -0.3), b(-0.9, 0.4);
  std::vector<cdouble> combo(s.size());
  for (int i = 0; i < s.size(); ++i) combo[i] = a * f[i] + b * g[i];
  const cdouble lhs = integrate(s, combo);
  const cdouble rhs = a * integrate(s, f) + b * integrate(s, g);
  CHECK(std::abs(lhs - rhs) <= 1e-13 * (std::abs(a) * fmax + std::abs(b) * gmax));

  f[3] = cdouble(std::nan(""), 0.0);
  CHECK_THROWS_AS(integrate(s, f), std::domain_error);
  std::vector<cdouble> short_vec(3);
  CHECK_THROWS_AS(integrate(s, short_vec), std::invalid_argument);
}

TEST_CASE("space_from_parts validates and point_to_string names each kind") {
  const MeasureSpace s =
      space_from_parts(SpaceKind::FiniteSet, {Atom{"q", 0.5}}, {2.0}, true, 0.0);
  CHECK(s.size() == 1);
  CHECK(point_to_string(s.points()[0]) == "atom 'q'");
  CHECK(point_to_string(Point(0.25)) == "x = 0.25");
  CHECK_THROWS_AS(
      space_from_parts(SpaceKind::FiniteSet, {Atom{"q", {}}}, {-1.0}, true, 0.0),
      std::invalid_argument);
  CHECK_THROWS_AS(space_from_parts(SpaceKind::FiniteSet, {}, {}, true, 0.0),
                  std::invalid_argument);
}

TEST_CASE("deterministic generator reproduces its stream and has sane moments") {
  Rng a(99), b(99), c(100);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 64; ++i) {
    const double x = a.uniform(), y = b.uniform(), z = c.uniform();
    all_equal = all_equal && (x == y);
    any_diff = any_diff || (x != z);
    CHECK(x > 0.0);
    CHECK(x <= 1.0);
  }
  CHECK(all_equal);
  CHECK(any_diff);

  Rng g(7);
  double mean = 0.0, var = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double v = g.gaussian();
    mean += v;
    var += v * v;
  }
  mean /= n;
  var = var / n - mean * mean;
  CHECK(std::abs(mean) < 0.03);
  CHECK(std::abs(var - 1.0) < 0.05);
}
