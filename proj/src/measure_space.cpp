#include "csq/measure_space.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "csq/kahan.hpp"

namespace csq {

std::string point_to_string(const Point& x) {
  std::ostringstream os;
  if (const auto* atom = std::get_if<Atom>(&x)) {
    os << "atom '" << atom->name << "'";
  } else if (const auto* t = std::get_if<double>(&x)) {
    os << "x = " << *t;
  } else {
    const cdouble z = std::get<cdouble>(x);
    os << "z = " << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  }
  return os.str();
}

double MeasureSpace::total_weight() const {
  KahanSum s;
  for (double w : weights_) s.add(w);
  return s.value();
}

MeasureSpace finite_space(std::vector<std::string> labels, std::vector<double> masses,
                          std::vector<double> coords) {
  const std::size_t n = labels.size();
  if (n == 0) throw std::invalid_argument("finite_space: empty set");
  if (masses.size() != n) throw std::invalid_argument("finite_space: labels/masses length mismatch");
  if (!coords.empty() && coords.size() != n)
    throw std::invalid_argument("finite_space: coords length mismatch");

  std::set<std::string> seen;
  for (const std::string& l : labels)
    if (!seen.insert(l).second) throw std::invalid_argument("finite_space: duplicate label '" + l + "'");
  for (double a : masses)
    if (!(a > 0.0) || !std::isfinite(a))
      throw std::invalid_argument("finite_space: masses must be positive and finite");

  MeasureSpace sp;
  sp.kind_ = SpaceKind::FiniteSet;
  sp.exact_ = true;
  sp.points_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Atom a{labels[i], std::nullopt};
    if (!coords.empty()) a.coord = coords[i];
    sp.points_.emplace_back(std::move(a));
  }
  sp.weights_ = std::move(masses);
  return sp;
}

namespace detail {

// Newton iteration on the three-term recurrence; nodes symmetric about 0.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // polish once more for the weight formula
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[n - 1 - i] = weights[i];
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

}  // namespace detail

MeasureSpace interval_space(int scale_J, int nodes_per_cell) {
  if (scale_J < 0) throw std::invalid_argument("interval_space: scale_J must be >= 0");
  if (scale_J > 24) throw std::invalid_argument("interval_space: scale_J too deep");
  if (nodes_per_cell < 1) throw std::invalid_argument("interval_space: need nodes_per_cell >= 1");

  const int level = scale_J + 1;
  const int cells = 1 << level;
  std::vector<double> xi, wi;
  detail::gauss_legendre(nodes_per_cell, xi, wi);

  MeasureSpace sp;
  sp.kind_ = SpaceKind::Interval;
  sp.exact_ = true;
  sp.dyadic_level_ = level;
  sp.nodes_per_cell_ = nodes_per_cell;
  sp.points_.reserve(static_cast<std::size_t>(cells) * nodes_per_cell);
  sp.weights_.reserve(static_cast<std::size_t>(cells) * nodes_per_cell);
  const double h = 1.0 / cells;
  for (int c = 0; c < cells; ++c) {
    const double mid = (c + 0.5) * h;
    for (int i = 0; i < nodes_per_cell; ++i) {
      sp.points_.emplace_back(mid + 0.5 * h * xi[i]);
      sp.weights_.push_back(0.5 * h * wi[i]);
    }
  }
  return sp;
}

MeasureSpace plane_space(double radius, int radial_nodes, int angular_nodes) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("plane_space: radius must be positive");
  if (radial_nodes < 1) throw std::invalid_argument("plane_space: need radial_nodes >= 1");
  if (angular_nodes < 4) throw std::invalid_argument("plane_space: need angular_nodes >= 4");

  // Gaussian measure in polar form, substituting u = r^2:
  //   (1/pi) int e^{-r^2} g r dr dtheta = (1/(2 pi)) int_0^{R^2} int_0^{2pi} e^{-u} g du dtheta
  std::vector<double> xi, wi;
  detail::gauss_legendre(radial_nodes, xi, wi);

  MeasureSpace sp;
  sp.kind_ = SpaceKind::ComplexPlane;
  sp.exact_ = false;
  sp.radius_ = radius;
  sp.radial_nodes_ = radial_nodes;
  sp.angular_nodes_ = angular_nodes;
  sp.tail_bound_ = std::exp(-radius * radius);
  sp.points_.reserve(static_cast<std::size_t>(radial_nodes) * angular_nodes);
  sp.weights_.reserve(static_cast<std::size_t>(radial_nodes) * angular_nodes);

  const double usup = radius * radius;
  for (int i = 0; i < radial_nodes; ++i) {
    const double u = 0.5 * usup * (1.0 + xi[i]);
    const double r = std::sqrt(u);
    const double wr = 0.5 * usup * wi[i] * std::exp(-u) / angular_nodes;
    for (int j = 0; j < angular_nodes; ++j) {
      const double theta = 2.0 * M_PI * j / angular_nodes;
      sp.points_.emplace_back(cdouble(r * std::cos(theta), r * std::sin(theta)));
      sp.weights_.push_back(wr);
    }
  }
  return sp;
}

MeasureSpace space_from_parts(SpaceKind kind, std::vector<Point> points,
                              std::vector<double> weights, bool exact, double tail_bound) {
  if (points.empty()) throw std::invalid_argument("space_from_parts: no points");
  if (points.size() != weights.size())
    throw std::invalid_argument("space_from_parts: points/weights length mismatch");
  for (double w : weights)
    if (!(w > 0.0) || !std::isfinite(w))
      throw std::invalid_argument("space_from_parts: weights must be positive and finite");
  MeasureSpace sp;
  sp.kind_ = kind;
  sp.points_ = std::move(points);
  sp.weights_ = std::move(weights);
  sp.exact_ = exact;
  sp.tail_bound_ = tail_bound;
  return sp;
}

cdouble integrate(const MeasureSpace& space, const std::vector<cdouble>& values) {
  if (values.size() != space.points().size())
    throw std::invalid_argument("integrate: values length does not match the space");
  KahanComplexSum s;
  const std::vector<double>& w = space.weights();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const cdouble v = values[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::domain_error("integrate: integrand not finite at point " + std::to_string(i));
    s.add(w[i] * v);
  }
  return s.value();
}

cdouble integrate(const MeasureSpace& space, const std::function<cdouble(const Point&)>& f) {
  std::vector<cdouble> values;
  values.reserve(space.points().size());
  for (const Point& x : space.points()) values.push_back(f(x));
  return integrate(space, values);
}

}  // namespace csq
