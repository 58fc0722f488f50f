#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace csq {

using cdouble = std::complex<double>;

struct Atom {
  std::string name;
  std::optional<double> coord;
};

// A point of the carrier set: an atom of a finite set, a real number in
// [0,1], or a complex number.
using Point = std::variant<Atom, double, cdouble>;

std::string point_to_string(const Point& x);

enum class SpaceKind { FiniteSet, Interval, ComplexPlane };

// A measure together with a fixed quadrature realization: points x_i and
// strictly positive weights w_i, summed in index order.  FiniteSet is the
// measure itself (Dirac masses); Interval discretizes Lebesgue measure on
// [0,1] by per-cell Gauss-Legendre on a dyadic partition; ComplexPlane
// discretizes the Gaussian measure e^{-|z|^2}/pi on a disk |z| <= radius.
class MeasureSpace {
 public:
  MeasureSpace() = default;  // empty space; real construction via the factories

  SpaceKind kind() const { return kind_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }

  // True when the quadrature integrates the intended function class
  // exactly (finite sets always; interval rules on per-cell polynomials).
  bool exact() const { return exact_; }
  // ComplexPlane: Gaussian mass outside the disk, e^{-radius^2}.
  double tail_bound() const { return tail_bound_; }

  // Interval parameters: breakpoints at k / 2^dyadic_level.
  int dyadic_level() const { return dyadic_level_; }
  int nodes_per_cell() const { return nodes_per_cell_; }

  // ComplexPlane parameters.
  double radius() const { return radius_; }
  int radial_nodes() const { return radial_nodes_; }
  int angular_nodes() const { return angular_nodes_; }

  double total_weight() const;

  friend MeasureSpace finite_space(std::vector<std::string> labels,
                                   std::vector<double> masses,
                                   std::vector<double> coords);
  friend MeasureSpace interval_space(int scale_J, int nodes_per_cell);
  friend MeasureSpace plane_space(double radius, int radial_nodes, int angular_nodes);
  friend MeasureSpace space_from_parts(SpaceKind kind, std::vector<Point> points,
                                       std::vector<double> weights, bool exact,
                                       double tail_bound);

 private:
  SpaceKind kind_ = SpaceKind::FiniteSet;
  std::vector<Point> points_;
  std::vector<double> weights_;
  bool exact_ = true;
  double tail_bound_ = 0.0;
  int dyadic_level_ = 0;
  int nodes_per_cell_ = 0;
  double radius_ = 0.0;
  int radial_nodes_ = 0;
  int angular_nodes_ = 0;
};

// Finite set of labeled atoms with Dirac masses a_i > 0.  Labels must be
// distinct; coords, when nonempty, attaches a real coordinate per atom.
MeasureSpace finite_space(std::vector<std::string> labels, std::vector<double> masses,
                          std::vector<double> coords = {});

// [0,1] with Lebesgue measure: 2^(scale_J+1) dyadic cells, nodes_per_cell
// Gauss-Legendre nodes per cell.  Nodes never hit a breakpoint; weights
// sum to 1 to rounding; exact for per-cell polynomials of degree
// <= 2*nodes_per_cell - 1.
MeasureSpace interval_space(int scale_J, int nodes_per_cell);

// Disk |z| <= radius with measure e^{-|z|^2} d^2z / pi, realized as a
// polar grid: uniform angles (trapezoid, exact up to angular aliasing)
// and Gauss-Legendre in u = r^2.  Weights sum to 1 - e^{-radius^2} up to
// quadrature error.
MeasureSpace plane_space(double radius = 10.0, int radial_nodes = 400,
                         int angular_nodes = 64);

// Rebuild a space from serialized parts (point evaluation beyond the
// stored nodes is not available on such spaces).
MeasureSpace space_from_parts(SpaceKind kind, std::vector<Point> points,
                              std::vector<double> weights, bool exact,
                              double tail_bound);

// Kahan-compensated quadrature sum over the space's fixed point order.
// values must enumerate f(x_i) in that order and be finite everywhere.
cdouble integrate(const MeasureSpace& space, const std::vector<cdouble>& values);
cdouble integrate(const MeasureSpace& space,
                  const std::function<cdouble(const Point&)>& f);

namespace detail {
// Gauss-Legendre rule on (-1,1), Newton on the Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);
}  // namespace detail

}  // namespace csq
