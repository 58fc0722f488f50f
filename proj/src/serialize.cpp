#include "csq/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <variant>

namespace csq {

double round_significant(double v, int digits) {
  if (!std::isfinite(v)) throw std::domain_error("non-finite value in output");
  if (v == 0.0) return 0.0;  // normalizes -0 as well
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
  return std::strtod(buf, nullptr);
}

nlohmann::json json_real(double v) { return round_significant(v); }

nlohmann::json json_complex(cdouble z) {
  return nlohmann::json::array({round_significant(z.real()), round_significant(z.imag())});
}

nlohmann::json json_matrix(const CMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(json_complex(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json json_rmatrix(const RMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(json_real(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json json_real_vector(const std::vector<double>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (double x : v) a.push_back(json_real(x));
  return a;
}

nlohmann::json json_complex_vector(const std::vector<cdouble>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const cdouble& z : v) a.push_back(json_complex(z));
  return a;
}

std::string format_real(double v) {
  if (!std::isfinite(v)) throw std::domain_error("non-finite value in output");
  if (v == 0.0) v = 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw std::domain_error(std::string("non-finite ") + what);
  return v;
}

nlohmann::json point_to_json(const Point& x) {
  nlohmann::json j;
  if (const Atom* a = std::get_if<Atom>(&x)) {
    j["atom"] = a->name;
    if (a->coord) j["coord"] = checked(*a->coord, "atom coordinate");
  } else if (const double* v = std::get_if<double>(&x)) {
    j["real"] = checked(*v, "point");
  } else {
    const cdouble z = std::get<cdouble>(x);
    j["complex"] = {checked(z.real(), "point"), checked(z.imag(), "point")};
  }
  return j;
}

Point point_from_json(const nlohmann::json& j) {
  if (j.contains("atom")) {
    Atom a;
    a.name = j.at("atom").get<std::string>();
    if (j.contains("coord")) a.coord = j.at("coord").get<double>();
    return a;
  }
  if (j.contains("real")) return j.at("real").get<double>();
  if (j.contains("complex")) {
    const auto& z = j.at("complex");
    return cdouble(z.at(0).get<double>(), z.at(1).get<double>());
  }
  throw std::invalid_argument("point JSON must hold one of atom/real/complex");
}

std::string kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::FiniteSet: return "finite_set";
    case SpaceKind::Interval: return "interval";
    case SpaceKind::ComplexPlane: return "complex_plane";
  }
  throw std::logic_error("unreachable space kind");
}

SpaceKind kind_from_name(const std::string& s) {
  if (s == "finite_set") return SpaceKind::FiniteSet;
  if (s == "interval") return SpaceKind::Interval;
  if (s == "complex_plane") return SpaceKind::ComplexPlane;
  throw std::invalid_argument("unknown space kind: " + s);
}

}  // namespace

// Space and frame serialization keeps full-precision doubles so a round
// trip is bit-exact (report rounding applies only to json_* helpers).
nlohmann::json to_json(const MeasureSpace& space) {
  nlohmann::json j;
  j["kind"] = kind_name(space.kind());
  j["exact"] = space.exact();
  j["tail_bound"] = checked(space.tail_bound(), "tail bound");
  nlohmann::json pts = nlohmann::json::array();
  for (const Point& x : space.points()) pts.push_back(point_to_json(x));
  j["points"] = std::move(pts);
  nlohmann::json ws = nlohmann::json::array();
  for (double w : space.weights()) ws.push_back(checked(w, "weight"));
  j["weights"] = std::move(ws);
  return j;
}

MeasureSpace space_from_json(const nlohmann::json& j) {
  const SpaceKind kind = kind_from_name(j.at("kind").get<std::string>());
  std::vector<Point> points;
  for (const auto& p : j.at("points")) points.push_back(point_from_json(p));
  std::vector<double> weights = j.at("weights").get<std::vector<double>>();
  return space_from_parts(kind, std::move(points), std::move(weights),
                          j.at("exact").get<bool>(), j.at("tail_bound").get<double>());
}

nlohmann::json to_json(const Frame& frame) {
  nlohmann::json j;
  j["space"] = to_json(frame.space());
  j["n_basis"] = frame.n_basis();
  j["labels"] = frame.labels();
  nlohmann::json vals = nlohmann::json::array();
  for (const cdouble& z : frame.values())
    vals.push_back({checked(z.real(), "frame value"), checked(z.imag(), "frame value")});
  j["values"] = std::move(vals);
  return j;
}

Frame frame_from_json(const nlohmann::json& j) {
  MeasureSpace space = space_from_json(j.at("space"));
  const int n_basis = j.at("n_basis").get<int>();
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  std::vector<cdouble> values;
  for (const auto& v : j.at("values"))
    values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
  return frame_from_parts(std::move(space), n_basis, std::move(values), std::move(labels));
}

void write_csv_curve(std::ostream& out, const std::vector<double>& x0,
                     const std::vector<double>& values) {
  if (x0.size() != values.size())
    throw std::invalid_argument("write_csv_curve: column lengths differ");
  out << "x0,lower_symbol\n";
  for (std::size_t i = 0; i < x0.size(); ++i)
    out << format_real(x0[i]) << ',' << format_real(values[i]) << '\n';
}

}  // namespace csq
