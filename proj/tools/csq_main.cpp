#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "csq/canonical.hpp"
#include "csq/coherent.hpp"
#include "csq/frames.hpp"
#include "csq/quantize.hpp"
#include "csq/serialize.hpp"
#include "csq/verification.hpp"

namespace {

using csq::cdouble;

double parse_double(const std::string& tok) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + tok + "'");
  }
  while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
  if (used != tok.size()) throw std::invalid_argument("not a number: '" + tok + "'");
  return v;
}

// Comma-separated entries, each "re" or "re:im".
std::vector<cdouble> parse_complex_list(const std::string& text) {
  std::vector<cdouble> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) {
      out.emplace_back(parse_double(tok), 0.0);
    } else {
      out.emplace_back(parse_double(tok.substr(0, colon)),
                       parse_double(tok.substr(colon + 1)));
    }
  }
  if (out.empty()) throw std::invalid_argument("empty vector list");
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_double(tok));
  if (out.empty()) throw std::invalid_argument("empty value list");
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output path: " + out_path);
  f << text;
  f.flush();
  if (!f) throw std::runtime_error("failed while writing: " + out_path);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

csq::Observable coordinate_observable(const csq::MeasureSpace& space) {
  return csq::Observable::from_function(
      space, [](const csq::Point& p) { return std::get<double>(p); });
}

int cmd_verify(std::uint64_t seed, std::optional<double> tol, const std::string& out) {
  const csq::VerifyReport report = csq::run_verification(seed, tol);
  const std::string text = csq::format_report(report, seed);
  std::cout << text;
  if (!out.empty()) emit(text, out);
  return report.all_pass ? 0 : 1;
}

int cmd_finite(int n, std::uint64_t seed, const std::string& alpha_str,
               const std::string& beta_str, const std::string& f_str,
               const std::string& out) {
  csq::VectorPair pair;
  if (!alpha_str.empty() || !beta_str.empty()) {
    if (alpha_str.empty() || beta_str.empty())
      throw std::invalid_argument("--alpha and --beta must be given together");
    pair.alpha = parse_complex_list(alpha_str);
    pair.beta = parse_complex_list(beta_str);
    csq::validate_pair(pair);
    n = pair.size();
  } else {
    if (n < 2) throw std::invalid_argument("--n must be >= 2");
    pair = csq::random_pair(n, seed);
  }

  std::vector<double> fv;
  if (f_str.empty()) {
    for (int i = 0; i < n; ++i) fv.push_back(i + 1.0);
  } else {
    fv = parse_real_list(f_str);
    if (static_cast<int>(fv.size()) != n)
      throw std::invalid_argument("--f must list one value per atom");
  }

  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  const csq::MeasureSpace space = csq::finite_space(labels, std::vector<double>(n, 1.0));
  const csq::Frame frame = csq::frame_from_pair(space, pair);

  const csq::Observable f = csq::Observable::from_real(fv);
  const csq::Operator af = csq::quantize(frame, f);
  const csq::PairAverages av = csq::averages(pair, f);
  const auto [lo, hi] = csq::spectrum2(af);
  const csq::RMatrix tm = csq::transition_matrix(frame);
  const csq::CoefficientMatrix cm = csq::coefficient_matrix(pair);

  nlohmann::json j;
  j["n"] = n;
  j["alpha"] = csq::json_complex_vector(pair.alpha);
  j["beta"] = csq::json_complex_vector(pair.beta);
  j["observable"] = csq::json_real_vector(fv);
  j["operator"] = csq::json_matrix(af.matrix);
  j["averages"] = {{"plus", csq::json_real(av.plus)},
                   {"minus", csq::json_real(av.minus)},
                   {"offdiag", csq::json_complex(av.offdiag)}};
  j["pauli_coefficients"] = {{"sigma0", csq::json_real(av.plus)},
                             {"sigma1", csq::json_real(av.offdiag.real())},
                             {"sigma2", csq::json_real(-av.offdiag.imag())},
                             {"sigma3", csq::json_real(av.minus)}};

  std::vector<double> probabilities, lower;
  for (int l = 0; l < n; ++l) {
    probabilities.push_back(0.5 * (std::norm(pair.alpha[l]) + std::norm(pair.beta[l])));
    lower.push_back(csq::lower_symbol(frame, af, frame.atom_point(l)).real());
  }
  j["probabilities"] = csq::json_real_vector(probabilities);
  j["spectrum"] = {csq::json_real(lo), csq::json_real(hi)};
  j["transition_matrix"] = csq::json_rmatrix(tm);
  j["lower_symbols"] = csq::json_real_vector(lower);

  nlohmann::json pls = nlohmann::json::array();
  for (int l = 0; l < n; ++l)
    pls.push_back(csq::json_real_vector(csq::pauli_lower_symbols(pair, l)));
  j["pauli_lower_symbols"] = pls;

  j["coefficient_matrix"] = {
      {"entries", csq::json_rmatrix(cm.entries)},
      {"singular_values", csq::json_real_vector(cm.singular_values)},
      {"rank", cm.rank}};

  if (cm.rank == 4) {
    const csq::Operator sigmas[4] = {csq::sigma0(), csq::sigma1(), csq::sigma2(),
                                     csq::sigma3()};
    nlohmann::json upper;
    for (int k = 0; k < 4; ++k) {
      const csq::Observable u = csq::upper_symbol_solve(pair, sigmas[k]);
      std::vector<double> uv;
      for (const cdouble& z : u.values) uv.push_back(z.real());
      upper["sigma" + std::to_string(k)] = csq::json_real_vector(uv);
    }
    j["upper_symbols"] = std::move(upper);
  }

  emit(dump(j), out);
  return 0;
}

int cmd_haar(int scale_J, double p, std::vector<double> x0s, int nodes,
             const std::string& format, const std::string& out) {
  if (scale_J < 0) throw std::invalid_argument("--scale-J must be >= 0");
  if (scale_J > 6) throw std::invalid_argument("--scale-J above 6 is not supported");
  if (!(p > -1.0)) throw std::invalid_argument("--p must be > -1");
  if (nodes < 2) throw std::invalid_argument("--nodes must be >= 2");

  const bool integer_p =
      std::abs(p - std::round(p)) == 0.0 && std::round(p) <= 2.0 * nodes - 1;
  int level_J = scale_J;
  if (!integer_p) {
    // non-polynomial powers converge with the partition; refine it
    if (scale_J > 4)
      throw std::invalid_argument("non-integer --p is supported for --scale-J <= 4");
    level_J = std::max(scale_J, 13);
  }

  const csq::MeasureSpace space = csq::interval_space(level_J, nodes);
  const csq::Frame frame = csq::haar_frame(space, scale_J);

  const csq::Observable xp = csq::Observable::from_function(
      space, [p](const csq::Point& pt) { return std::pow(std::get<double>(pt), p); });
  const csq::Operator a = csq::quantize(frame, xp);
  const csq::Operator ax = (p == 1.0) ? a : csq::quantize(frame, coordinate_observable(space));

  const int depth = scale_J + 1;
  const int cells = 1 << depth;
  std::vector<double> step_left(cells), step_value(cells);
  for (int k = 0; k < cells; ++k) {
    step_left[k] = static_cast<double>(k) / cells;
    step_value[k] = csq::lower_symbol(frame, ax, (k + 0.5) / cells).real();
  }

  if (format == "csv") {
    std::ostringstream csv;
    std::vector<double> mids(cells);
    for (int k = 0; k < cells; ++k) mids[k] = (k + 0.5) / cells;
    csq::write_csv_curve(csv, mids, step_value);
    emit(csv.str(), out);
    return 0;
  }

  nlohmann::json j;
  j["scale_J"] = scale_J;
  j["p"] = csq::json_real(p);
  j["nodes_per_cell"] = nodes;
  j["dyadic_level"] = space.dyadic_level();
  j["operator"] = csq::json_matrix(a.matrix);
  j["spectrum"] = csq::json_real_vector(csq::spectrum(a));

  if (scale_J == 0) {
    const double diag = 1.0 / (p + 1.0);
    const double off = (std::pow(2.0, -p) - 1.0) / (p + 1.0);
    const double dev = std::max(
        {std::abs(a.matrix(0, 0) - diag), std::abs(a.matrix(1, 1) - diag),
         std::abs(a.matrix(0, 1) - off), std::abs(a.matrix(1, 0) - off)});
    j["closed_form"] = {
        {"matrix",
         nlohmann::json::array(
             {nlohmann::json::array({csq::json_real(diag), csq::json_real(off)}),
              nlohmann::json::array({csq::json_real(off), csq::json_real(diag)})})},
        {"max_deviation", csq::json_real(dev)}};
  }

  nlohmann::json syms = nlohmann::json::array();
  for (double x0 : x0s)
    syms.push_back({{"x0", csq::json_real(x0)},
                    {"value", csq::json_real(csq::lower_symbol(frame, a, x0).real())}});
  j["lower_symbols"] = std::move(syms);

  nlohmann::json step = nlohmann::json::array();
  for (int k = 0; k < cells; ++k)
    step.push_back({{"left", csq::json_real(step_left[k])},
                    {"right", csq::json_real(step_left[k] + 1.0 / cells)},
                    {"value", csq::json_real(step_value[k])}});
  j["step_function"] = std::move(step);
  if (p != 1.0) j["position_spectrum"] = csq::json_real_vector(csq::spectrum(ax));

  emit(dump(j), out);
  return 0;
}

int cmd_trig(int samples, const std::string& format, const std::string& out) {
  if (samples < 2) throw std::invalid_argument("--samples must be >= 2");

  const csq::MeasureSpace space = csq::interval_space(2, 16);
  const csq::Frame frame = csq::trig_frame(space);
  const csq::Operator ax = csq::quantize(frame, coordinate_observable(space));
  const auto [lo, hi] = csq::spectrum2(ax);

  std::vector<double> xs(samples), vals(samples);
  for (int i = 0; i < samples; ++i) {
    xs[i] = static_cast<double>(i) / (samples - 1);
    vals[i] = csq::lower_symbol(frame, ax, xs[i]).real();
  }

  std::ostringstream summary;
  summary << "A_x = [[" << csq::format_real(ax.matrix(0, 0).real()) << ", "
          << csq::format_real(ax.matrix(0, 1).real()) << "], ["
          << csq::format_real(ax.matrix(1, 0).real()) << ", "
          << csq::format_real(ax.matrix(1, 1).real()) << "]]\n"
          << "eigenvalues = " << csq::format_real(lo) << ", " << csq::format_real(hi)
          << "\n";

  if (format == "json") {
    nlohmann::json j;
    j["operator"] = csq::json_matrix(ax.matrix);
    j["eigenvalues"] = {csq::json_real(lo), csq::json_real(hi)};
    nlohmann::json curve = nlohmann::json::array();
    for (int i = 0; i < samples; ++i)
      curve.push_back({csq::json_real(xs[i]), csq::json_real(vals[i])});
    j["curve"] = std::move(curve);
    emit(dump(j), out);
    return 0;
  }

  std::ostringstream csv;
  csq::write_csv_curve(csv, xs, vals);
  if (out.empty()) {
    std::cout << csv.str();
    std::cerr << summary.str();
  } else {
    emit(csv.str(), out);
    std::cout << summary.str();
  }
  return 0;
}

int cmd_fock(int n_max, double radius, int radial_nodes, const std::string& out) {
  if (n_max < 0 || n_max > 60)
    throw std::invalid_argument("--nmax must be between 0 and 60");
  if (!(radius > 0.0)) throw std::invalid_argument("--radius must be positive");
  if (radial_nodes < 8) throw std::invalid_argument("--nodes must be >= 8");
  const int angular = std::max(64, 2 * n_max + 4);

  const csq::MeasureSpace space = csq::plane_space(radius, radial_nodes, angular);
  const csq::Frame frame = csq::fock_frame(space, n_max);
  const csq::TruncatedLadder ladder = csq::ladder_from_quantization(frame);

  std::vector<double> superdiag;
  double super_dev = 0.0;
  for (int n = 0; n < n_max; ++n) {
    superdiag.push_back(ladder.a.matrix(n, n + 1).real());
    super_dev = std::max(super_dev,
                         std::abs(ladder.a.matrix(n, n + 1) - std::sqrt(n + 1.0)));
  }

  const csq::CMatrix comm = csq::commutator(ladder.a.matrix, ladder.a_dagger.matrix);
  double trunc_dev = 0.0;
  for (int m = 0; m <= n_max; ++m)
    for (int n = 0; n <= n_max; ++n) {
      const double ideal = (m == n) ? (m == n_max ? -static_cast<double>(n_max) : 1.0) : 0.0;
      trunc_dev = std::max(trunc_dev, std::abs(comm(m, n) - ideal));
    }

  const auto [q, pop] = csq::position_momentum(ladder);
  const csq::CMatrix qp = csq::commutator(q.matrix, pop.matrix);
  double qp_dev = 0.0;
  for (int m = 0; m < n_max; ++m)
    for (int n = 0; n < n_max; ++n) {
      const cdouble ideal = (m == n) ? cdouble(0.0, 1.0) : cdouble(0.0, 0.0);
      qp_dev = std::max(qp_dev, std::abs(qp(m, n) - ideal));
    }

  const csq::Operator num = csq::number_operator(ladder);
  std::vector<double> num_diag;
  for (int n = 0; n <= n_max; ++n) num_diag.push_back(num.matrix(n, n).real());

  nlohmann::json j;
  j["n_max"] = n_max;
  j["radius"] = csq::json_real(radius);
  j["radial_nodes"] = radial_nodes;
  j["angular_nodes"] = angular;
  j["gram_defect"] = csq::json_real(frame.gram_defect());
  j["resolution_defect"] = csq::json_real(csq::resolution_defect(frame));
  j["quadrature_defect"] = csq::json_real(ladder.quadrature_defect);
  j["superdiagonal"] = csq::json_real_vector(superdiag);
  j["superdiagonal_defect"] = csq::json_real(super_dev);
  j["ladder_truncation_defect"] = csq::json_real(trunc_dev);
  j["qp_interior_defect"] = csq::json_real(qp_dev);
  j["number_diagonal"] = csq::json_real_vector(num_diag);

  emit(dump(j), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherent-state quantization toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string out, format = "json";
  int n = 4, scale_J = 0, nodes = 16, samples = 1001, n_max = 12;
  double p = 1.0, radius = 10.0;
  int radial_nodes = 400;
  std::string alpha_str, beta_str, f_str;
  std::vector<double> x0s = {0.1, 0.3, 0.7, 0.9};

  CLI::App* verify = app.add_subcommand("verify", "run the cross-module invariant suite");
  verify->add_option("--seed", seed, "seed for the generated test inputs");
  verify->add_option("--tol", tol, "override every per-check tolerance");
  verify->add_option("--out", out, "also write the report to this path");

  CLI::App* finite =
      app.add_subcommand("finite", "two-state quantization on a finite set of atoms");
  finite->add_option("--n", n, "number of atoms (>= 2)");
  finite->add_option("--seed", seed, "seed for the generated orthonormal pair");
  finite->add_option("--alpha", alpha_str, "explicit alpha entries, 're' or 're:im', comma separated");
  finite->add_option("--beta", beta_str, "explicit beta entries, matching --alpha");
  finite->add_option("--f", f_str, "observable values, one per atom (default 1..n)");
  finite->add_option("--out", out, "write the JSON report here instead of stdout");

  CLI::App* haar =
      app.add_subcommand("haar", "dyadic position quantization on [0,1]");
  haar->add_option("--scale-J", scale_J, "deepest wavelet scale (0..6)");
  haar->add_option("--p", p, "power in the observable x^p (> -1)");
  haar->add_option("--x0", x0s, "points for lower symbols")->delimiter(',');
  haar->add_option("--nodes", nodes, "quadrature nodes per dyadic cell");
  haar->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  haar->add_option("--out", out, "write the report here instead of stdout");

  CLI::App* trig = app.add_subcommand("trig", "two-component trigonometric family on [0,1]");
  trig->add_option("--samples", samples, "rows in the lower-symbol curve (>= 2)");
  trig->add_option("--format", format, "csv (default) or json")
      ->check(CLI::IsMember({"json", "csv"}));
  trig->add_option("--out", out, "write the curve here; summary then goes to stdout");

  CLI::App* fock = app.add_subcommand("fock", "truncated Fock-Bargmann ladder on the disk");
  fock->add_option("--nmax", n_max, "truncation degree (0..60)");
  fock->add_option("--radius", radius, "disk radius");
  fock->add_option("--nodes", radial_nodes, "radial quadrature nodes");
  fock->add_option("--out", out, "write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(seed, tol, out);
    if (finite->parsed()) return cmd_finite(n, seed, alpha_str, beta_str, f_str, out);
    if (haar->parsed()) return cmd_haar(scale_J, p, x0s, nodes, format, out);
    if (trig->parsed())
      return cmd_trig(samples, trig->count("--format") ? format : "csv", out);
    if (fock->parsed()) return cmd_fock(n_max, radius, radial_nodes, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
