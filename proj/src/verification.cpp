#include "csq/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <variant>

#include "csq/canonical.hpp"
#include "csq/coherent.hpp"
#include "csq/frames.hpp"
#include "csq/kahan.hpp"
#include "csq/quantize.hpp"
#include "csq/rng.hpp"
#include "csq/serialize.hpp"

namespace csq {

namespace {

struct Suite {
  std::vector<CheckResult> checks;
  std::optional<double> tol_override;

  void add(std::string name, double measured, double tolerance) {
    if (tol_override) tolerance = *tol_override;
    checks.push_back({std::move(name), measured, tolerance, measured <= tolerance});
  }
};

double max_abs_diff(const CMatrix& a, const CMatrix& b) { return (a - b).max_abs(); }

}  // namespace

VerifyReport run_verification(std::uint64_t seed, std::optional<double> tol_override) {
  Suite suite;
  suite.tol_override = tol_override;
  Rng rng(seed);

  // --- finite set, generic N = 4 pair ---------------------------------
  std::vector<double> masses(4);
  for (double& m : masses) m = 0.5 + rng.uniform();
  const MeasureSpace fin = finite_space({"x1", "x2", "x3", "x4"}, masses);
  const VectorPair pair = random_pair(4, seed + 1);
  const Frame frame = frame_from_pair(fin, pair);

  suite.add("finite_gram_defect", frame.gram_defect(), 1e-12);
  suite.add("finite_resolution_defect", resolution_defect(frame), 1e-12);

  std::vector<double> fv(4), gv(4);
  for (double& v : fv) v = -1.0 + 2.0 * rng.uniform();
  for (double& v : gv) v = -1.0 + 2.0 * rng.uniform();
  const Observable f = Observable::from_real(fv);
  const Observable g = Observable::from_real(gv);
  const Operator af = quantize(frame, f);

  {
    const RMatrix tm = transition_matrix(frame);
    double row_dev = 0.0;
    double repro_dev = 0.0;
    for (int l = 0; l < 4; ++l) {
      KahanSum row, dot;
      for (int i = 0; i < 4; ++i) {
        row.add(tm(l, i));
        dot.add(tm(l, i) * fv[i]);
      }
      row_dev = std::max(row_dev, std::abs(row.value() - 1.0));
      const cdouble sym = lower_symbol(frame, af, frame.atom_point(l));
      repro_dev = std::max(repro_dev, std::abs(sym.real() - dot.value()));
      repro_dev = std::max(repro_dev, std::abs(sym.imag()));
    }
    suite.add("transition_row_sums", row_dev, 1e-12);
    suite.add("transition_reproduces_symbols", repro_dev, 1e-12);
  }

  suite.add("pauli_reassembly",
            max_abs_diff(pauli_assemble(averages(pair, f)).matrix, af.matrix), 1e-12);

  {
    const auto [lo, hi] = spectrum2(af);
    const std::vector<double> ev = spectrum(af);
    suite.add("spectrum_closed_form",
              std::max(std::abs(lo - ev[0]), std::abs(hi - ev[1])), 1e-12);
  }

  {
    const Operator sigmas[4] = {sigma0(), sigma1(), sigma2(), sigma3()};
    double rt = 0.0;
    for (const Operator& target : sigmas) {
      const Observable u = upper_symbol_solve(pair, target);
      rt = std::max(rt, max_abs_diff(quantize(frame, u).matrix, target.matrix));
    }
    suite.add("upper_symbol_round_trip", rt, 1e-10);
  }

  suite.add("quantize_unit",
            max_abs_diff(quantize(frame, Observable::from_real({1, 1, 1, 1})).matrix,
                         CMatrix::identity(2)),
            1e-12);

  {
    const double ca = -1.0 + 2.0 * rng.uniform();
    const double cb = -1.0 + 2.0 * rng.uniform();
    std::vector<cdouble> combo(4);
    for (int i = 0; i < 4; ++i) combo[i] = ca * fv[i] + cb * gv[i];
    const CMatrix lhs = quantize(frame, Observable::from_values(combo)).matrix;
    const CMatrix rhs = ca * af.matrix + cb * quantize(frame, g).matrix;
    suite.add("quantize_linearity", max_abs_diff(lhs, rhs), 1e-12);
  }

  suite.add("quantize_hermiticity", af.matrix.hermitian_defect(), 1e-12);

  {
    const double fmin = *std::min_element(fv.begin(), fv.end());
    const double fmax = *std::max_element(fv.begin(), fv.end());
    double viol = 0.0;
    for (int l = 0; l < 4; ++l) {
      const double sym = lower_symbol(frame, af, frame.atom_point(l)).real();
      viol = std::max({viol, fmin - sym, sym - fmax});
    }
    suite.add("symbol_sandwich", viol, 1e-12);
    const auto [lo, hi] = spectrum2(af);
    suite.add("spectrum_sandwich", std::max({0.0, fmin - lo, hi - fmax}), 1e-12);
  }

  // --- Haar family on the dyadic interval -----------------------------
  {
    const MeasureSpace ispace = interval_space(3, 8);
    const Frame haar = haar_frame(ispace, 2);
    suite.add("haar_gram_defect", haar.gram_defect(), 1e-12);
    suite.add("haar_resolution_defect", resolution_defect(haar), 1e-12);

    const Observable x = Observable::from_function(
        ispace, [](const Point& p) { return std::get<double>(p); });
    const Operator ax = quantize(haar, x);
    double loc = 0.0;
    for (int k = 0; k < 8; ++k) {
      const double x0 = (k + 0.1 + 0.8 * rng.uniform()) / 8.0;
      const cdouble sym = lower_symbol(haar, ax, x0);
      loc = std::max(loc, std::abs(sym.real() - (2.0 * k + 1.0) / 16.0));
      loc = std::max(loc, std::abs(sym.imag()));
    }
    suite.add("haar_localization", loc, 1e-12);
  }

  // --- trig family -----------------------------------------------------
  const MeasureSpace tspace = interval_space(2, 16);
  const Frame trig = trig_frame(tspace);
  {
    suite.add("trig_gram_defect", trig.gram_defect(), 1e-12);

    const Observable x = Observable::from_function(
        tspace, [](const Point& p) { return std::get<double>(p); });
    const Operator ax = quantize(trig, x);
    const double c = 1.0 / (std::sqrt(2.0) * std::numbers::pi);
    const double op_dev = std::max(
        {std::abs(ax.matrix(0, 0) - 0.5), std::abs(ax.matrix(1, 1) - 0.5),
         std::abs(ax.matrix(0, 1) + c), std::abs(ax.matrix(1, 0) + c)});
    suite.add("trig_position_operator", op_dev, 1e-10);

    double curve_dev = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double x0 = i / 100.0;
      const double s = std::sin(2.0 * std::numbers::pi * x0);
      const double expected = 0.5 - (2.0 / std::numbers::pi) * s / (1.0 + 2.0 * s * s);
      curve_dev = std::max(curve_dev,
                           std::abs(lower_symbol(trig, ax, x0).real() - expected));
    }
    suite.add("trig_lower_symbol_curve", curve_dev, 1e-10);
  }

  // --- kernel and coherent-state identities on the trig frame ---------
  {
    std::vector<double> xs(6);
    for (double& v : xs) v = rng.uniform();
    double herm = 0.0, diag = 0.0, norms = 0.0;
    for (double a : xs) {
      for (double b : xs)
        herm = std::max(herm, std::abs(kernel(trig, a, b) - std::conj(kernel(trig, b, a))));
      diag = std::max(diag, std::abs(kernel(trig, a, a) - normalization(trig, a)));
      norms = std::max(norms, std::abs(overlap(trig, a, a) - 1.0));
    }
    suite.add("kernel_hermiticity", herm, 1e-12);
    suite.add("kernel_diagonal", diag, 1e-12);
    suite.add("coherent_state_norms", norms, 1e-12);
  }

  suite.add("serialization_round_trip", [&] {
    const nlohmann::json j = nlohmann::json::parse(to_json(trig).dump());
    const Frame back = frame_from_json(j);
    double dev = 0.0;
    for (std::size_t i = 0; i < trig.values().size(); ++i)
      dev = std::max(dev, std::abs(back.values()[i] - trig.values()[i]));
    for (int i = 0; i < tspace.size(); ++i)
      dev = std::max(dev, std::abs(back.space().weights()[i] - tspace.weights()[i]));
    return dev;
  }(), 1e-12);

  // --- truncated Fock-Bargmann ladder ----------------------------------
  {
    const MeasureSpace pspace = plane_space(9.0, 200, 32);
    const Frame fock = fock_frame(pspace, 6);
    suite.add("fock_gram_defect", fock.gram_defect(), 1e-8);
    suite.add("fock_resolution_defect", resolution_defect(fock), 1e-8);

    const TruncatedLadder ladder = ladder_from_quantization(fock);
    double super = 0.0;
    for (int n = 0; n < ladder.n_max; ++n)
      super = std::max(super,
                       std::abs(ladder.a.matrix(n, n + 1) - std::sqrt(n + 1.0)));
    suite.add("ladder_superdiagonal", super, 1e-8);

    const CMatrix comm = commutator(ladder.a.matrix, ladder.a_dagger.matrix);
    double tr_dev = 0.0;
    for (int m = 0; m <= ladder.n_max; ++m)
      for (int n = 0; n <= ladder.n_max; ++n) {
        const double ideal =
            (m == n) ? (m == ladder.n_max ? -double(ladder.n_max) : 1.0) : 0.0;
        tr_dev = std::max(tr_dev, std::abs(comm(m, n) - ideal));
      }
    suite.add("ladder_truncation", tr_dev, 1e-7);

    const auto [q, p] = position_momentum(ladder);
    const CMatrix qp = commutator(q.matrix, p.matrix);
    double qp_dev = 0.0;
    for (int m = 0; m < ladder.n_max; ++m)
      for (int n = 0; n < ladder.n_max; ++n) {
        const cdouble ideal = (m == n) ? cdouble(0.0, 1.0) : cdouble(0.0, 0.0);
        qp_dev = std::max(qp_dev, std::abs(qp(m, n) - ideal));
      }
    suite.add("canonical_commutator", qp_dev, 1e-7);
  }

  VerifyReport report;
  report.checks = std::move(suite.checks);
  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const CheckResult& c) { return c.pass; });
  return report;
}

std::string format_report(const VerifyReport& report, std::uint64_t seed) {
  std::ostringstream os;
  os << "invariant suite (seed " << seed << ")\n";
  char line[128];
  for (const CheckResult& c : report.checks) {
    std::snprintf(line, sizeof line, "%-32s %12.5e %10.1e  %s\n", c.name.c_str(),
                  c.measured, c.tolerance, c.pass ? "pass" : "FAIL");
    os << line;
  }
  int failed = 0;
  for (const CheckResult& c : report.checks)
    if (!c.pass) ++failed;
  if (failed == 0)
    os << "all " << report.checks.size() << " checks passed\n";
  else
    os << failed << " of " << report.checks.size() << " checks FAILED\n";
  return os.str();
}

}  // namespace csq
