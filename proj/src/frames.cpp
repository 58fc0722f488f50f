#include "csq/frames.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "csq/kahan.hpp"
#include "csq/rng.hpp"

namespace csq {

namespace {

cdouble pair_inner(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
  KahanComplexSum s;
  for (std::size_t i = 0; i < a.size(); ++i) s.add(std::conj(a[i]) * b[i]);
  return s.value();
}

double vec_norm(const std::vector<cdouble>& a) {
  KahanSum s;
  for (const cdouble& z : a) s.add(std::norm(z));
  return std::sqrt(s.value());
}

}  // namespace

void validate_pair(const VectorPair& pair, double tol) {
  if (pair.alpha.size() != pair.beta.size())
    throw std::invalid_argument("VectorPair: alpha/beta length mismatch");
  if (pair.alpha.empty()) throw std::invalid_argument("VectorPair: empty vectors");
  const double na = vec_norm(pair.alpha);
  const double nb = vec_norm(pair.beta);
  const double ip = std::abs(pair_inner(pair.alpha, pair.beta));
  if (std::abs(na - 1.0) > tol || std::abs(nb - 1.0) > tol || ip > tol) {
    std::ostringstream os;
    os << "VectorPair: invariant violated (|alpha| = " << na << ", |beta| = " << nb
       << ", |<alpha,beta>| = " << ip << ", tol = " << tol << ")";
    throw std::invalid_argument(os.str());
  }
}

bool pair_is_real(const VectorPair& pair, double tol) {
  for (const cdouble& z : pair.alpha)
    if (std::abs(z.imag()) > tol) return false;
  for (const cdouble& z : pair.beta)
    if (std::abs(z.imag()) > tol) return false;
  return true;
}

namespace {

VectorPair orthonormalize_columns(std::vector<cdouble> g0, std::vector<cdouble> g1) {
  const double n0 = vec_norm(g0);
  if (n0 < 1e-8) throw std::runtime_error("random_pair: degenerate draw");
  for (cdouble& z : g0) z /= n0;
  // modified Gram-Schmidt, applied twice for orthogonality at rounding level
  for (int pass = 0; pass < 2; ++pass) {
    const cdouble proj = pair_inner(g0, g1);
    for (std::size_t i = 0; i < g1.size(); ++i) g1[i] -= proj * g0[i];
  }
  const double n1 = vec_norm(g1);
  if (n1 < 1e-8) throw std::runtime_error("random_pair: degenerate draw");
  for (cdouble& z : g1) z /= n1;
  return VectorPair{std::move(g0), std::move(g1)};
}

}  // namespace

VectorPair random_pair(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_pair: need n >= 2");
  Rng rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<cdouble> g0(n), g1(n);
    for (int i = 0; i < n; ++i) g0[i] = rng.complex_gaussian();
    for (int i = 0; i < n; ++i) g1[i] = rng.complex_gaussian();
    try {
      return orthonormalize_columns(std::move(g0), std::move(g1));
    } catch (const std::runtime_error&) {
      continue;  // measure-zero degenerate draw; take the next block of the stream
    }
  }
  throw std::runtime_error("random_pair: repeated degenerate draws");
}

VectorPair random_real_pair(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_real_pair: need n >= 2");
  Rng rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<cdouble> g0(n), g1(n);
    for (int i = 0; i < n; ++i) g0[i] = rng.gaussian();
    for (int i = 0; i < n; ++i) g1[i] = rng.gaussian();
    try {
      return orthonormalize_columns(std::move(g0), std::move(g1));
    } catch (const std::runtime_error&) {
      continue;
    }
  }
  throw std::runtime_error("random_real_pair: repeated degenerate draws");
}

double haar_indicator(double x) { return (x < 0.0 || x > 1.0) ? 0.0 : 1.0; }

double haar_wavelet(int j, int k, double x) {
  if (j < 0 || k < 0 || k >= (1 << j)) throw std::invalid_argument("haar_wavelet: bad (j, k)");
  const double amp = std::exp2(0.5 * j);
  if (x == 1.0) return k == (1 << j) - 1 ? -amp : 0.0;
  const double t = std::ldexp(x, j) - k;
  if (t < 0.0 || t >= 1.0) return 0.0;
  return t < 0.5 ? amp : -amp;
}

CMatrix Frame::gram() const {
  const int nb = n_basis_;
  const int np = space_.size();
  const std::vector<double>& w = space_.weights();
  CMatrix g(nb, nb);
  for (int m = 0; m < nb; ++m) {
    for (int n = 0; n < nb; ++n) {
      KahanComplexSum s;
      const cdouble* rm = values_.data() + static_cast<std::size_t>(m) * np;
      const cdouble* rn = values_.data() + static_cast<std::size_t>(n) * np;
      for (int i = 0; i < np; ++i) s.add(w[i] * rm[i] * std::conj(rn[i]));
      g(m, n) = s.value();
    }
  }
  return g;
}

void Frame::finish_construction(double tol) {
  for (const cdouble& z : values_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::runtime_error("Frame: non-finite family value");
  const CMatrix g = gram();
  double defect = 0.0;
  for (int m = 0; m < n_basis_; ++m)
    for (int n = 0; n < n_basis_; ++n) {
      const cdouble expected = (m == n) ? cdouble(1.0, 0.0) : cdouble(0.0, 0.0);
      defect = std::max(defect, std::abs(g(m, n) - expected));
    }
  gram_defect_ = defect;
  if (defect > tol) {
    std::ostringstream os;
    os << "Frame: Gram defect " << defect << " exceeds tolerance " << tol;
    throw std::runtime_error(os.str());
  }
}

Point Frame::atom_point(int i) const {
  if (space_.kind() != SpaceKind::FiniteSet)
    throw std::invalid_argument("Frame::atom_point: not a finite-set frame");
  if (i < 0 || i >= space_.size()) throw std::invalid_argument("Frame::atom_point: index out of range");
  return space_.points()[i];
}

Frame frame_from_pair(const MeasureSpace& space, const VectorPair& pair) {
  if (space.kind() != SpaceKind::FiniteSet)
    throw std::invalid_argument("frame_from_pair: space must be a finite set");
  validate_pair(pair);
  if (pair.size() != space.size())
    throw std::invalid_argument("frame_from_pair: pair length does not match the space");

  const int n = space.size();
  Frame f;
  f.space_ = space;
  f.n_basis_ = 2;
  f.family_ = FrameFamily::Pair;
  f.pair_ = pair;
  f.labels_ = {"alpha", "beta"};
  f.values_.resize(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double rs = 1.0 / std::sqrt(space.weights()[i]);
    f.values_[i] = pair.alpha[i] * rs;
    f.values_[n + i] = pair.beta[i] * rs;
  }
  f.finish_construction(1e-12);
  return f;
}

Frame haar_frame(const MeasureSpace& space, int scale_J) {
  if (space.kind() != SpaceKind::Interval)
    throw std::invalid_argument("haar_frame: space must be an interval space");
  if (scale_J < -1) throw std::invalid_argument("haar_frame: scale_J must be >= -1");
  if (space.dyadic_level() < scale_J + 1)
    throw std::invalid_argument(
        "haar_frame: space partition is coarser than the deepest wavelet half-cells");

  Frame f;
  f.space_ = space;
  f.family_ = FrameFamily::Haar;
  f.haar_scale_ = scale_J;
  f.n_basis_ = 1 << (scale_J + 1);

  const int np = space.size();
  f.values_.resize(static_cast<std::size_t>(f.n_basis_) * np);
  f.labels_.reserve(f.n_basis_);
  f.labels_.push_back("1");
  for (int i = 0; i < np; ++i) f.values_[i] = haar_indicator(std::get<double>(space.points()[i]));
  int row = 1;
  for (int j = 0; j <= scale_J; ++j) {
    for (int k = 0; k < (1 << j); ++k, ++row) {
      std::ostringstream os;
      os << "psi_" << j << "_" << k;
      f.labels_.push_back(os.str());
      cdouble* dst = f.values_.data() + static_cast<std::size_t>(row) * np;
      for (int i = 0; i < np; ++i) dst[i] = haar_wavelet(j, k, std::get<double>(space.points()[i]));
    }
  }
  f.finish_construction(1e-12);
  return f;
}

Frame trig_frame(const MeasureSpace& space) {
  if (space.kind() != SpaceKind::Interval)
    throw std::invalid_argument("trig_frame: space must be an interval space");

  Frame f;
  f.space_ = space;
  f.family_ = FrameFamily::Trig;
  f.n_basis_ = 2;
  f.labels_ = {"1", "sqrt(2) sin(2 pi x)"};
  const int np = space.size();
  f.values_.resize(2 * static_cast<std::size_t>(np));
  for (int i = 0; i < np; ++i) {
    const double x = std::get<double>(space.points()[i]);
    f.values_[i] = 1.0;
    f.values_[np + i] = std::sqrt(2.0) * std::sin(2.0 * M_PI * x);
  }
  f.finish_construction(1e-12);
  return f;
}

Frame fock_frame(const MeasureSpace& space, int n_max) {
  if (space.kind() != SpaceKind::ComplexPlane)
    throw std::invalid_argument("fock_frame: space must be a plane space");
  if (n_max < 0) throw std::invalid_argument("fock_frame: n_max must be >= 0");
  if (n_max > 300) throw std::invalid_argument("fock_frame: n_max too large");

  Frame f;
  f.space_ = space;
  f.family_ = FrameFamily::Fock;
  f.fock_n_max_ = n_max;
  f.n_basis_ = n_max + 1;
  const int np = space.size();
  f.values_.resize(static_cast<std::size_t>(f.n_basis_) * np);
  f.labels_.reserve(f.n_basis_);
  for (int n = 0; n <= n_max; ++n) {
    std::ostringstream os;
    os << "n=" << n;
    f.labels_.push_back(os.str());
  }
  for (int i = 0; i < np; ++i) {
    const cdouble z = std::get<cdouble>(space.points()[i]);
    cdouble phi = 1.0;  // z^n / sqrt(n!) built up iteratively
    f.values_[i] = phi;
    for (int n = 1; n <= n_max; ++n) {
      phi *= z / std::sqrt(static_cast<double>(n));
      f.values_[static_cast<std::size_t>(n) * np + i] = phi;
    }
  }
  f.finish_construction(1e-8);
  return f;
}

Frame frame_from_parts(MeasureSpace space, int n_basis, std::vector<cdouble> values,
                       std::vector<std::string> labels) {
  if (n_basis < 1) throw std::invalid_argument("frame_from_parts: need n_basis >= 1");
  if (values.size() != static_cast<std::size_t>(n_basis) * space.size())
    throw std::invalid_argument("frame_from_parts: value table size mismatch");
  if (labels.size() != static_cast<std::size_t>(n_basis))
    throw std::invalid_argument("frame_from_parts: labels size mismatch");
  Frame f;
  f.space_ = std::move(space);
  f.n_basis_ = n_basis;
  f.family_ = FrameFamily::Custom;
  f.values_ = std::move(values);
  f.labels_ = std::move(labels);
  f.finish_construction(f.space_.exact() ? 1e-12 : 1e-8);
  return f;
}

namespace {

double interval_coordinate(const Point& x) {
  const double* t = std::get_if<double>(&x);
  if (!t) throw std::invalid_argument("Frame::evaluate: expected an interval point");
  if (*t < 0.0 || *t > 1.0)
    throw std::invalid_argument("Frame::evaluate: interval point outside [0,1]");
  return *t;
}

}  // namespace

std::vector<cdouble> Frame::evaluate(const Point& x) const {
  std::vector<cdouble> out(n_basis_);
  switch (family_) {
    case FrameFamily::Haar: {
      const double t = interval_coordinate(x);
      out[0] = haar_indicator(t);
      int row = 1;
      for (int j = 0; j <= haar_scale_; ++j)
        for (int k = 0; k < (1 << j); ++k, ++row) out[row] = haar_wavelet(j, k, t);
      return out;
    }
    case FrameFamily::Trig: {
      const double t = interval_coordinate(x);
      out[0] = 1.0;
      out[1] = std::sqrt(2.0) * std::sin(2.0 * M_PI * t);
      return out;
    }
    case FrameFamily::Fock: {
      const cdouble* z = std::get_if<cdouble>(&x);
      if (!z) throw std::invalid_argument("Frame::evaluate: expected a complex point");
      cdouble phi = 1.0;
      out[0] = phi;
      for (int n = 1; n <= fock_n_max_; ++n) {
        phi *= *z / std::sqrt(static_cast<double>(n));
        out[n] = phi;
      }
      return out;
    }
    case FrameFamily::Pair:
    case FrameFamily::Custom: {
      // tabulated families evaluate at stored points only
      const int np = space_.size();
      const std::vector<Point>& pts = space_.points();
      for (int i = 0; i < np; ++i) {
        const Point& p = pts[i];
        bool match = false;
        if (const auto* a = std::get_if<Atom>(&x)) {
          const auto* b = std::get_if<Atom>(&p);
          match = b && a->name == b->name;
        } else if (const auto* t = std::get_if<double>(&x)) {
          const auto* u = std::get_if<double>(&p);
          match = u && *t == *u;
        } else {
          const auto* v = std::get_if<cdouble>(&p);
          match = v && std::get<cdouble>(x) == *v;
        }
        if (match) {
          for (int n = 0; n < n_basis_; ++n) out[n] = value(n, i);
          return out;
        }
      }
      throw std::invalid_argument("Frame::evaluate: " + point_to_string(x) +
                                  " is not a stored point of this frame");
    }
  }
  throw std::logic_error("Frame::evaluate: unknown family");
}

}  // namespace csq
