#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csq/linalg.hpp"
#include "csq/measure_space.hpp"

namespace csq {

// Two orthonormal vectors in C^N: ||alpha|| = ||beta|| = 1, <alpha,beta> = 0.
struct VectorPair {
  std::vector<cdouble> alpha;
  std::vector<cdouble> beta;

  int size() const { return static_cast<int>(alpha.size()); }
};

// Throws std::invalid_argument when the norms or the inner product are
// off by more than tol, or the lengths differ.
void validate_pair(const VectorPair& pair, double tol = 1e-12);
bool pair_is_real(const VectorPair& pair, double tol = 1e-14);

// Two columns of the unitary obtained by orthonormalizing a seeded
// Gaussian matrix.  Deterministic per seed (own Box-Muller stream).
VectorPair random_pair(int n, std::uint64_t seed);
VectorPair random_real_pair(int n, std::uint64_t seed);

enum class FrameFamily { Pair, Haar, Trig, Fock, Custom };

// An orthonormal family {phi_n} tabulated on the nodes of a MeasureSpace.
// Rows of the value table are family members, columns are nodes.  The
// Gram matrix integral(phi_m conj(phi_n)) is checked against the identity
// at construction: tolerance 1e-12 on exact spaces, 1e-8 on approximate
// ones, and construction throws when the defect exceeds it.
class Frame {
 public:
  const MeasureSpace& space() const { return space_; }
  int n_basis() const { return n_basis_; }
  int n_points() const { return space_.size(); }
  cdouble value(int n, int i) const {
    return values_[static_cast<std::size_t>(n) * space_.size() + i];
  }
  const std::vector<cdouble>& values() const { return values_; }
  const std::vector<std::string>& labels() const { return labels_; }
  double gram_defect() const { return gram_defect_; }
  CMatrix gram() const;

  FrameFamily family() const { return family_; }
  int haar_scale() const { return haar_scale_; }
  int fock_n_max() const { return fock_n_max_; }
  const std::optional<VectorPair>& pair() const { return pair_; }

  // Point for the i-th atom of a finite-set frame.
  Point atom_point(int i) const;

  // Evaluate all family members at x.  Closed-form families accept any
  // point of their carrier; Pair and Custom frames only accept stored
  // points (atoms are matched by label).  Throws std::invalid_argument
  // for points outside the carrier or not evaluable.
  std::vector<cdouble> evaluate(const Point& x) const;

  friend Frame frame_from_pair(const MeasureSpace& space, const VectorPair& pair);
  friend Frame haar_frame(const MeasureSpace& space, int scale_J);
  friend Frame trig_frame(const MeasureSpace& space);
  friend Frame fock_frame(const MeasureSpace& space, int n_max);
  friend Frame frame_from_parts(MeasureSpace space, int n_basis,
                                std::vector<cdouble> values,
                                std::vector<std::string> labels);

 private:
  Frame() = default;
  void finish_construction(double tol);  // Gram check + finiteness

  MeasureSpace space_;
  int n_basis_ = 0;
  std::vector<cdouble> values_;  // n_basis x n_points, row-major
  std::vector<std::string> labels_;
  double gram_defect_ = 0.0;
  FrameFamily family_ = FrameFamily::Custom;
  int haar_scale_ = 0;
  int fock_n_max_ = 0;
  std::optional<VectorPair> pair_;
};

// phi_alpha(x_i) = alpha_i / sqrt(a_i), phi_beta likewise, on a finite
// set whose masses are the a_i.
Frame frame_from_pair(const MeasureSpace& space, const VectorPair& pair);

// Dyadic Haar family {1} ∪ {2^{j/2} phi2(2^j x - k) : 0 <= j <= scale_J,
// 0 <= k <= 2^j - 1}, N = 2^(scale_J+1) members (scale_J = -1 keeps only
// the constant).  Requires the space's partition to be at least as fine
// as the deepest wavelet half-cells.
Frame haar_frame(const MeasureSpace& space, int scale_J);

// {1, sqrt(2) sin(2 pi x)}.  Requires enough nodes per cell for the
// sin^2 Gram entry at the construction tolerance (>= 8 per half cell
// suffices on the coarsest partition).
Frame trig_frame(const MeasureSpace& space);

// Fock-Bargmann monomials z^n / sqrt(n!), n = 0..n_max, on a plane
// space.  Throws when the truncation leaves a Gram defect above the
// approximate-space tolerance (documented guidance: radius^2 >= 2(n_max+35)).
Frame fock_frame(const MeasureSpace& space, int n_max);

// Rebuild from serialized parts; family becomes Custom.
Frame frame_from_parts(MeasureSpace space, int n_basis, std::vector<cdouble> values,
                       std::vector<std::string> labels);

// Haar point evaluation.  Right-continuous at interior dyadic
// breakpoints; x = 1 is assigned to the last cell so the closed interval
// is covered.  haar_mother is the j = 0, k = 0 wavelet.
double haar_indicator(double x);                 // constant member on [0,1]
double haar_wavelet(int j, int k, double x);     // 2^{j/2} phi2(2^j x - k)

}  // namespace csq
