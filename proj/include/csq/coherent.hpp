#pragma once

#include "csq/frames.hpp"

namespace csq {

// |x> = (1/sqrt(N(x))) sum_n phi_n(x) |n> expressed in the frame basis.
struct CoherentState {
  std::vector<cdouble> coeffs;
  Point base_point;
  double norm_factor = 0.0;  // N(x)
};

// N(x) = sum_n |phi_n(x)|^2.  Throws std::domain_error when N(x) = 0
// (the state is undefined there).
double normalization(const Frame& frame, const Point& x);

CoherentState coherent_state(const Frame& frame, const Point& x);

// <x|x'>; |overlap| <= 1 with equality at x = x'.
cdouble overlap(const Frame& frame, const Point& x, const Point& xprime);

// Reproducing kernel K(x,x') = sqrt(N(x) N(x')) <x|x'> = sum_n phi_n(x)
// conj(phi_n(x')).  K(x,x) = N(x).
cdouble kernel(const Frame& frame, const Point& x, const Point& xprime);

// ||sum_i w_i N(x_i) |x_i><x_i| - I||_max, accumulated from outer
// products of the tabulated columns (an independent path from the Gram
// computation done at frame construction).
double resolution_defect(const Frame& frame);

}  // namespace csq
