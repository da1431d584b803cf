#pragma once

#include <array>
#include <string>

#include "grothlat/ratfunc.hpp"

namespace grothlat {

// The rank-two trigonometric R-matrix on basis {(a,a), (a,b), (b,a), (b,b)},
// entries polynomial in z and q:
//
//   [ 1-q^2 z      0        0        0   ]
//   [   0      (z-1) q    1-q^2      0   ]
//   [   0     (1-q^2) z  (z-1) q     0   ]
//   [   0          0        0    1-q^2 z ]
std::array<std::array<Poly, 4>, 4> trig_r_matrix();

// Drinfeld twist by the diagonal F = diag(1, (q beta)^{-1/2}, (q beta)^{1/2}, 1):
// returns F_21 R F^{-1}.  Every nonzero entry picks up an integral power of
// q*beta (asserted), possibly negative, hence the rational representation.
std::array<std::array<RatFunc, 4>, 4> twisted_r_matrix();

struct TwistReport {
  bool rect_ok = true;  // twisted matrix at z -> (1+beta x)(1+beta y) == T table
  bool row_ok = true;   // twisted matrix under the z-linear split == row R table
  std::string detail;
};

// Entry-for-entry comparison of the twisted matrix against the rectangular
// vertex weights and against the row R-vertex weights.  Slots are keyed by
// (input pair, output pair) over two colors; off-pattern slots must be zero.
TwistReport verify_twist();

}  // namespace grothlat
