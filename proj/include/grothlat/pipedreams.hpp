#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grothlat/lattice.hpp"
#include "grothlat/perm.hpp"
#include "grothlat/poly.hpp"

namespace grothlat {

// A pipe dream on the n x n grid: crossing tiles on a subset of the staircase
// cells (i + j <= n, 1-based), bump tiles everywhere else.  Pipe p enters at
// the left of row p heading east and leaves through the top edge.
struct PipeDream {
  int n = 0;
  std::set<std::pair<int, int>> crossings;

  friend bool operator==(const PipeDream&, const PipeDream&) = default;
  friend auto operator<=>(const PipeDream&, const PipeDream&) = default;
};

// Validating constructor: every crossing must sit on the staircase.
PipeDream make_pd(int n, std::initializer_list<std::pair<int, int>> cells);

struct PipeTrace {
  Perm naive;  // exit column of each pipe, read without any reduction
  // crossing cell -> (pipe passing west-to-east, pipe passing south-to-north)
  std::map<std::pair<int, int>, std::pair<int, int>> cross_pipes;
  // crossing cells in path order along each pipe (index 0 = pipe 1)
  std::vector<std::vector<std::pair<int, int>>> by_pipe;
};
PipeTrace trace_pipes(const PipeDream& pd);

bool is_reduced(const PipeDream& pd);
// Drop repeated crossings of each pipe pair, keeping the first (reduce_sw)
// resp. last (reduce_ne) crossing the smaller pipe encounters; `removed`
// reports how many cells were dropped.
PipeDream reduce_sw(const PipeDream& pd, int* removed = nullptr);
PipeDream reduce_ne(const PipeDream& pd, int* removed = nullptr);
Perm permutation_of(const PipeDream& pd);  // reduces (southwest rule) first
int excess_of(const PipeDream& pd);        // crossings removed by reduction

Poly pd_weight(const PipeDream& pd);  // product over crossings of x_i (+) y_j
std::vector<PipeDream> enumerate_pd(const Perm& w);
Poly grothendieck_via_pd(const Perm& w);  // sum of weight * beta^excess

std::string pd_ascii(const PipeDream& pd);

// Bijection with the states of the rectangular system with identity top
// boundary, left boundary w^{-1}, row parameters y and column parameters x,
// at q = 0: crossings are the transposed B1 cells and pipe numbers are the
// strand colors.
PipeDream state_to_pd(const LatticeSystem& sys, const LatticeState& st);
LatticeState pd_to_state(const PipeDream& pd);  // throws NotReduced

// Variant for the system with left boundary w, row parameters x and column
// parameters y: crossings are the B1 cells in place (no transposition); the
// grouping of nonreduced pipe dreams then keeps the last repeated crossing
// of each pair (reduce_ne) instead of the first.
PipeDream state_to_pd_direct(const LatticeSystem& sys, const LatticeState& st);

}  // namespace grothlat
