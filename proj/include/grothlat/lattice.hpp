#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grothlat/perm.hpp"
#include "grothlat/ratfunc.hpp"

namespace grothlat {

// Labels on lattice edges: colors 1..ncolors plus the neutral label, which is
// the largest in the color order.
using Label = int;
constexpr Label PLUS = 127;
std::string label_str(Label l);

// The five admissible vertex patterns shared by every family.  Classified as
// a 4-tuple (N, W, E, S) of edge labels with patterns named so that in a
// two-color pattern (a < b) the placement of the larger color decides B1/B2
// and C1/C2.
enum class Pattern : int { A = 0, B1 = 1, B2 = 2, C1 = 3, C2 = 4 };

// Rectangular vertices come in two adjacency classes:
//   RECT       B: N==S, W==E   C: N==W, E==S   (families T, S, SPRIME)
//   RECT_STAR  B: N==S, W==E   C: N==E, W==S   (family SSTAR)
enum class AdjClass { RECT, RECT_STAR };
std::optional<Pattern> classify(AdjClass cls, Label n, Label w, Label e, Label s);

// Which two edges carry inputs; fixes the strand pairing used by path checks.
enum class Flow { IN_WS, IN_SE, IN_NE };

// Vertex weight families.
//   T       main rectangular model, argument row (+) col
//   S       b1/b2-swapped variant used below the Cauchy midline
//   SSTAR   reversed-flow variant, argument row (+) (ominus col)
//   SPRIME  the q-free branching row (B1 is inadmissible there)
enum class Family { T, S, SSTAR, SPRIME };
AdjClass adj_class_of(Family f);
Flow flow_of(Family f);

// Weight table of one vertex, indexed by Pattern.  SSTAR requires the column
// parameter to be a plain variable (its weights carry 1/(1+beta*col)).
std::array<RatFunc, 5> cell_weights(Family f, const RatFunc& row, const RatFunc& col);

////////////////////////////
// lattice systems        //
////////////////////////////

struct LatticeSystem {
  int rows = 0, cols = 0, ncolors = 0;
  std::vector<Label> top, bottom, left, right;  // boundary labels
  std::vector<Family> row_family;
  std::vector<std::vector<std::array<RatFunc, 5>>> weights;  // [row][col][pattern]
  std::string name;
};

struct LatticeState {
  // H[r][c]: horizontal edge west of cell (r,c), c = 0..cols (cols = right
  // boundary).  V[r][c]: vertical edge north of cell (r,c), r = 0..rows.
  std::vector<std::vector<Label>> H, V;
};

// Rectangular system: n x n of family T, top boundary = v (left to right),
// left boundary = w (top to bottom), all other boundary edges neutral.
LatticeSystem build_rect_system(const Perm& v, const Perm& w,
                                const std::vector<RatFunc>& row_params,
                                const std::vector<RatFunc>& col_params, bool q_zero);
// Convenience: rows x1..xn, columns y1..yn.
LatticeSystem build_system_G(const Perm& v, const Perm& w, bool q_zero);

// Stack of explicitly specified rows over variable columns (used by the
// Cauchy-kernel systems); top/bottom/right boundaries neutral.
struct RowSpec {
  Family fam;
  RatFunc param;
  Label left = PLUS;
};
LatticeSystem build_mixed_rows(const std::vector<RowSpec>& rows,
                               const std::vector<VarId>& col_vars, int ncolors,
                               bool q_zero);

// Cauchy kernel system for (v, w): n SSTAR rows with parameters x_n..x_1 and
// left labels w(n)..w(1), over n S rows with parameters y_1..y_n and left
// labels v(1)..v(n); columns z_1..z_n; evaluated at q = 0.
LatticeSystem build_cauchy_system(const Perm& w, const Perm& v);

// One branching row: 1 x n of SPRIME with row parameter x1, columns y_1..y_n,
// top = eta(w), bottom = (eta(v) without its first letter, then neutral),
// left = 1, right = neutral.
LatticeSystem build_branch_row(const Perm& w, const Perm& v);

////////////////////////////
// enumeration            //
////////////////////////////

enum class ScanOrder { ROW_MAJOR, COL_MAJOR };

// Visit every admissible state in a deterministic DFS order.
void for_each_state(const LatticeSystem& sys,
                    const std::function<void(const LatticeState&)>& visit,
                    ScanOrder order = ScanOrder::ROW_MAJOR);
std::vector<LatticeState> enumerate_states(const LatticeSystem& sys,
                                           ScanOrder order = ScanOrder::ROW_MAJOR);
std::size_t count_states(const LatticeSystem& sys);

// Weight of one state / of a row range [r0, r1).
RatFunc state_weight(const LatticeSystem& sys, const LatticeState& st);
RatFunc state_weight_rows(const LatticeSystem& sys, const LatticeState& st, int r0, int r1);
std::optional<Pattern> state_pattern(const LatticeSystem& sys, const LatticeState& st,
                                     int r, int c);

// Partition function via row transfer (jobs > 1 parallelizes each row sweep
// with OpenMP; exact arithmetic makes the result identical to serial).
RatFunc partition_function(const LatticeSystem& sys, int jobs = 1);
// Serial reference: direct DFS sum over states in the given scan order.
RatFunc partition_function_serial(const LatticeSystem& sys,
                                  ScanOrder order = ScanOrder::ROW_MAJOR);

// Every color's strand must run from its entry boundary edge to its exit
// boundary edge through the per-pattern pairings, covering each colored edge
// exactly once.
bool validate_paths(const LatticeSystem& sys, const LatticeState& st);

// Rows of vertical-edge labels alternating with rows of horizontal-edge
// labels ("v:" rows have cols entries, "h:" rows cols+1, boundaries included).
std::string state_dump(const LatticeSystem& sys, const LatticeState& st);

}  // namespace grothlat
