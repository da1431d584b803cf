#pragma once

#include <array>
#include <optional>
#include <string>

#include "grothlat/lattice.hpp"

namespace grothlat {

// R-vertices are drawn as crosses with edges (SW, NW, NE, SE) and carry two
// row (or two column) parameters.  Four families:
//   ROW        intertwines two T rows x_i, x_j
//   SSTAR_ROW  intertwines two SSTAR rows x_i, x_j
//   COL        intertwines two T columns y_i, y_j
//   RHOMBUS    intertwines an S row x_i with an SSTAR row x_j
enum class RFam { ROW, SSTAR_ROW, COL, RHOMBUS };

// B patterns require SW==NE, NW==SE.  C patterns pair the parallel edges:
// row-like families pair NW==NE and SW==SE, column-like pair SW==NW, NE==SE.
std::optional<Pattern> classify_r(RFam fam, Label sw, Label nw, Label ne, Label se);
RatFunc r_weight(RFam fam, Pattern p, const RatFunc& pi, const RatFunc& pj);
// All four tuple weights in one call (zero when inadmissible).
RatFunc r_vertex(RFam fam, Label sw, Label nw, Label ne, Label se,
                 const RatFunc& pi, const RatFunc& pj);

struct YbeReport {
  bool ok = true;
  long boundaries = 0;  // boundary tuples swept
  std::string counterexample;
};

// Sweep the train argument over all (ncolors+1)^6 boundary labelings and
// compare both sides symbolically.  `fam` picks which R family (and hence
// which pair of vertex rows/columns) is tested.
YbeReport verify_ybe(RFam fam, int ncolors = 3);

// Fixture: one column-type boundary whose two sides have short closed forms,
// returned as (lhs, rhs) for an exact match against those forms.
std::pair<RatFunc, RatFunc> ybe_column_example();

}  // namespace grothlat
