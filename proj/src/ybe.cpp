#include <sstream>

#include "grothlat/ybe.hpp"

namespace grothlat {

namespace {

RatFunc rect_vertex(const std::array<RatFunc, 5>& tbl, AdjClass cls, Label n, Label w,
                    Label e, Label s) {
  auto p = classify(cls, n, w, e, s);
  return p ? tbl[int(*p)] : RatFunc();
}

struct TrainSetup {
  RFam rfam;
  // Vertex tables carrying parameter i resp. j; the R-vertex carries (i, j).
  std::array<RatFunc, 5> veri, verj;
  AdjClass cls_i, cls_j;
  RatFunc pi, pj;
};

TrainSetup make_setup(RFam fam) {
  TrainSetup ts;
  ts.rfam = fam;
  RatFunc x1 = RatFunc::variable(xvar(1)), x2 = RatFunc::variable(xvar(2));
  RatFunc y1 = RatFunc::variable(yvar(1)), y2 = RatFunc::variable(yvar(2));
  switch (fam) {
    case RFam::ROW:
      ts.veri = cell_weights(Family::T, x1, y1);
      ts.verj = cell_weights(Family::T, x2, y1);
      ts.cls_i = ts.cls_j = AdjClass::RECT;
      ts.pi = x1; ts.pj = x2;
      break;
    case RFam::SSTAR_ROW:
      ts.veri = cell_weights(Family::SSTAR, x1, y1);
      ts.verj = cell_weights(Family::SSTAR, x2, y1);
      ts.cls_i = ts.cls_j = AdjClass::RECT_STAR;
      ts.pi = x1; ts.pj = x2;
      break;
    case RFam::RHOMBUS:
      ts.veri = cell_weights(Family::S, x1, y1);
      ts.verj = cell_weights(Family::SSTAR, x2, y1);
      ts.cls_i = AdjClass::RECT;
      ts.cls_j = AdjClass::RECT_STAR;
      ts.pi = x1; ts.pj = x2;
      break;
    case RFam::COL:
      ts.veri = cell_weights(Family::T, x1, y1);
      ts.verj = cell_weights(Family::T, x1, y2);
      ts.cls_i = ts.cls_j = AdjClass::RECT;
      ts.pi = y1; ts.pj = y2;
      break;
  }
  return ts;
}

// Row-type train: R west of a two-row stack on the left side, east on the
// right side, rows exchanged.  Boundary order (alpha..eta) follows the edges
// (R-SW, R-NW, top-N, top-E, bottom-E, bottom-S).
RatFunc train_row_lhs(const TrainSetup& ts, const std::array<Label, 6>& b,
                      const std::vector<Label>& labels) {
  auto [alpha, beta, gamma, delta, eps, eta] = b;
  RatFunc total;
  for (Label g1 : labels)
    for (Label g2 : labels) {
      RatFunc rw = r_vertex(ts.rfam, alpha, beta, g1, g2, ts.pi, ts.pj);
      if (rw.is_zero()) continue;
      for (Label m : labels) {
        RatFunc top = rect_vertex(ts.veri, ts.cls_i, gamma, g1, delta, m);
        if (top.is_zero()) continue;
        RatFunc bot = rect_vertex(ts.verj, ts.cls_j, m, g2, eps, eta);
        if (bot.is_zero()) continue;
        total += rw * top * bot;
      }
    }
  return total;
}

RatFunc train_row_rhs(const TrainSetup& ts, const std::array<Label, 6>& b,
                      const std::vector<Label>& labels) {
  auto [alpha, beta, gamma, delta, eps, eta] = b;
  RatFunc total;
  for (Label h1 : labels)
    for (Label h2 : labels) {
      RatFunc rw = r_vertex(ts.rfam, h2, h1, delta, eps, ts.pi, ts.pj);
      if (rw.is_zero()) continue;
      for (Label m : labels) {
        RatFunc top = rect_vertex(ts.verj, ts.cls_j, gamma, beta, h1, m);
        if (top.is_zero()) continue;
        RatFunc bot = rect_vertex(ts.veri, ts.cls_i, m, alpha, h2, eta);
        if (bot.is_zero()) continue;
        total += top * bot * rw;
      }
    }
  return total;
}

// Column-type train: R below a two-column pair on the left side, above on
// the right side, columns exchanged.  Boundary order (alpha..eta) follows
// (left-N, right-N, right-E, right-S, left-S, left-W).
RatFunc train_col_lhs(const TrainSetup& ts, const std::array<Label, 6>& b,
                      const std::vector<Label>& labels) {
  auto [alpha, beta, gamma, delta, eps, eta] = b;
  RatFunc total;
  for (Label u1 : labels)
    for (Label u2 : labels) {
      RatFunc rw = r_vertex(ts.rfam, u1, alpha, beta, u2, ts.pi, ts.pj);
      if (rw.is_zero()) continue;
      for (Label m : labels) {
        RatFunc vi = rect_vertex(ts.veri, ts.cls_i, u1, eta, m, eps);
        if (vi.is_zero()) continue;
        RatFunc vj = rect_vertex(ts.verj, ts.cls_j, u2, m, gamma, delta);
        if (vj.is_zero()) continue;
        total += rw * vi * vj;
      }
    }
  return total;
}

RatFunc train_col_rhs(const TrainSetup& ts, const std::array<Label, 6>& b,
                      const std::vector<Label>& labels) {
  auto [alpha, beta, gamma, delta, eps, eta] = b;
  RatFunc total;
  for (Label v1 : labels)
    for (Label v2 : labels) {
      RatFunc rw = r_vertex(ts.rfam, eps, v1, v2, delta, ts.pi, ts.pj);
      if (rw.is_zero()) continue;
      for (Label m : labels) {
        RatFunc vj = rect_vertex(ts.verj, ts.cls_j, alpha, eta, m, v1);
        if (vj.is_zero()) continue;
        RatFunc vi = rect_vertex(ts.veri, ts.cls_i, beta, m, gamma, v2);
        if (vi.is_zero()) continue;
        total += vj * vi * rw;
      }
    }
  return total;
}

}  // namespace

YbeReport verify_ybe(RFam fam, int ncolors) {
  TrainSetup ts = make_setup(fam);
  std::vector<Label> labels;
  for (Label c = 1; c <= ncolors; ++c) labels.push_back(c);
  labels.push_back(PLUS);
  YbeReport rep;
  std::array<Label, 6> b{};
  const bool column = fam == RFam::COL;
  for (Label l0 : labels) { b[0] = l0;
  for (Label l1 : labels) { b[1] = l1;
  for (Label l2 : labels) { b[2] = l2;
  for (Label l3 : labels) { b[3] = l3;
  for (Label l4 : labels) { b[4] = l4;
  for (Label l5 : labels) { b[5] = l5;
    RatFunc lhs = column ? train_col_lhs(ts, b, labels) : train_row_lhs(ts, b, labels);
    RatFunc rhs = column ? train_col_rhs(ts, b, labels) : train_row_rhs(ts, b, labels);
    ++rep.boundaries;
    if (!(lhs == rhs)) {
      rep.ok = false;
      std::ostringstream os;
      os << "boundary (";
      for (int i = 0; i < 6; ++i) os << (i ? "," : "") << label_str(b[i]);
      os << "): lhs = " << lhs.text() << ", rhs = " << rhs.text();
      rep.counterexample = os.str();
      return rep;
    }
  }}}}}}
  return rep;
}

std::pair<RatFunc, RatFunc> ybe_column_example() {
  TrainSetup ts = make_setup(RFam::COL);
  std::vector<Label> labels{1, 2, 3, PLUS};
  std::array<Label, 6> b{1, 2, 3, 3, 1, 2};
  return {train_col_lhs(ts, b, labels), train_col_rhs(ts, b, labels)};
}

}  // namespace grothlat
