#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "grothlat/lattice.hpp"

namespace grothlat {

namespace {

// q -> 0 on a vertex weight.  Weight denominators never contain q (only
// column shifts), so killing q in the numerator is exact.
RatFunc weight_q0(const RatFunc& w) {
  assert(w.den().q_pow == 0);
  return RatFunc(w.num().set_q_zero(), w.den());
}

void specialize_weights(LatticeSystem& sys, bool q_zero) {
  if (!q_zero) return;
  for (auto& row : sys.weights)
    for (auto& cell : row)
      for (auto& wt : cell) wt = weight_q0(wt);
}

}  // namespace

LatticeSystem build_rect_system(const Perm& v, const Perm& w,
                                const std::vector<RatFunc>& row_params,
                                const std::vector<RatFunc>& col_params, bool q_zero) {
  const int n = v.n();
  if (w.n() != n || int(row_params.size()) != n || int(col_params.size()) != n)
    throw std::invalid_argument("rect system: mismatched sizes");
  LatticeSystem sys;
  sys.rows = sys.cols = sys.ncolors = n;
  sys.top.resize(n);
  sys.left.resize(n);
  for (int i = 0; i < n; ++i) {
    sys.top[i] = v(i + 1);
    sys.left[i] = w(i + 1);
  }
  sys.bottom.assign(n, PLUS);
  sys.right.assign(n, PLUS);
  sys.row_family.assign(n, Family::T);
  sys.weights.resize(n);
  for (int r = 0; r < n; ++r) {
    sys.weights[r].reserve(n);
    for (int c = 0; c < n; ++c)
      sys.weights[r].push_back(cell_weights(Family::T, row_params[r], col_params[c]));
  }
  specialize_weights(sys, q_zero);
  return sys;
}

LatticeSystem build_system_G(const Perm& v, const Perm& w, bool q_zero) {
  const int n = v.n();
  std::vector<RatFunc> xs, ys;
  for (int i = 1; i <= n; ++i) {
    xs.push_back(RatFunc::variable(xvar(i)));
    ys.push_back(RatFunc::variable(yvar(i)));
  }
  LatticeSystem sys = build_rect_system(v, w, xs, ys, q_zero);
  sys.name = "G[" + perm_str(v) + "," + perm_str(w) + "]";
  return sys;
}

LatticeSystem build_mixed_rows(const std::vector<RowSpec>& rows,
                               const std::vector<VarId>& col_vars, int ncolors,
                               bool q_zero) {
  LatticeSystem sys;
  sys.rows = int(rows.size());
  sys.cols = int(col_vars.size());
  sys.ncolors = ncolors;
  sys.top.assign(sys.cols, PLUS);
  sys.bottom.assign(sys.cols, PLUS);
  sys.right.assign(sys.rows, PLUS);
  sys.left.resize(sys.rows);
  sys.row_family.resize(sys.rows);
  sys.weights.resize(sys.rows);
  for (int r = 0; r < sys.rows; ++r) {
    sys.left[r] = rows[r].left;
    sys.row_family[r] = rows[r].fam;
    sys.weights[r].reserve(sys.cols);
    for (int c = 0; c < sys.cols; ++c)
      sys.weights[r].push_back(
          cell_weights(rows[r].fam, rows[r].param, RatFunc::variable(col_vars[c])));
  }
  specialize_weights(sys, q_zero);
  return sys;
}

LatticeSystem build_cauchy_system(const Perm& w, const Perm& v) {
  const int n = w.n();
  if (v.n() != n) throw std::invalid_argument("cauchy system: mismatched sizes");
  std::vector<RowSpec> rows;
  for (int r = 0; r < n; ++r)  // reversed-flow rows x_n .. x_1
    rows.push_back({Family::SSTAR, RatFunc::variable(xvar(n - r)), w(n - r)});
  for (int r = 0; r < n; ++r)  // standard rows y_1 .. y_n
    rows.push_back({Family::S, RatFunc::variable(yvar(r + 1)), v(r + 1)});
  std::vector<VarId> cols;
  for (int c = 1; c <= n; ++c) cols.push_back(zvar(c));
  LatticeSystem sys = build_mixed_rows(rows, cols, n, /*q_zero=*/true);
  sys.name = "cauchy[" + perm_str(w) + "," + perm_str(v) + "]";
  return sys;
}

LatticeSystem build_branch_row(const Perm& w, const Perm& v) {
  const int n = w.n();
  if (v.n() != n) throw std::invalid_argument("branch row: mismatched sizes");
  std::vector<VarId> cols;
  for (int c = 1; c <= n; ++c) cols.push_back(yvar(c));
  LatticeSystem sys =
      build_mixed_rows({{Family::SPRIME, RatFunc::variable(xvar(1)), 1}}, cols, n,
                       /*q_zero=*/false);
  const auto ew = eta_of(w), ev = eta_of(v);
  for (int c = 0; c < n; ++c) {
    sys.top[c] = ew[c];
    sys.bottom[c] = (c + 1 < n) ? ev[c + 1] : PLUS;
  }
  sys.name = "branch[" + perm_str(w) + "," + perm_str(v) + "]";
  return sys;
}

////////////////////////////
// state utilities        //
////////////////////////////

std::optional<Pattern> state_pattern(const LatticeSystem& sys, const LatticeState& st,
                                     int r, int c) {
  return classify(adj_class_of(sys.row_family[r]), st.V[r][c], st.H[r][c],
                  st.H[r][c + 1], st.V[r + 1][c]);
}

RatFunc state_weight_rows(const LatticeSystem& sys, const LatticeState& st, int r0,
                          int r1) {
  RatFunc prod = RatFunc(Poly::constant(1));
  for (int r = r0; r < r1; ++r)
    for (int c = 0; c < sys.cols; ++c) {
      auto p = state_pattern(sys, st, r, c);
      if (!p) throw std::logic_error("state_weight: unclassifiable vertex");
      prod *= sys.weights[r][c][int(*p)];
    }
  return prod;
}

RatFunc state_weight(const LatticeSystem& sys, const LatticeState& st) {
  return state_weight_rows(sys, st, 0, sys.rows);
}

namespace {

enum Role { RN = 0, RW = 1, RE = 2, RS = 3 };

bool role_is_input(Flow f, int role) {
  switch (f) {
    case Flow::IN_WS: return role == RW || role == RS;
    case Flow::IN_SE: return role == RS || role == RE;
    case Flow::IN_NE: return role == RN || role == RE;
  }
  return false;
}

int pair_role(Flow f, Pattern p, int in_role) {
  const bool bpat = (p == Pattern::B1 || p == Pattern::B2);
  switch (f) {
    case Flow::IN_WS:
      // C turns the strands, everything else passes straight through.
      if (p == Pattern::C1 || p == Pattern::C2) return in_role == RW ? RN : RE;
      return in_role == RW ? RE : RN;
    case Flow::IN_SE:
      if (bpat) return in_role == RS ? RN : RW;
      return in_role == RS ? RW : RN;
    case Flow::IN_NE:
      if (bpat) return in_role == RN ? RS : RW;
      return in_role == RN ? RW : RS;
  }
  return -1;
}

}  // namespace

bool validate_paths(const LatticeSystem& sys, const LatticeState& st) {
  // Edge identity: (horizontal?, r, c).  H[r][c] west of (r,c); V[r][c] north.
  using EdgeKey = std::tuple<bool, int, int>;
  auto edge_of = [&](int r, int c, int role) -> EdgeKey {
    switch (role) {
      case RN: return {false, r, c};
      case RS: return {false, r + 1, c};
      case RW: return {true, r, c};
      default: return {true, r, c + 1};
    }
  };
  auto label_of = [&](const EdgeKey& e) {
    auto [h, r, c] = e;
    return h ? st.H[r][c] : st.V[r][c];
  };

  std::set<EdgeKey> visited;
  std::size_t colored = 0;
  for (int r = 0; r < sys.rows; ++r)
    for (int c = 0; c <= sys.cols; ++c) colored += st.H[r][c] != PLUS;
  for (int r = 0; r <= sys.rows; ++r)
    for (int c = 0; c < sys.cols; ++c) colored += st.V[r][c] != PLUS;

  // Entry points: colored boundary edges on an input side of their row.
  struct Start { int r, c, role; };
  std::vector<Start> starts;
  for (int r = 0; r < sys.rows; ++r) {
    Flow f = flow_of(sys.row_family[r]);
    if (st.H[r][0] != PLUS && f == Flow::IN_WS) starts.push_back({r, 0, RW});
    if (st.H[r][sys.cols] != PLUS && f != Flow::IN_WS)
      starts.push_back({r, sys.cols - 1, RE});
  }
  for (int c = 0; c < sys.cols; ++c) {
    if (st.V[0][c] != PLUS && flow_of(sys.row_family[0]) == Flow::IN_NE)
      starts.push_back({0, c, RN});
    Flow f = flow_of(sys.row_family[sys.rows - 1]);
    if (st.V[sys.rows][c] != PLUS && f != Flow::IN_NE)
      starts.push_back({sys.rows - 1, c, RS});
  }

  const std::size_t max_steps = std::size_t(sys.rows + 1) * (sys.cols + 1) * 2 + 4;
  for (const auto& s0 : starts) {
    int r = s0.r, c = s0.c, role = s0.role;
    Label color = label_of(edge_of(r, c, role));
    for (std::size_t step = 0;; ++step) {
      if (step > max_steps) return false;  // cycle: flows must be acyclic
      Flow f = flow_of(sys.row_family[r]);
      if (!role_is_input(f, role)) return false;
      auto p = state_pattern(sys, st, r, c);
      if (!p) return false;
      int out = pair_role(f, *p, role);
      EdgeKey ein = edge_of(r, c, role), eout = edge_of(r, c, out);
      if (label_of(ein) != color || label_of(eout) != color) return false;
      visited.insert(ein);
      visited.insert(eout);
      // step across the shared edge
      int nr = r, nc = c, nrole = -1;
      switch (out) {
        case RE: nc = c + 1; nrole = RW; break;
        case RW: nc = c - 1; nrole = RE; break;
        case RN: nr = r - 1; nrole = RS; break;
        case RS: nr = r + 1; nrole = RN; break;
      }
      if (nc < 0 || nc >= sys.cols || nr < 0 || nr >= sys.rows) break;  // exited
      r = nr; c = nc; role = nrole;
    }
  }
  return visited.size() == colored;
}

std::string state_dump(const LatticeSystem& sys, const LatticeState& st) {
  std::ostringstream out;
  auto line = [&](const char* tag, const std::vector<Label>& labels) {
    out << tag;
    for (std::size_t i = 0; i < labels.size(); ++i)
      out << (i ? " " : "") << label_str(labels[i]);
    out << "\n";
  };
  for (int r = 0; r < sys.rows; ++r) {
    line("v: ", st.V[r]);
    line("h: ", st.H[r]);
  }
  line("v: ", st.V[sys.rows]);
  return out.str();
}

}  // namespace grothlat
