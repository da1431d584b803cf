#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "grothlat/errors.hpp"
#include "grothlat/pipedreams.hpp"

namespace grothlat {

PipeDream make_pd(int n, std::initializer_list<std::pair<int, int>> cells) {
  PipeDream pd;
  pd.n = n;
  for (auto [i, j] : cells) {
    if (i < 1 || j < 1 || i + j > n)
      throw std::invalid_argument("pipe dream crossing off the staircase");
    pd.crossings.insert({i, j});
  }
  return pd;
}

PipeTrace trace_pipes(const PipeDream& pd) {
  PipeTrace tr;
  std::vector<int> exits(pd.n);
  tr.by_pipe.assign(pd.n, {});
  for (int p = 1; p <= pd.n; ++p) {
    int i = p, j = 1;
    bool from_west = true;
    for (;;) {
      const bool crossed = pd.crossings.count({i, j}) != 0;
      if (crossed) {
        auto& rec = tr.cross_pipes[{i, j}];
        (from_west ? rec.first : rec.second) = p;
        tr.by_pipe[p - 1].push_back({i, j});
      }
      // crossing: straight through; bump: west turns north, south turns east
      const bool exit_north = crossed ? !from_west : from_west;
      if (exit_north) {
        if (--i == 0) {
          exits[p - 1] = j;
          break;
        }
        from_west = false;
      } else {
        ++j;
        assert(j <= pd.n && "pipes never leave through the east edge");
        from_west = true;
      }
    }
  }
  tr.naive = Perm{exits};
  return tr;
}

namespace {

// First pipe pair (a < b, lexicographic) sharing at least two crossing cells,
// with the shared cells listed in pipe a's path order.
struct DoubledPair {
  int a = 0, b = 0;
  std::vector<std::pair<int, int>> cells;
};

std::optional<DoubledPair> find_doubled(const PipeTrace& tr, int n) {
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      DoubledPair d{a, b, {}};
      for (const auto& cell : tr.by_pipe[a - 1]) {
        auto [h, v] = tr.cross_pipes.at(cell);
        if ((h == a && v == b) || (h == b && v == a)) d.cells.push_back(cell);
      }
      if (d.cells.size() >= 2) return d;
    }
  return std::nullopt;
}

PipeDream reduce_impl(const PipeDream& pd, bool keep_first, int* removed) {
  PipeDream cur = pd;
  int dropped = 0;
  for (;;) {
    PipeTrace tr = trace_pipes(cur);
    auto d = find_doubled(tr, cur.n);
    if (!d) break;
    const auto keep = keep_first ? d->cells.front() : d->cells.back();
    for (const auto& cell : d->cells)
      if (cell != keep) {
        cur.crossings.erase(cell);
        ++dropped;
      }
  }
  if (removed) *removed = dropped;
  return cur;
}

}  // namespace

bool is_reduced(const PipeDream& pd) {
  PipeTrace tr = trace_pipes(pd);
  return !find_doubled(tr, pd.n).has_value();
}

PipeDream reduce_sw(const PipeDream& pd, int* removed) {
  return reduce_impl(pd, /*keep_first=*/true, removed);
}

PipeDream reduce_ne(const PipeDream& pd, int* removed) {
  return reduce_impl(pd, /*keep_first=*/false, removed);
}

Perm permutation_of(const PipeDream& pd) {
  return trace_pipes(reduce_sw(pd)).naive;
}

int excess_of(const PipeDream& pd) {
  int removed = 0;
  reduce_sw(pd, &removed);
  return removed;
}

Poly pd_weight(const PipeDream& pd) {
  Poly w = Poly::constant(1);
  for (auto [i, j] : pd.crossings)
    w *= oplus(Poly::variable(xvar(i)), Poly::variable(yvar(j)));
  return w;
}

std::vector<PipeDream> enumerate_pd(const Perm& w) {
  const int n = w.n();
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) cells.push_back({i, j});
  std::vector<PipeDream> out;
  const std::size_t total = std::size_t(1) << cells.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    check_budget(mask + 1, "pipe dream enumeration");
    PipeDream pd;
    pd.n = n;
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (mask >> k & 1) pd.crossings.insert(cells[k]);
    if (permutation_of(pd) == w) out.push_back(pd);
  }
  return out;
}

Poly grothendieck_via_pd(const Perm& w) {
  Poly sum;
  const Poly beta = beta_poly();
  for (const auto& pd : enumerate_pd(w))
    sum += pd_weight(pd) * beta.pow(unsigned(excess_of(pd)));
  return sum;
}

std::string pd_ascii(const PipeDream& pd) {
  std::ostringstream os;
  for (int i = 1; i <= pd.n; ++i) {
    for (int j = 1; j <= pd.n; ++j)
      os << (j > 1 ? " " : "") << (pd.crossings.count({i, j}) ? '+' : '.');
    os << "\n";
  }
  return os.str();
}

PipeDream state_to_pd(const LatticeSystem& sys, const LatticeState& st) {
  PipeDream pd;
  pd.n = sys.rows;
  for (int r = 0; r < sys.rows; ++r)
    for (int c = 0; c < sys.cols; ++c)
      if (state_pattern(sys, st, r, c) == Pattern::B1)
        pd.crossings.insert({c + 1, r + 1});  // transposed
  return pd;
}

PipeDream state_to_pd_direct(const LatticeSystem& sys, const LatticeState& st) {
  PipeDream pd;
  pd.n = sys.rows;
  for (int r = 0; r < sys.rows; ++r)
    for (int c = 0; c < sys.cols; ++c)
      if (state_pattern(sys, st, r, c) == Pattern::B1)
        pd.crossings.insert({r + 1, c + 1});
  return pd;
}

LatticeState pd_to_state(const PipeDream& pd) {
  if (!is_reduced(pd)) throw NotReduced("pd_to_state requires a reduced pipe dream");
  const int n = pd.n;
  LatticeState st;
  st.H.assign(n, std::vector<Label>(n + 1, PLUS));
  st.V.assign(n + 1, std::vector<Label>(n, PLUS));
  // Re-run the trace, but record each passage onto the transposed lattice
  // edges: pd cell (i,j) is lattice cell (j,i), pd west/east edges are the
  // lattice north/south edges and pd north/south are lattice west/east.
  for (int p = 1; p <= n; ++p) {
    int i = p, j = 1;
    bool from_west = true;
    for (;;) {
      const bool crossed = pd.crossings.count({i, j}) != 0;
      if (from_west)
        st.V[j - 1][i - 1] = p;  // pd west edge
      else
        st.H[j - 1][i] = p;  // pd south edge
      const bool exit_north = crossed ? !from_west : from_west;
      if (exit_north)
        st.H[j - 1][i - 1] = p;  // pd north edge
      else
        st.V[j][i - 1] = p;  // pd east edge
      if (exit_north) {
        if (--i == 0) break;
        from_west = false;
      } else {
        ++j;
        from_west = true;
      }
    }
  }
  return st;
}

}  // namespace grothlat
