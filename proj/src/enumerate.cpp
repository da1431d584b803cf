#include <algorithm>
#include <map>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "grothlat/errors.hpp"
#include "grothlat/lattice.hpp"

namespace grothlat {

namespace {

struct Completion {
  Label e, s;
  Pattern p;
};

// All (E, S) pairs that classify given (N, W), in (E, S) order.  Weight
// pruning (which admissibility depends on once q or beta*q factors vanish)
// happens at the call site against the per-cell table.
std::vector<Completion> completions_for(AdjClass cls, int ncolors, Label n, Label w) {
  std::vector<Completion> out;
  auto labels = [&](auto&& fn) {
    for (Label c = 1; c <= ncolors; ++c) fn(c);
    fn(PLUS);
  };
  if (cls == AdjClass::RECT) {
    if (n == w) {
      labels([&](Label c) {
        out.push_back({c, c, c == n ? Pattern::A : (n > c ? Pattern::C1 : Pattern::C2)});
      });
    } else {
      out.push_back({w, n, w > n ? Pattern::B1 : Pattern::B2});
    }
  } else {  // RECT_STAR
    if (n == w) {
      out.push_back({n, n, Pattern::A});
    } else {
      Completion b{w, n, w > n ? Pattern::B1 : Pattern::B2};
      Completion c{n, w, w > n ? Pattern::C1 : Pattern::C2};
      if (std::pair(b.e, b.s) < std::pair(c.e, c.s)) {
        out.push_back(b);
        out.push_back(c);
      } else {
        out.push_back(c);
        out.push_back(b);
      }
    }
  }
  return out;
}

// Completion lists for every (N, W) pair of one adjacency class, with
// zero-weight entries dropped per cell at lookup time.
class CompletionTable {
 public:
  CompletionTable(AdjClass cls, int ncolors) : ncolors_(ncolors) {
    const int m = ncolors + 1;
    table_.resize(std::size_t(m) * m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        table_[std::size_t(a) * m + b] =
            completions_for(cls, ncolors, decode(a), decode(b));
  }
  const std::vector<Completion>& at(Label n, Label w) const {
    return table_[std::size_t(encode(n)) * (ncolors_ + 1) + encode(w)];
  }

 private:
  int encode(Label l) const { return l == PLUS ? ncolors_ : l - 1; }
  Label decode(int i) const { return i == ncolors_ ? PLUS : i + 1; }
  int ncolors_ = 0;
  std::vector<std::vector<Completion>> table_;
};

std::vector<CompletionTable> tables_for(const LatticeSystem& sys) {
  std::vector<CompletionTable> t;
  t.emplace_back(AdjClass::RECT, sys.ncolors);
  t.emplace_back(AdjClass::RECT_STAR, sys.ncolors);
  return t;
}

const CompletionTable& table_of(const std::vector<CompletionTable>& t, Family f) {
  return t[adj_class_of(f) == AdjClass::RECT ? 0 : 1];
}

}  // namespace

void for_each_state(const LatticeSystem& sys,
                    const std::function<void(const LatticeState&)>& visit,
                    ScanOrder order) {
  const int R = sys.rows, C = sys.cols;
  LatticeState st;
  st.H.assign(R, std::vector<Label>(C + 1, PLUS));
  st.V.assign(R + 1, std::vector<Label>(C, PLUS));
  for (int c = 0; c < C; ++c) st.V[0][c] = sys.top[c];
  for (int r = 0; r < R; ++r) st.H[r][0] = sys.left[r];
  auto tables = tables_for(sys);
  std::size_t emitted = 0;

  std::function<void(int)> walk = [&](int idx) {
    if (idx == R * C) {
      check_budget(++emitted, "lattice enumeration");
      visit(st);
      return;
    }
    const int r = order == ScanOrder::ROW_MAJOR ? idx / C : idx % R;
    const int c = order == ScanOrder::ROW_MAJOR ? idx % C : idx / R;
    const auto& cands = table_of(tables, sys.row_family[r]).at(st.V[r][c], st.H[r][c]);
    for (const auto& cand : cands) {
      if (sys.weights[r][c][int(cand.p)].is_zero()) continue;
      if (c == C - 1 && cand.e != sys.right[r]) continue;
      if (r == R - 1 && cand.s != sys.bottom[c]) continue;
      st.H[r][c + 1] = cand.e;
      st.V[r + 1][c] = cand.s;
      walk(idx + 1);
    }
    st.H[r][c + 1] = PLUS;
    st.V[r + 1][c] = PLUS;
  };
  walk(0);
}

std::vector<LatticeState> enumerate_states(const LatticeSystem& sys, ScanOrder order) {
  std::vector<LatticeState> out;
  for_each_state(sys, [&](const LatticeState& st) { out.push_back(st); }, order);
  return out;
}

std::size_t count_states(const LatticeSystem& sys) {
  std::size_t n = 0;
  for_each_state(sys, [&](const LatticeState&) { ++n; });
  return n;
}

RatFunc partition_function_serial(const LatticeSystem& sys, ScanOrder order) {
  RatFunc z;
  for_each_state(sys, [&](const LatticeState& st) { z += state_weight(sys, st); }, order);
  return z;
}

namespace {

// One row sweep: given the vertical labels entering row r, emit every
// (exit labels, row weight) pair.
void row_completions(const LatticeSystem& sys, const std::vector<CompletionTable>& tables,
                     int r, const std::vector<Label>& vin,
                     const std::function<void(const std::vector<Label>&, const RatFunc&)>& emit) {
  const int C = sys.cols;
  std::vector<Label> vout(C, PLUS);
  const auto& table = table_of(tables, sys.row_family[r]);
  std::function<void(int, Label, const RatFunc&)> walk = [&](int c, Label west,
                                                             const RatFunc& acc) {
    if (c == C) {
      emit(vout, acc);
      return;
    }
    for (const auto& cand : table.at(vin[c], west)) {
      const RatFunc& wt = sys.weights[r][c][int(cand.p)];
      if (wt.is_zero()) continue;
      if (c == C - 1 && cand.e != sys.right[r]) continue;
      vout[c] = cand.s;
      walk(c + 1, cand.e, acc * wt);
    }
  };
  walk(0, sys.left[r], RatFunc(Poly::constant(1)));
}

}  // namespace

RatFunc partition_function(const LatticeSystem& sys, int jobs) {
  auto tables = tables_for(sys);
  using Layer = std::map<std::vector<Label>, RatFunc>;
  Layer layer;
  layer.emplace(sys.top, RatFunc(Poly::constant(1)));
  std::size_t work = 0;
  for (int r = 0; r < sys.rows; ++r) {
    std::vector<const Layer::value_type*> entries;
    entries.reserve(layer.size());
    for (const auto& kv : layer) entries.push_back(&kv);
    Layer next;
#ifdef _OPENMP
    if (jobs > 1 && entries.size() > 1) {
      std::vector<Layer> partial(static_cast<std::size_t>(jobs));
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
      for (long i = 0; i < long(entries.size()); ++i) {
        Layer& mine = partial[std::size_t(omp_get_thread_num())];
        row_completions(sys, tables, r, entries[std::size_t(i)]->first,
                        [&](const std::vector<Label>& vout, const RatFunc& wt) {
                          RatFunc val = entries[std::size_t(i)]->second * wt;
                          auto [it, fresh] = mine.emplace(vout, val);
                          if (!fresh) it->second += val;
                        });
      }
      for (auto& p : partial)
        for (auto& [vout, val] : p) {
          auto [it, fresh] = next.emplace(vout, val);
          if (!fresh) it->second += val;
        }
    } else
#endif
    {
      (void)jobs;
      for (const auto* kv : entries)
        row_completions(sys, tables, r, kv->first,
                        [&](const std::vector<Label>& vout, const RatFunc& wt) {
                          RatFunc val = kv->second * wt;
                          auto [it, fresh] = next.emplace(vout, val);
                          if (!fresh) it->second += val;
                        });
    }
    work += next.size();
    check_budget(work, "lattice transfer");
    layer = std::move(next);
  }
  auto it = layer.find(sys.bottom);
  return it == layer.end() ? RatFunc() : it->second;
}

}  // namespace grothlat
