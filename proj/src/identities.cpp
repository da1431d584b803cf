#include "grothlat/identities.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "grothlat/pipedreams.hpp"

namespace grothlat {

namespace {

std::vector<RatFunc> var_params(VarKind kind, int n) {
  std::vector<RatFunc> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    out.emplace_back(Poly::variable(VarId(kind, static_cast<unsigned>(i))));
  return out;
}

std::map<VarId, VarId> swap_alphabets(int n) {
  std::map<VarId, VarId> m;
  for (int i = 1; i <= n; ++i) {
    m[xvar(static_cast<unsigned>(i))] = yvar(static_cast<unsigned>(i));
    m[yvar(static_cast<unsigned>(i))] = xvar(static_cast<unsigned>(i));
  }
  return m;
}

}  // namespace

////////////////////////////
// closed products        //
////////////////////////////

Poly base_product(int n) {
  Poly f = one_minus_q2().pow(static_cast<unsigned>(n));
  const Poly q2 = q_poly() * q_poly();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Poly xi = Poly::variable(xvar(static_cast<unsigned>(i)));
      const Poly yj = Poly::variable(yvar(static_cast<unsigned>(j)));
      if (i + j <= n)
        f *= oplus(xi, yj);
      else if (i + j > n + 1)
        f *= Poly::constant(1) - q2 * one_plus_beta(xi) * one_plus_beta(yj);
    }
  return f;
}

Poly base_product_q0(int n) {
  Poly f = Poly::constant(1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j + i <= n; ++j)
      f *= oplus(Poly::variable(xvar(static_cast<unsigned>(i))),
                 Poly::variable(yvar(static_cast<unsigned>(j))));
  return f;
}

////////////////////////////
// operator routes        //
////////////////////////////

namespace {

// Smallest i with w s_i longer than w (0 for the longest element).
int first_right_ascent(const Perm& w) {
  for (int i = 1; i < w.n(); ++i)
    if (w(i) < w(i + 1)) return i;
  return 0;
}

// Smallest i with s_i w longer than w.
int first_left_ascent(const Perm& w) {
  return first_right_ascent(inverse(w));
}

}  // namespace

// The descending chains are built recursively through the caches so that
// different targets share every common ancestor.

RatFunc grothendieck_q(const Perm& w) {
  static std::map<Perm, RatFunc> cache;
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  const int a = first_right_ascent(w);
  RatFunc f = a == 0 ? RatFunc(base_product(w.n()))
                     : pi_op(a, grothendieck_q(right_s(w, a)));
  return cache.emplace(w, std::move(f)).first->second;
}

Poly grothendieck_beta(const Perm& w) {
  static std::map<Perm, Poly> cache;
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  const int a = first_right_ascent(w);
  Poly f = a == 0 ? base_product_q0(w.n())
                  : demazure_beta(a, grothendieck_beta(right_s(w, a)));
  return cache.emplace(w, std::move(f)).first->second;
}

RatFunc dual_q(const Perm& w) {
  static std::map<Perm, RatFunc> cache;
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  const int a = first_left_ascent(w);
  RatFunc f = a == 0 ? RatFunc(base_product(w.n()))
                     : pi_tilde_inv(a, dual_q(left_s(a, w)));
  return cache.emplace(w, std::move(f)).first->second;
}

Poly dual_beta(const Perm& w) {
  static std::map<Perm, Poly> cache;
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  const int a = first_right_ascent(w);
  Poly f = a == 0 ? base_product_q0(w.n()) : mu_op(a, dual_beta(right_s(w, a)));
  return cache.emplace(w, std::move(f)).first->second;
}

Poly dual_beta_bruhat(const Perm& w) {
  Poly total;
  const Poly beta = beta_poly();
  for (const Perm& v : all_perms(w.n()))
    if (bruhat_leq(w, v))
      total += beta.pow(static_cast<unsigned>(length(v) - length(w))) *
               grothendieck_beta(v);
  return total;
}

RatFunc biaxial_q(const Perm& v, const Perm& w) {
  static std::map<std::pair<Perm, Perm>, RatFunc> cache;
  const auto key = std::make_pair(v, w);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  RatFunc f = grothendieck_q(w);
  for (int i : lex_first_reduced_word(v)) f = pi_tilde_inv(i, f);
  return cache.emplace(key, std::move(f)).first->second;
}

Poly biaxial_beta(const Perm& v, const Perm& w) {
  static std::map<std::pair<Perm, Perm>, Poly> cache;
  const auto key = std::make_pair(v, w);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Poly f = grothendieck_beta(w);
  for (int i : lex_first_reduced_word(v)) f = mu_op(i, f, VarKind::Y);
  return cache.emplace(key, std::move(f)).first->second;
}

////////////////////////////
// lattice routes         //
////////////////////////////

RatFunc grothendieck_q_lattice(const Perm& w, int jobs) {
  return partition_function(build_system_G(Perm::identity(w.n()), w, false), jobs);
}

RatFunc biaxial_q_lattice(const Perm& v, const Perm& w, int jobs) {
  return partition_function(build_system_G(v, w, false), jobs);
}

RatFunc dual_q_lattice(const Perm& w, int jobs) {
  const int n = w.n();
  return partition_function(
      build_system_G(compose(Perm::longest(n), inverse(w)), Perm::longest(n), false),
      jobs);
}

////////////////////////////
// branching data         //
////////////////////////////

Poly branching_coeff_formula(const Perm& w, const Perm& v) {
  const int n = w.n();
  if (!(bruhat_leq(w_min_of(w), v) && weak_left_leq(v, w_max_of(w))))
    return Poly::zero();
  const std::vector<int> ew = eta_of(w);
  const std::vector<int> ev = eta_of(v);
  Poly prod = Poly::constant(1);
  for (int i = 1; i <= n; ++i) {
    const int a = ew[static_cast<std::size_t>(i - 1)];
    // Compare against eta(v) shifted one column left; the vacated last
    // position reads as neutral, which outranks every color.
    const int b = (i < n) ? ev[static_cast<std::size_t>(i)] : n + 1;
    if (a == b)
      prod *= oplus(Poly::variable(xvar(1)),
                    Poly::variable(yvar(static_cast<unsigned>(i))));
    else if (a > b)
      prod *= one_plus_beta(oplus(Poly::variable(xvar(1)),
                                  Poly::variable(yvar(static_cast<unsigned>(i)))));
  }
  return prod;
}

Poly branching_coeff_lattice(const Perm& w, const Perm& v) {
  return partition_function(build_branch_row(w, v)).as_poly();
}

////////////////////////////
// identity checks        //
////////////////////////////

CheckResult check_routes(const Perm& w, int jobs) {
  CheckResult res;
  const RatFunc op = grothendieck_q(w);
  if (!(op == grothendieck_q_lattice(w, jobs)))
    res.fail("lattice value differs from operator chain at " + perm_str(w));
  const Poly q0 = op.specialize_q_zero();
  if (q0 != grothendieck_beta(w))
    res.fail("q = 0 specialization differs from one-parameter chain at " +
             perm_str(w));
  if (q0 != grothendieck_via_pd(w))
    res.fail("pipe dream sum differs at " + perm_str(w));
  return res;
}

CheckResult check_hudson(const Perm& w) {
  CheckResult res;
  const int n = w.n();
  const RatFunc expect{grothendieck_beta(w)};
  if (!(partition_function(build_system_G(Perm::identity(n), w, true)) == expect))
    res.fail("q = 0 system with rows x differs at " + perm_str(w));
  const LatticeSystem flipped =
      build_rect_system(Perm::identity(n), inverse(w), var_params(VarKind::Y, n),
                        var_params(VarKind::X, n), true);
  if (!(partition_function(flipped) == expect))
    res.fail("q = 0 system with rows y differs at " + perm_str(w));
  return res;
}

CheckResult check_left_action(const Perm& w) {
  CheckResult res;
  for (int i = 1; i < w.n(); ++i) {
    if (!left_descent(w, i)) continue;
    if (grothendieck_beta(left_s(i, w)) !=
        demazure_beta(i, grothendieck_beta(w), VarKind::Y))
      res.fail("left action mismatch at i = " + std::to_string(i) + ", w = " +
               perm_str(w));
  }
  return res;
}

CheckResult check_dual(const Perm& w, int jobs) {
  CheckResult res;
  const int n = w.n();
  const RatFunc hq = dual_q(w);
  if (!(hq == dual_q_lattice(w, jobs)))
    res.fail("dual lattice value differs from operator chain at " + perm_str(w));

  const Poly hb = dual_beta(w);
  if (hq.specialize_q_zero() != hb)
    res.fail("dual q = 0 specialization differs at " + perm_str(w));

  const LatticeSystem flipped =
      build_rect_system(compose(Perm::longest(n), w), Perm::longest(n),
                        var_params(VarKind::Y, n), var_params(VarKind::X, n), true);
  if (!(partition_function(flipped, jobs) == RatFunc(hb)))
    res.fail("dual q = 0 system with rows y differs at " + perm_str(w));

  if (dual_beta_bruhat(w) != hb)
    res.fail("Bruhat sum expansion differs at " + perm_str(w));

  // (-1)^l(w) * prod_{i+j<=n} (1 + beta (x_i (+) y_j)) * G_w((-)x; (-)y).
  std::map<VarId, RatFunc> negate;
  Poly kernel = Poly::constant(1);
  for (int i = 1; i <= n; ++i) {
    negate[xvar(static_cast<unsigned>(i))] = ominus_var(xvar(static_cast<unsigned>(i)));
    negate[yvar(static_cast<unsigned>(i))] = ominus_var(yvar(static_cast<unsigned>(i)));
    for (int j = 1; i + j <= n; ++j)
      kernel *= one_plus_beta(oplus(Poly::variable(xvar(static_cast<unsigned>(i))),
                                    Poly::variable(yvar(static_cast<unsigned>(j)))));
  }
  RatFunc reflected = substitute(grothendieck_beta(w), negate) * RatFunc(kernel);
  if (length(w) % 2 != 0) reflected = reflected.scaled(-1);
  if (!(reflected == RatFunc(hb)))
    res.fail("kernel reflection formula differs at " + perm_str(w));

  if (dual_beta(inverse(w)).rename(swap_alphabets(n)) != hb)
    res.fail("transpose symmetry differs at " + perm_str(w));
  return res;
}

CheckResult check_vanishing(int n) {
  CheckResult res;
  for (const Perm& w : all_perms(n))
    for (const Perm& v : all_perms(n)) {
      if (bruhat_leq(v, w)) continue;
      if (!biaxial_beta(v, w).is_zero())
        res.fail("expected vanishing at v = " + perm_str(v) + ", w = " +
                 perm_str(w));
    }
  return res;
}

CheckResult check_cauchy_kernel(const Perm& w) {
  CheckResult res;
  const int n = w.n();
  const LatticeSystem sys = build_cauchy_system(w, Perm::identity(n));
  const std::vector<LatticeState> states = enumerate_states(sys);
  const RatFunc expect{grothendieck_beta(w)};

  RatFunc total;
  for (const LatticeState& st : states) total = total + state_weight(sys, st);
  if (!(total == expect))
    res.fail("kernel system value differs from G at " + perm_str(w));
  if (!(partition_function(sys) == total))
    res.fail("transfer and direct enumerations disagree at " + perm_str(w));

  // Group the states by the color word on the midline.
  struct Bucket {
    std::map<std::string, RatFunc> tops, bots;
    std::size_t count = 0;
  };
  std::map<Perm, Bucket> buckets;
  for (const LatticeState& st : states) {
    const std::vector<Label>& mid = st.V[static_cast<std::size_t>(n)];
    std::vector<int> word;
    for (Label l : mid) {
      if (l == PLUS) {
        res.fail("midline carries a neutral edge at " + perm_str(w));
        return res;
      }
      word.push_back(l);
    }
    Bucket& b = buckets[perm_of_eta(word)];
    b.count++;
    std::string tkey, bkey;
    for (int r = 0; r < 2 * n; ++r)
      for (Label l : st.H[static_cast<std::size_t>(r)])
        (r < n ? tkey : bkey) += label_str(l) + ".";
    for (int r = 0; r <= 2 * n; ++r)
      for (Label l : st.V[static_cast<std::size_t>(r)]) {
        if (r <= n) tkey += label_str(l) + ",";
        if (r >= n) bkey += label_str(l) + ",";
      }
    b.tops.emplace(tkey, state_weight_rows(sys, st, 0, n));
    b.bots.emplace(bkey, state_weight_rows(sys, st, n, 2 * n));
  }

  std::map<VarId, VarId> to_yz;
  std::map<VarId, RatFunc> y_to_neg_z;
  for (int i = 1; i <= n; ++i) {
    to_yz[xvar(static_cast<unsigned>(i))] = yvar(static_cast<unsigned>(i));
    to_yz[yvar(static_cast<unsigned>(i))] = zvar(static_cast<unsigned>(i));
    y_to_neg_z[yvar(static_cast<unsigned>(i))] = ominus_var(zvar(static_cast<unsigned>(i)));
  }

  RatFunc assembled;
  for (const Perm& v : all_perms(n)) {
    const RatFunc top_expect = substitute(biaxial_beta(inverse(v), w), y_to_neg_z);
    const auto it = buckets.find(v);
    if (it == buckets.end()) {
      if (!top_expect.is_zero())
        res.fail("missing midline class with nonzero coefficient, v = " +
                 perm_str(v) + ", w = " + perm_str(w));
      continue;
    }
    const Bucket& b = it->second;
    RatFunc tsum, bsum;
    for (const auto& [key, wgt] : b.tops) tsum = tsum + wgt;
    for (const auto& [key, wgt] : b.bots) bsum = bsum + wgt;
    if (!(tsum == top_expect))
      res.fail("top half sum differs in class v = " + perm_str(v) + " for w = " +
               perm_str(w));
    const RatFunc bot_expect{grothendieck_beta(v).rename(to_yz)};
    if (!(bsum == bot_expect))
      res.fail("bottom half sum differs in class v = " + perm_str(v) + " for w = " +
               perm_str(w));
    if (b.count != b.tops.size() * b.bots.size())
      res.fail("midline class does not factor, v = " + perm_str(v) + ", w = " +
               perm_str(w));
    assembled = assembled + bot_expect * top_expect;
  }
  if (!(assembled == expect))
    res.fail("assembled two-alphabet expansion differs at " + perm_str(w));
  return res;
}

CheckResult check_biaxial_cauchy(const Perm& v, const Perm& w) {
  CheckResult res;
  const int n = w.n();
  const Poly lhs = biaxial_beta(v, w);
  if (!bruhat_leq(v, w)) {
    if (!lhs.is_zero())
      res.fail("expected vanishing at v = " + perm_str(v) + ", w = " + perm_str(w));
    return res;
  }
  std::map<VarId, VarId> x_to_z;
  std::map<VarId, RatFunc> y_to_neg_z;
  for (int i = 1; i <= n; ++i) {
    x_to_z[xvar(static_cast<unsigned>(i))] = zvar(static_cast<unsigned>(i));
    y_to_neg_z[yvar(static_cast<unsigned>(i))] = ominus_var(zvar(static_cast<unsigned>(i)));
  }
  RatFunc total;
  for (const Perm& u : all_perms(n)) {
    if (!(bruhat_leq(v, u) && bruhat_leq(u, w))) continue;
    total = total + RatFunc(biaxial_beta(v, u).rename(x_to_z)) *
                        substitute(biaxial_beta(u, w), y_to_neg_z);
  }
  if (!(total == RatFunc(lhs)))
    res.fail("two-sided expansion differs at v = " + perm_str(v) + ", w = " +
             perm_str(w));
  return res;
}

CheckResult check_cauchy_w0(int n) {
  CheckResult res;
  const Perm w0 = Perm::longest(n);
  std::map<VarId, VarId> x_to_y;
  for (int i = 1; i <= n; ++i) x_to_y[xvar(static_cast<unsigned>(i))] = yvar(static_cast<unsigned>(i));
  Poly rhs;
  for (const Perm& v : all_perms(n)) {
    Poly gv = grothendieck_beta(v);
    Poly hv = dual_beta(compose(v, w0));
    for (int i = 1; i <= n; ++i) {
      gv = gv.substitute_zero(yvar(static_cast<unsigned>(i)));
      hv = hv.substitute_zero(yvar(static_cast<unsigned>(i)));
    }
    rhs += gv.rename(x_to_y) * hv;
  }
  if (rhs != grothendieck_beta(w0))
    res.fail("single-alphabet expansion differs at n = " + std::to_string(n));
  return res;
}

CheckResult check_pair_boundary_emptiness(int n) {
  CheckResult res;
  for (const Perm& w : all_perms(n))
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int c = 1; c <= n; ++c) {
          LatticeSystem sys = build_cauchy_system(w, Perm::identity(n));
          sys.right[static_cast<std::size_t>(n - i)] = c;
          sys.right[static_cast<std::size_t>(n - 1 + j)] = c;
          if (count_states(sys) != 0) {
            res.fail("unexpected state: w = " + perm_str(w) + ", i = " +
                     std::to_string(i) + ", j = " + std::to_string(j) + ", c = " +
                     std::to_string(c));
            return res;
          }
        }
  return res;
}

CheckResult check_interleaved_row_emptiness(int n, int stride) {
  CheckResult res;
  if (stride < 1) stride = 1;
  const std::vector<Perm> perms = all_perms(n);
  const std::vector<VarId> cols = [n] {
    std::vector<VarId> out;
    for (int c = 1; c <= n; ++c) out.push_back(zvar(static_cast<unsigned>(c)));
    return out;
  }();
  long long idx = 0;
  for (unsigned mask = 0; mask < (1u << (2 * n)); ++mask) {
    if (std::popcount(mask) != n) continue;
    std::vector<int> starred, plain;
    for (int r = 0; r < 2 * n; ++r)
      ((mask >> r) & 1u ? starred : plain).push_back(r);
    for (const Perm& sigma : perms)
      for (const Perm& tau : perms) {
        // Color of starred row starred[k] is sigma(k+1); each color's starred
        // row must sit above its plain row.
        std::vector<int> srow(static_cast<std::size_t>(n)), prow(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
          srow[static_cast<std::size_t>(sigma(k + 1) - 1)] = starred[static_cast<std::size_t>(k)];
          prow[static_cast<std::size_t>(tau(k + 1) - 1)] = plain[static_cast<std::size_t>(k)];
        }
        bool admissible = true;
        for (int c = 0; c < n && admissible; ++c)
          admissible = srow[static_cast<std::size_t>(c)] < prow[static_cast<std::size_t>(c)];
        if (!admissible) continue;
        for (int r1 : starred)
          for (int r2 : plain) {
            if (r1 >= r2) continue;
            for (int c = 1; c <= n; ++c) {
              if (idx++ % stride != 0) continue;
              std::vector<RowSpec> rows(static_cast<std::size_t>(2 * n));
              for (int r = 0; r < 2 * n; ++r) {
                RowSpec& spec = rows[static_cast<std::size_t>(r)];
                const bool is_starred = (mask >> r) & 1u;
                spec.fam = is_starred ? Family::SSTAR : Family::S;
                spec.param = RatFunc(Poly::variable(
                    r < n ? xvar(static_cast<unsigned>(n - r))
                          : yvar(static_cast<unsigned>(r - n + 1))));
                for (int col = 0; col < n; ++col) {
                  const auto& owner = is_starred ? srow : prow;
                  if (owner[static_cast<std::size_t>(col)] == r) spec.left = col + 1;
                }
              }
              LatticeSystem sys = build_mixed_rows(rows, cols, n, true);
              sys.right[static_cast<std::size_t>(r1)] = c;
              sys.right[static_cast<std::size_t>(r2)] = c;
              if (count_states(sys) != 0) {
                res.fail("unexpected state: mask = " + std::to_string(mask) +
                         ", rows " + std::to_string(r1) + "/" + std::to_string(r2) +
                         ", c = " + std::to_string(c));
                return res;
              }
            }
          }
      }
  }
  return res;
}

CheckResult check_branching(const Perm& w) {
  CheckResult res;
  const int n = w.n();
  const std::vector<Perm> members = interval_set(w);
  const std::set<Perm> interval(members.begin(), members.end());
  std::map<VarId, VarId> shift;
  for (int i = 1; i < n; ++i) shift[xvar(static_cast<unsigned>(i))] = xvar(static_cast<unsigned>(i + 1));
  Poly total;
  for (const Perm& v : all_perms(n)) {
    const Poly tf = branching_coeff_formula(w, v);
    if (tf != branching_coeff_lattice(w, v))
      res.fail("row coefficient formula differs from one-row system, w = " +
               perm_str(w) + ", v = " + perm_str(v));
    const bool member = interval.count(v) != 0;
    if (member == tf.is_zero())
      res.fail("row coefficient support mismatch, w = " + perm_str(w) + ", v = " +
               perm_str(v));
    if (member) total += tf * grothendieck_beta(w_minus_of(v)).rename(shift);
  }
  if (total != grothendieck_beta(w))
    res.fail("assembled first-row expansion differs at " + perm_str(w));
  return res;
}

CheckResult check_interval_threeway(const Perm& w) {
  CheckResult res;
  const std::vector<Perm> by_masks = lemma_A_set(w);
  const std::vector<Perm> by_orders = interval_set(w);
  const std::set<Perm> a(by_masks.begin(), by_masks.end());
  const std::set<Perm> b(by_orders.begin(), by_orders.end());
  std::set<Perm> c;
  for (const Perm& v : all_perms(w.n()))
    if (!branching_coeff_lattice(w, v).is_zero()) c.insert(v);
  if (a != b) res.fail("mask set differs from order interval at " + perm_str(w));
  if (b != c) res.fail("order interval differs from system support at " + perm_str(w));
  return res;
}

CheckResult check_grassmannian_pairs(int n) {
  CheckResult res;
  const std::vector<Perm> perms = all_perms(n);
  const auto rows_partition = [](const Perm& v, int b) -> std::optional<std::vector<int>> {
    for (int i = 1; i < v.n(); ++i)
      if (i != b && v(i) > v(i + 1)) return std::nullopt;
    std::vector<int> nu(static_cast<std::size_t>(b));
    for (int i = 1; i <= b; ++i) nu[static_cast<std::size_t>(b - i)] = v(i) - i;
    return nu;
  };
  for (const Perm& w : perms) {
    int descents = 0;
    for (int i = 1; i < n; ++i)
      if (w(i) > w(i + 1)) descents++;
    if (descents != 1) continue;
    const GrassmannianData gd = grassmannian_data(w);
    const Perm lo = w_min_of(w);
    const Perm hi = w_max_of(w);
    for (const Perm& v : perms) {
      const auto nu = rows_partition(v, gd.b);
      if (!nu) continue;
      const bool member = bruhat_leq(lo, v) && weak_left_leq(v, hi);
      if (member != interleaves(gd.lambda, *nu, gd.b))
        res.fail("interleaving mismatch at w = " + perm_str(w) + ", v = " +
                 perm_str(v));
    }
  }
  return res;
}

CheckResult check_pd_bijection(const Perm& w) {
  CheckResult res;
  const int n = w.n();
  const RatFunc expect{grothendieck_beta(w)};
  const Poly beta = beta_poly();

  // Group every pipe dream with product w by both reductions.
  std::map<PipeDream, RatFunc> first_fibers, last_fibers;
  for (const PipeDream& pd : enumerate_pd(w)) {
    const Poly wt = pd_weight(pd);
    int removed = 0;
    const PipeDream rf = reduce_sw(pd, &removed);
    first_fibers[rf] += RatFunc(wt * beta.pow(static_cast<unsigned>(removed)));
    removed = 0;
    const PipeDream rl = reduce_ne(pd, &removed);
    last_fibers[rl] += RatFunc(wt * beta.pow(static_cast<unsigned>(removed)));
  }

  const auto run_side = [&](const LatticeSystem& sys, bool transposed,
                            const std::map<PipeDream, RatFunc>& fibers,
                            const char* tag) {
    std::set<PipeDream> seen;
    RatFunc total;
    for (const LatticeState& st : enumerate_states(sys)) {
      const PipeDream pd = transposed ? state_to_pd(sys, st) : state_to_pd_direct(sys, st);
      if (!is_reduced(pd)) {
        res.fail(std::string(tag) + ": state maps to a nonreduced dream, w = " + perm_str(w));
        continue;
      }
      if (permutation_of(pd) != w)
        res.fail(std::string(tag) + ": state maps outside the family, w = " + perm_str(w));
      if (!seen.insert(pd).second)
        res.fail(std::string(tag) + ": two states share a dream, w = " + perm_str(w));
      if (transposed) {
        const LatticeState back = pd_to_state(pd);
        if (back.H != st.H || back.V != st.V)
          res.fail(std::string(tag) + ": edge reconstruction differs, w = " + perm_str(w));
      }
      const RatFunc weight = state_weight(sys, st);
      const auto it = fibers.find(pd);
      if (it == fibers.end()) {
        res.fail(std::string(tag) + ": state dream has an empty fiber, w = " + perm_str(w));
        continue;
      }
      if (!(weight == it->second))
        res.fail(std::string(tag) + ": state weight differs from fiber sum, w = " + perm_str(w));
      total = total + weight;
    }
    if (seen.size() != fibers.size())
      res.fail(std::string(tag) + ": state count differs from reduced dream count, w = " +
               perm_str(w));
    if (!(total == expect))
      res.fail(std::string(tag) + ": system value differs from the polynomial, w = " +
               perm_str(w));
  };

  run_side(build_rect_system(Perm::identity(n), inverse(w), var_params(VarKind::Y, n),
                             var_params(VarKind::X, n), true),
           true, first_fibers, "rows-y");
  run_side(build_system_G(Perm::identity(n), w, true), false, last_fibers, "rows-x");
  return res;
}

CheckResult check_hecke_relations(int n, int trials, unsigned seed) {
  CheckResult res;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> term_count(3, 6);
  std::uniform_int_distribution<int> exponent(0, 2);
  std::uniform_int_distribution<int> coeff(-3, 3);

  std::vector<VarId> vars;
  for (int i = 1; i <= n; ++i) {
    vars.push_back(xvar(static_cast<unsigned>(i)));
    vars.push_back(yvar(static_cast<unsigned>(i)));
  }
  vars.push_back(beta_var());
  vars.push_back(q_var());

  const auto random_poly = [&] {
    Poly p;
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
      int c = coeff(rng);
      if (c == 0) c = 1;
      Poly term = Poly::constant(c);
      for (VarId v : vars) {
        const int e = exponent(rng);
        if (e > 0) term *= Poly::variable(v).pow(static_cast<unsigned>(e));
      }
      p += term;
    }
    return p;
  };

  const Poly b = beta_poly();
  const Poly q2 = q_poly() * q_poly();
  const RatFunc b_split{b * (Poly::constant(1) - q2)};  // beta (1 - q^2)
  const RatFunc b2q2{b * b * q2};

  for (int t = 0; t < trials; ++t) {
    const Poly p = random_poly();
    const RatFunc f{p};
    for (int i = 1; i < n; ++i) {
      // (pi_i + beta)(pi_i - beta q^2) f = 0, expanded.
      const RatFunc a = pi_op(i, f);
      if (!(pi_op(i, a) + a * b_split - f * b2q2).is_zero())
        res.fail("x-side quadratic fails at i = " + std::to_string(i) +
                 ", trial " + std::to_string(t));
      // beta^2 q^2 (pi~_i + 1/(beta q^2))(pi~_i - 1/beta) f = 0, expanded.
      const RatFunc at = pi_tilde(i, f);
      if (!(pi_tilde(i, at) * b2q2 + at * b_split - f).is_zero())
        res.fail("y-side quadratic fails at i = " + std::to_string(i) +
                 ", trial " + std::to_string(t));
      // Classical divided differences: square zero and the Leibniz exchange.
      const Poly dd = newton_dd(p, VarKind::X, i);
      if (!newton_dd(dd, VarKind::X, i).is_zero())
        res.fail("divided difference square fails at i = " + std::to_string(i));
      const Poly xi = Poly::variable(xvar(static_cast<unsigned>(i)));
      const Poly xi1 = Poly::variable(xvar(static_cast<unsigned>(i + 1)));
      if (xi * dd != newton_dd(xi1 * p, VarKind::X, i) + p)
        res.fail("divided difference exchange fails at i = " + std::to_string(i));
      // The two alphabets commute.
      for (int j = 1; j < n; ++j)
        if (!(pi_op(i, pi_tilde(j, f)) == pi_tilde(j, pi_op(i, f))))
          res.fail("alphabet commutation fails at i = " + std::to_string(i) +
                   ", j = " + std::to_string(j));
    }
    for (int i = 1; i + 1 < n; ++i) {
      if (!(pi_op(i, pi_op(i + 1, pi_op(i, f))) ==
            pi_op(i + 1, pi_op(i, pi_op(i + 1, f)))))
        res.fail("x-side braid fails at i = " + std::to_string(i) + ", trial " +
                 std::to_string(t));
      if (!(pi_tilde(i, pi_tilde(i + 1, pi_tilde(i, f))) ==
            pi_tilde(i + 1, pi_tilde(i, pi_tilde(i + 1, f)))))
        res.fail("y-side braid fails at i = " + std::to_string(i) + ", trial " +
                 std::to_string(t));
    }
  }
  return res;
}

}  // namespace grothlat
