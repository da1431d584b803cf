#include "grothlat/operators.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace grothlat {

namespace {

// Newton divided difference (f - s_i f)/(v_i - v_{i+1}), computed term by
// term: a monomial with exponents (a, b) on (v_i, v_{i+1}) contributes the
// geometric fan sign * sum_t v_i^{lo+t} v_{i+1}^{hi-1-t}, t = 0..hi-lo-1,
// so no polynomial division is ever needed.
Poly divided_difference(const Poly& p, VarKind axis, unsigned i) {
  const VarId vi(axis, i), vj(axis, i + 1);
  std::vector<std::pair<Monomial, Rat>> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    int a = 0, b = 0;
    Monomial rest;
    rest.factors.reserve(m.factors.size());
    for (const auto& f : m.factors) {
      if (f.first == vi)
        a = f.second;
      else if (f.first == vj)
        b = f.second;
      else
        rest.factors.push_back(f);
    }
    if (a == b) continue;
    const int lo = std::min(a, b), hi = std::max(a, b);
    const Rat coeff = a > b ? c : -c;
    const std::size_t pos = static_cast<std::size_t>(
        std::lower_bound(rest.factors.begin(), rest.factors.end(), vi,
                         [](const std::pair<VarId, int>& f, VarId v) {
                           return f.first < v;
                         }) -
        rest.factors.begin());
    for (int t = 0; t < hi - lo; ++t) {
      const int ei = lo + t, ej = hi - 1 - t;
      Monomial m2;
      m2.factors.reserve(rest.factors.size() + 2);
      m2.factors.assign(rest.factors.begin(),
                        rest.factors.begin() + static_cast<std::ptrdiff_t>(pos));
      if (ei > 0) m2.factors.emplace_back(vi, ei);
      if (ej > 0) m2.factors.emplace_back(vj, ej);
      m2.factors.insert(m2.factors.end(),
                        rest.factors.begin() + static_cast<std::ptrdiff_t>(pos),
                        rest.factors.end());
      out.emplace_back(std::move(m2), coeff);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return lex_less(x.first, y.first); });
  std::vector<std::pair<Monomial, Rat>> merged;
  merged.reserve(out.size());
  for (auto& t : out) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
    if (merged.back().second == 0) merged.pop_back();
  }
  return Poly::from_sorted(std::move(merged));
}

// Shared core [A f - B s_i f]/(v_i - v_{i+1}).  Since s_i f =
// f - (v_i - v_{i+1}) * dd(f), this equals B * dd(f) + c * f where
// c = (A - B)/(v_i - v_{i+1}) is constant for every operator here, so the
// whole quotient is assembled without any division.
RatFunc newton_quotient(const RatFunc& f, int i, VarKind axis, const Poly& B, const Poly& c,
                        bool prefactor) {
  // Clear f to the smallest s_i-invariant denominator so the quotient keeps
  // the structured shape: Dc = factorwise max(D, s_i D) satisfies s_i Dc = Dc.
  StructuredDenom Dc = StructuredDenom::factor_max(f.den(), f.den().swap_adjacent(axis,
                                                   static_cast<unsigned>(i)));
  const StructuredDenom ratio = Dc.divide_by(f.den());
  Poly p = ratio.is_one() ? f.num() : f.num() * ratio.expand();
  Poly quotient = B * divided_difference(p, axis, static_cast<unsigned>(i));
  if (!c.is_zero()) quotient += c * p;
  if (prefactor) {
    Dc.beta_pow += 2;
    Dc.q_pow += 2;
  }
  return RatFunc(std::move(quotient), std::move(Dc)).reduced();
}

}  // namespace

RatFunc demazure_core(const RatFunc& f, int i, VarKind axis, int da, bool prefactor) {
  VarId vi(axis, static_cast<unsigned>(i)), vj(axis, static_cast<unsigned>(i + 1));
  Poly q2 = Poly::term(mono_of(q_var(), 2), Rat(1));
  Poly B = one_plus_beta_var(vi) - q2 * one_plus_beta_var(vj);
  // A = (1 - q^2)(1 + beta v_{i+da}); (A - B)/(v_i - v_{i+1}) collapses to
  // -beta (da = 1) or -beta q^2 (da = 0).
  Poly c = da == 1 ? -beta_poly() : -(beta_poly() * q2);
  return newton_quotient(f, i, axis, B, c, prefactor);
}

RatFunc pi_op(int i, const RatFunc& f) { return demazure_core(f, i, VarKind::X, 1, false); }
RatFunc pi_inv(int i, const RatFunc& f) { return demazure_core(f, i, VarKind::X, 0, true); }
RatFunc pi_tilde(int i, const RatFunc& f) { return demazure_core(f, i, VarKind::Y, 1, true); }
RatFunc pi_tilde_inv(int i, const RatFunc& f) {
  return demazure_core(f, i, VarKind::Y, 0, false);
}

RatFunc newton_dd(const RatFunc& f, VarKind axis, int i) {
  return newton_quotient(f, i, axis, Poly::constant(1), Poly::zero(), false);
}

Poly newton_dd(const Poly& f, VarKind axis, int i) {
  return divided_difference(f, axis, static_cast<unsigned>(i));
}

Poly mu_op(int i, const Poly& f, VarKind axis) {
  return one_plus_beta_var(VarId(axis, static_cast<unsigned>(i))) *
         divided_difference(f, axis, static_cast<unsigned>(i));
}

Poly demazure_beta(int i, const Poly& f, VarKind axis) {
  // dd((1 + beta v_{i+1}) f) = (1 + beta v_i) dd(f) - beta f by the twisted
  // Leibniz rule, which skips the full product on the left.
  return mu_op(i, f, axis) - beta_poly() * f;
}

}  // namespace grothlat
