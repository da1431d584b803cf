#include <cassert>
#include <stdexcept>

#include "grothlat/lattice.hpp"
#include "grothlat/ybe.hpp"

namespace grothlat {

std::string label_str(Label l) {
  if (l == PLUS) return "+";
  return std::to_string(l);
}

std::optional<Pattern> classify(AdjClass cls, Label n, Label w, Label e, Label s) {
  if (n == w && w == e && e == s) return Pattern::A;
  // B patterns are shared by both adjacency classes.
  if (n == s && w == e && n != w) return w > n ? Pattern::B1 : Pattern::B2;
  if (cls == AdjClass::RECT) {
    if (n == w && e == s && n != e) return n > e ? Pattern::C1 : Pattern::C2;
  } else {
    if (n == e && w == s && n != w) return w > n ? Pattern::C1 : Pattern::C2;
  }
  return std::nullopt;
}

AdjClass adj_class_of(Family f) {
  return f == Family::SSTAR ? AdjClass::RECT_STAR : AdjClass::RECT;
}

Flow flow_of(Family f) {
  switch (f) {
    case Family::SSTAR: return Flow::IN_SE;
    case Family::SPRIME: return Flow::IN_NE;
    default: return Flow::IN_WS;
  }
}

namespace {

// The SSTAR argument row (+) ominus(col) keeps a structured denominator only
// when col is a bare variable; every builder passes one.
VarId plain_var_of(const RatFunc& r) {
  if (r.is_poly() && r.num().size() == 1) {
    const auto& [m, c] = r.num().terms().front();
    if (c == 1 && m.factors.size() == 1 && m.factors[0].second == 1)
      return m.factors[0].first;
  }
  throw std::invalid_argument("SSTAR column parameter must be a plain variable");
}

Poly beta2_q2() {
  Poly bq = beta_poly() * q_poly();
  return bq * bq;
}

}  // namespace

std::array<RatFunc, 5> cell_weights(Family f, const RatFunc& row, const RatFunc& col) {
  std::array<RatFunc, 5> w;
  const Poly one = Poly::constant(1);
  const Poly q2 = q_poly() * q_poly();
  if (f == Family::SPRIME) {
    RatFunc g = oplus(row, col);
    w[int(Pattern::A)] = RatFunc(one);
    w[int(Pattern::B1)] = RatFunc();  // inadmissible in the branching row
    w[int(Pattern::B2)] = g;
    w[int(Pattern::C1)] = one_plus_beta(g);
    w[int(Pattern::C2)] = RatFunc(one);
    return w;
  }
  RatFunc g = (f == Family::SSTAR) ? oplus(row, ominus_var(plain_var_of(col)))
                                   : oplus(row, col);
  RatFunc shifted = one_plus_beta(g);                     // 1 + beta*g
  w[int(Pattern::A)] = RatFunc(one) - shifted * RatFunc(q2);
  RatFunc small = g;                                      // bare argument
  RatFunc big = g * RatFunc(beta2_q2());                  // beta^2 q^2 * argument
  if (f == Family::S) std::swap(small, big);              // S swaps the B weights
  w[int(Pattern::B1)] = small;
  w[int(Pattern::B2)] = big;
  w[int(Pattern::C1)] = shifted * RatFunc(one_minus_q2());
  w[int(Pattern::C2)] = RatFunc(one_minus_q2());
  return w;
}

////////////////////////////
// R-vertices             //
////////////////////////////

std::optional<Pattern> classify_r(RFam fam, Label sw, Label nw, Label ne, Label se) {
  if (sw == nw && nw == ne && ne == se) return Pattern::A;
  if (sw == ne && nw == se && sw != nw) return sw < nw ? Pattern::B1 : Pattern::B2;
  const bool rowlike = (fam == RFam::ROW || fam == RFam::SSTAR_ROW);
  if (rowlike) {
    if (nw == ne && sw == se && sw != nw) return nw > sw ? Pattern::C1 : Pattern::C2;
  } else {
    if (sw == nw && ne == se && sw != ne) return sw > ne ? Pattern::C1 : Pattern::C2;
  }
  return std::nullopt;
}

RatFunc r_weight(RFam fam, Pattern p, const RatFunc& pi, const RatFunc& pj) {
  const Poly one = Poly::constant(1);
  const Poly q2 = q_poly() * q_poly();
  const RatFunc shift_i = one_plus_beta(pi);
  const RatFunc shift_j = one_plus_beta(pj);
  if (fam == RFam::RHOMBUS) {
    RatFunc h = oplus(pi, pj);
    switch (p) {
      case Pattern::A: return RatFunc(one) - one_plus_beta(h) * RatFunc(q2);
      case Pattern::B1: return h;
      case Pattern::B2: return h * RatFunc(beta2_q2());
      case Pattern::C1: return one_plus_beta(h) * RatFunc(one_minus_q2());
      case Pattern::C2: return RatFunc(one_minus_q2());
    }
  }
  RatFunc diff;  // the B-pattern argument
  RatFunc a_weight;
  switch (fam) {
    case RFam::ROW:
      diff = pj - pi;
      a_weight = shift_i - shift_j * RatFunc(q2);
      break;
    case RFam::SSTAR_ROW:
      diff = pi - pj;
      a_weight = shift_j - shift_i * RatFunc(q2);
      break;
    case RFam::COL:
      diff = pj - pi;
      a_weight = shift_i - shift_j * RatFunc(q2);
      break;
    default:
      throw std::logic_error("unreachable");
  }
  // ROW keeps the bare difference on B1; SSTAR_ROW and COL put beta^2 q^2
  // there instead.
  RatFunc b_small = diff;
  RatFunc b_big = diff * RatFunc(beta2_q2());
  if (fam != RFam::ROW) std::swap(b_small, b_big);
  switch (p) {
    case Pattern::A: return a_weight;
    case Pattern::B1: return b_small;
    case Pattern::B2: return b_big;
    case Pattern::C1: return shift_j * RatFunc(one_minus_q2());
    case Pattern::C2: return shift_i * RatFunc(one_minus_q2());
  }
  throw std::logic_error("unreachable");
}

RatFunc r_vertex(RFam fam, Label sw, Label nw, Label ne, Label se,
                 const RatFunc& pi, const RatFunc& pj) {
  auto p = classify_r(fam, sw, nw, ne, se);
  if (!p) return RatFunc();
  return r_weight(fam, *p, pi, pj);
}

}  // namespace grothlat
