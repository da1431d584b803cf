#include <sstream>
#include <stdexcept>

#include "grothlat/lattice.hpp"
#include "grothlat/twist.hpp"
#include "grothlat/ybe.hpp"

namespace grothlat {

std::array<std::array<Poly, 4>, 4> trig_r_matrix() {
  const Poly z = Poly::variable(zvar(1));
  const Poly q = q_poly();
  const Poly one = Poly::constant(1);
  const Poly zq = z - one;  // (z-1)
  std::array<std::array<Poly, 4>, 4> m;
  m[0][0] = one - q * q * z;
  m[1][1] = zq * q;
  m[1][2] = one_minus_q2();
  m[2][1] = one_minus_q2() * z;
  m[2][2] = zq * q;
  m[3][3] = one - q * q * z;
  return m;
}

std::array<std::array<RatFunc, 4>, 4> twisted_r_matrix() {
  auto r = trig_r_matrix();
  // Half-exponent of (q beta) contributed by F_21 on the left and by F^{-1}
  // on the right; both give [0, +1, -1, 0] on the tensor basis.
  constexpr int e[4] = {0, 1, -1, 0};
  const Poly qb = q_poly() * beta_poly();
  std::array<std::array<RatFunc, 4>, 4> out;
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) {
      if (r[u][v].is_zero()) continue;
      const int twice = e[u] + e[v];
      if (twice % 2 != 0) throw std::logic_error("twist: odd q*beta exponent");
      const int k = twice / 2;
      if (k >= 0) {
        out[u][v] = RatFunc(r[u][v] * qb.pow(unsigned(k)));
      } else {
        StructuredDenom d;
        d.beta_pow = d.q_pow = -k;
        out[u][v] = RatFunc(r[u][v], d);
      }
    }
  return out;
}

namespace {

// (input pair, output pair) -> vertex pattern over two colors; anything not
// listed must carry weight zero on both sides.
std::optional<Pattern> slot_pattern(int u, int v) {
  if (u == 0 && v == 0) return Pattern::A;
  if (u == 3 && v == 3) return Pattern::A;
  if (u == 1 && v == 1) return Pattern::B2;
  if (u == 2 && v == 2) return Pattern::B1;
  if (u == 2 && v == 1) return Pattern::C1;
  if (u == 1 && v == 2) return Pattern::C2;
  return std::nullopt;
}

// Split a z-linear numerator p = A*z + B and return A*za + B*zb.
RatFunc z_linear_value(const RatFunc& f, const Poly& za, const Poly& zb) {
  const VarId z = zvar(1);
  Poly high, low;
  for (const auto& [m, c] : f.num().terms()) {
    const int d = m.exponent(z);
    if (d == 0) {
      low += Poly::term(m, c);
    } else if (d == 1) {
      high += Poly::term(m.divide_by(mono_of(z)), c);
    } else {
      throw std::logic_error("twist: entry not z-linear");
    }
  }
  return RatFunc(high * za + low * zb, f.den());
}

}  // namespace

TwistReport verify_twist() {
  TwistReport rep;
  auto tw = twisted_r_matrix();
  const RatFunc x1 = RatFunc::variable(xvar(1)), x2 = RatFunc::variable(xvar(2));
  const RatFunc y1 = RatFunc::variable(yvar(1));
  auto t_table = cell_weights(Family::T, x1, y1);
  const Poly zrect = one_plus_beta_var(xvar(1)) * one_plus_beta_var(yvar(1));
  std::ostringstream detail;
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) {
      auto pat = slot_pattern(u, v);
      // Rectangular vertex comparison: substitute z by (1+beta x)(1+beta y).
      RatFunc rect_val = tw[u][v].substitute({{zvar(1), RatFunc(zrect)}});
      RatFunc rect_exp = pat ? t_table[int(*pat)] : RatFunc();
      if (!(rect_val == rect_exp)) {
        rep.rect_ok = false;
        detail << "rect slot (" << u << "," << v << "): " << rect_val.text()
               << " != " << rect_exp.text() << "\n";
      }
      // Row R-vertex comparison: z-linear split A*(1+beta x2) + B*(1+beta x1).
      RatFunc row_val = tw[u][v].is_zero()
                            ? RatFunc()
                            : z_linear_value(tw[u][v], one_plus_beta_var(xvar(2)),
                                             one_plus_beta_var(xvar(1)));
      RatFunc row_exp = pat ? r_weight(RFam::ROW, *pat, x1, x2) : RatFunc();
      if (!(row_val == row_exp)) {
        rep.row_ok = false;
        detail << "row slot (" << u << "," << v << "): " << row_val.text()
               << " != " << row_exp.text() << "\n";
      }
    }
  rep.detail = detail.str();
  return rep;
}

}  // namespace grothlat
