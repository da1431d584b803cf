#pragma once

#include <map>
#include <string>

#include "grothlat/poly.hpp"

namespace grothlat {

// Every denominator the library ever produces is of the shape
//   beta^a * q^b * prod_v (1 + beta*v)^{e_v}
// with v ranging over x/y/z variables.  Keeping that structure explicit makes
// cancellation a matter of trial division and keeps equality checks exact.

struct StructuredDenom {
  int beta_pow = 0;
  int q_pow = 0;
  std::map<VarId, int> shifts;  // v -> exponent of (1 + beta*v)

  bool is_one() const { return beta_pow == 0 && q_pow == 0 && shifts.empty(); }
  Poly expand() const;
  StructuredDenom times(const StructuredDenom& o) const;            // exponent sums
  StructuredDenom divide_by(const StructuredDenom& o) const;        // assumes >= o
  static StructuredDenom factor_max(const StructuredDenom& a, const StructuredDenom& b);
  StructuredDenom swap_adjacent(VarKind kind, unsigned i) const;
  std::string text() const;

  friend bool operator==(const StructuredDenom& a, const StructuredDenom& b) {
    return a.beta_pow == b.beta_pow && a.q_pow == b.q_pow && a.shifts == b.shifts;
  }
};

class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(Poly num) : num_(std::move(num)) {}            // NOLINT: implicit by design
  RatFunc(Poly num, StructuredDenom den);

  static RatFunc constant(const Rat& c) { return RatFunc(Poly::constant(c)); }
  static RatFunc variable(VarId v) { return RatFunc(Poly::variable(v)); }

  const Poly& num() const { return num_; }
  const StructuredDenom& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
  RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
  RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

  RatFunc scaled(const Rat& c) const;
  RatFunc pow(unsigned e) const;

  // Semantic equality via cross multiplication.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  // Cancel whatever trial division can cancel; canonical enough for output.
  RatFunc reduced() const;

  // Demands the value is a polynomial after reduction.
  Poly as_poly() const;

  // q -> 0.  Throws QPole if q survives in the denominator after reduction,
  // NonDivisible if the q=0 numerator fails to absorb residual beta/shift
  // factors (the honest failure mode; never hit on the families it is
  // specified for).
  Poly specialize_q_zero() const;

  RatFunc swap_adjacent(VarKind kind, unsigned i) const;

  // Simultaneous substitution v -> value.  Denominator shift variables may
  // only be bound to plain variables or to zero (all uses in the library);
  // anything else throws.
  RatFunc substitute(const std::map<VarId, RatFunc>& bind) const;

  std::string text() const;
  std::string json() const;

 private:
  Poly num_;
  StructuredDenom den_;
};

// Substitute RatFunc values into a polynomial.
RatFunc substitute(const Poly& p, const std::map<VarId, RatFunc>& bind);

// Formal group law on rational functions, and the inverse ominus(v) =
// -v / (1 + beta*v) whose denominator stays structured.
RatFunc oplus(const RatFunc& a, const RatFunc& b);
RatFunc ominus_var(VarId v);
RatFunc one_plus_beta(const RatFunc& a);

}  // namespace grothlat
