#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "grothlat/errors.hpp"
#include "grothlat/vars.hpp"

namespace grothlat {

using Rat = boost::multiprecision::cpp_rational;

std::string rat_text(const Rat& r);        // "3", "-3", "3/2"
Rat rat_parse(const std::string& text);    // inverse of rat_text

////////////////////////////
// Monomials              //
////////////////////////////

// A monomial is a sorted factor list (VarId, exponent>0).  Two total orders
// are used: lex_less (earlier variable, higher exponent = larger) drives
// exact division because it is multiplicative and well-founded; graded_less
// (total degree, then the factor sequence) is the stable order all
// serialization uses.

struct Monomial {
  std::vector<std::pair<VarId, int>> factors;

  bool empty() const { return factors.empty(); }
  int exponent(VarId v) const;
  int total_degree() const;
  bool divides(const Monomial& m) const;       // does *this divide m
  Monomial times(const Monomial& m) const;
  Monomial divide_by(const Monomial& m) const;  // caller guarantees m | *this

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors == b.factors;
  }
};

bool lex_less(const Monomial& a, const Monomial& b);
bool graded_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

Monomial mono_of(VarId v, int e = 1);

////////////////////////////
// Sparse polynomials     //
////////////////////////////

class Poly {
 public:
  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly constant(const Rat& c);
  static Poly variable(VarId v);
  static Poly term(Monomial m, Rat c);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<std::pair<Monomial, Rat>>& terms() const { return terms_; }

  // The unique constant with the same value, if this poly is constant.
  bool is_constant(Rat* value = nullptr) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly scaled(const Rat& c) const;
  Poly pow(unsigned e) const;

  int degree_in(VarId v) const;

  // s_i acting on the given alphabet: swap exponents of (kind,i),(kind,i+1).
  Poly swap_adjacent(VarKind kind, unsigned i) const;

  Poly substitute_zero(VarId v) const;  // v -> 0
  Poly set_q_zero() const { return substitute_zero(q_var()); }

  // Simultaneous variable renaming (image variables must not collide with
  // retained ones; exponents on collisions accumulate, which renames never
  // trigger in this codebase but keeps the operation total).
  Poly rename(const std::map<VarId, VarId>& images) const;

  std::string text() const;
  std::string json() const;
  static Poly from_json(const std::string&);

  // Internal invariant check used by tests: sorted, nonzero, positive exps.
  bool canonical() const;

  static Poly from_sorted(std::vector<std::pair<Monomial, Rat>> terms);

 private:
  // ascending lex_less, no zero coefficients
  std::vector<std::pair<Monomial, Rat>> terms_;
};

// Exact division: returns q with num == q*den, throws NonDivisible otherwise.
Poly exact_div(const Poly& num, const Poly& den);

////////////////////////////
// Formal group helpers   //
////////////////////////////

// x (+) y = x + y + beta*x*y, the multiplicative-type group law used by every
// vertex weight and operator in the library.
Poly oplus(const Poly& a, const Poly& b);
Poly one_plus_beta(const Poly& a);  // 1 + beta*a
Poly one_plus_beta_var(VarId v);    // 1 + beta*v
Poly beta_poly();
Poly q_poly();
Poly one_minus_q2();  // 1 - q^2

}  // namespace grothlat
