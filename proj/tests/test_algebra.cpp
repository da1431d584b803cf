#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "grothlat/errors.hpp"
#include "grothlat/poly.hpp"
#include "grothlat/ratfunc.hpp"
#include "grothlat/vars.hpp"

using namespace grothlat;

namespace {

Poly X(unsigned i) { return Poly::variable(xvar(i)); }
Poly Y(unsigned i) { return Poly::variable(yvar(i)); }

}  // namespace

TEST_CASE("rational text round trip") {
  CHECK(rat_text(Rat(3)) == "3");
  CHECK(rat_text(Rat(-3)) == "-3");
  CHECK(rat_text(Rat(3, 2)) == "3/2");
  CHECK(rat_parse("3") == Rat(3));
  CHECK(rat_parse("-3") == Rat(-3));
  CHECK(rat_parse("3/2") == Rat(3, 2));
  CHECK(rat_parse(rat_text(Rat(-91, 7))) == Rat(-13));
}

TEST_CASE("variable codes order x < y < z < beta < q") {
  CHECK(xvar(1) < xvar(2));
  CHECK(xvar(9) < yvar(1));
  CHECK(yvar(9) < zvar(1));
  CHECK(zvar(9) < beta_var());
  CHECK(beta_var() < q_var());
  CHECK(var_name(xvar(3)) == "x3");
  CHECK(var_name(beta_var()) == "beta");
  CHECK(parse_var("y12") == yvar(12));
  CHECK(parse_var("q") == q_var());
  CHECK_FALSE(parse_var("w3").has_value());
}

TEST_CASE("monomial arithmetic") {
  Monomial a = mono_of(xvar(1), 2).times(mono_of(yvar(1)));
  CHECK(a.total_degree() == 3);
  CHECK(a.exponent(xvar(1)) == 2);
  CHECK(a.exponent(yvar(1)) == 1);
  CHECK(a.exponent(zvar(1)) == 0);

  Monomial b = mono_of(xvar(1));
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(a.divide_by(b) == mono_of(xvar(1)).times(mono_of(yvar(1))));
  CHECK(a.divide_by(a).empty());
}

TEST_CASE("lex order ranks earlier variables and higher exponents larger") {
  // x1 beats x2, and within one variable a higher power is larger.
  CHECK(lex_less(mono_of(xvar(2)), mono_of(xvar(1))));
  CHECK_FALSE(lex_less(mono_of(xvar(1)), mono_of(xvar(2))));
  CHECK(lex_less(mono_of(xvar(1), 1), mono_of(xvar(1), 2)));
  // x1 dominates any monomial in later variables regardless of degree.
  CHECK(lex_less(mono_of(yvar(1), 5), mono_of(xvar(1))));
}

TEST_CASE("graded order sorts by total degree first") {
  CHECK(graded_less(mono_of(xvar(1)), mono_of(yvar(2), 2)));
  CHECK(graded_less(mono_of(yvar(2)), mono_of(xvar(1), 2)));
}

TEST_CASE("polynomial terms stay canonical through arithmetic") {
  Poly p = (X(1) + Y(1)) * (X(1) - Y(1)) + Y(1) * Y(1);
  CHECK(p == X(1) * X(1));
  CHECK(p.canonical());
  CHECK((p - p).is_zero());
  CHECK(p.size() == 1);

  Poly q = (X(1) + Y(1)).pow(2);
  CHECK(q == X(1) * X(1) + X(1) * Y(1).scaled(2) + Y(1) * Y(1));
  CHECK(q.canonical());
  CHECK(q.degree_in(xvar(1)) == 2);
  CHECK(q.degree_in(zvar(1)) == 0);
}

TEST_CASE("constant detection") {
  Rat v;
  CHECK(Poly::constant(5).is_constant(&v));
  CHECK(v == 5);
  CHECK(Poly::zero().is_constant(&v));
  CHECK(v == 0);
  CHECK_FALSE((X(1) + Poly::constant(1)).is_constant());
  CHECK(Poly::constant(1).is_one());
}

TEST_CASE("adjacent swap is an involution and fixes symmetric input") {
  Poly f = X(1) * X(1) * Y(1) + X(2) * Poly::constant(3);
  CHECK(f.swap_adjacent(VarKind::X, 1).swap_adjacent(VarKind::X, 1) == f);
  Poly sym = X(1) * X(2) + X(1) + X(2);
  CHECK(sym.swap_adjacent(VarKind::X, 1) == sym);
  // Swapping the x alphabet leaves y exponents alone.
  CHECK(f.swap_adjacent(VarKind::X, 1) ==
        X(2) * X(2) * Y(1) + X(1) * Poly::constant(3));
}

TEST_CASE("substitute zero and rename") {
  Poly f = X(1) * Y(1) + X(2) + Poly::constant(7);
  CHECK(f.substitute_zero(xvar(1)) == X(2) + Poly::constant(7));
  Poly g = f.rename({{xvar(1), zvar(1)}, {xvar(2), xvar(3)}});
  CHECK(g == Poly::variable(zvar(1)) * Y(1) + X(3) + Poly::constant(7));
  CHECK(g.canonical());
}

TEST_CASE("formal group law on polynomials") {
  Poly law = oplus(X(1), Y(1));
  CHECK(law == X(1) + Y(1) + beta_poly() * X(1) * Y(1));
  CHECK(oplus(X(1), Y(1)) == oplus(Y(1), X(1)));
  CHECK(oplus(oplus(X(1), Y(1)), Poly::variable(zvar(1))) ==
        oplus(X(1), oplus(Y(1), Poly::variable(zvar(1)))));
  CHECK(oplus(X(1), Poly::zero()) == X(1));
  // 1 + beta*(x (+) y) factors as (1 + beta x)(1 + beta y).
  CHECK(one_plus_beta(law) ==
        one_plus_beta_var(xvar(1)) * one_plus_beta_var(yvar(1)));
}

TEST_CASE("serialized text lists terms in graded order") {
  Poly p = oplus(X(1), Y(1));
  CHECK(p.text() == "x1 + y1 + beta*x1*y1");
  CHECK(Poly::zero().text() == "0");
  CHECK((X(1) - Y(1)).text() == "x1 - y1");
  CHECK(Poly::constant(Rat(-3, 2)).text() == "-3/2");
  CHECK((Poly::constant(1) + X(1).scaled(Rat(1, 2))).text() == "1 + (1/2)*x1");
}

TEST_CASE("polynomial json round trip") {
  Poly p = oplus(X(1), Y(2)) * one_minus_q2() - Poly::constant(Rat(5, 3));
  CHECK(Poly::from_json(p.json()) == p);
  CHECK(Poly::from_json(Poly::zero().json()) == Poly::zero());
}

TEST_CASE("exact division recovers factors") {
  Poly num = X(1) * X(1) - X(2) * X(2);
  CHECK(exact_div(num, X(1) - X(2)) == X(1) + X(2));
  CHECK(exact_div(num, X(1) + X(2)) == X(1) - X(2));

  Poly f = oplus(X(1), Y(1)) * oplus(X(2), Y(1)) * one_plus_beta_var(xvar(1));
  CHECK(exact_div(f, oplus(X(2), Y(1))) ==
        oplus(X(1), Y(1)) * one_plus_beta_var(xvar(1)));
  CHECK(exact_div(f, f) == Poly::constant(1));
  CHECK(exact_div(Poly::zero(), f).is_zero());
}

TEST_CASE("exact division rejects non-factors") {
  CHECK_THROWS_AS(exact_div(X(1) + Poly::constant(1), X(2)), NonDivisible);
  CHECK_THROWS_AS(exact_div(X(1) * X(1) + Y(1), X(1) - Y(1)), NonDivisible);
}

TEST_CASE("structured denominators multiply and cancel factorwise") {
  StructuredDenom a;
  a.beta_pow = 2;
  a.q_pow = 1;
  a.shifts[xvar(1)] = 1;
  StructuredDenom b;
  b.q_pow = 1;
  b.shifts[xvar(1)] = 1;
  b.shifts[yvar(2)] = 3;

  StructuredDenom prod = a.times(b);
  CHECK(prod.beta_pow == 2);
  CHECK(prod.q_pow == 2);
  CHECK(prod.shifts.at(xvar(1)) == 2);
  CHECK(prod.shifts.at(yvar(2)) == 3);
  CHECK(prod.divide_by(b) == a);
  CHECK(prod.divide_by(prod).is_one());

  StructuredDenom m = StructuredDenom::factor_max(a, b);
  CHECK(m.beta_pow == 2);
  CHECK(m.q_pow == 1);
  CHECK(m.shifts.at(xvar(1)) == 1);
  CHECK(m.shifts.at(yvar(2)) == 3);

  CHECK(a.expand() ==
        beta_poly().pow(2) * q_poly() * one_plus_beta_var(xvar(1)));
}

TEST_CASE("structured denominator swaps follow the alphabet") {
  StructuredDenom d;
  d.shifts[xvar(1)] = 2;
  d.shifts[yvar(1)] = 1;
  StructuredDenom s = d.swap_adjacent(VarKind::X, 1);
  CHECK(s.shifts.at(xvar(2)) == 2);
  CHECK(s.shifts.count(xvar(1)) == 0);
  CHECK(s.shifts.at(yvar(1)) == 1);
  CHECK(s.swap_adjacent(VarKind::X, 1) == d);
}

TEST_CASE("rational function equality is semantic") {
  // x1/(1 + beta x1) written two ways.
  RatFunc a(X(1) * one_plus_beta_var(yvar(1)),
            [] {
              StructuredDenom d;
              d.shifts[xvar(1)] = 1;
              d.shifts[yvar(1)] = 1;
              return d;
            }());
  RatFunc b(X(1), [] {
    StructuredDenom d;
    d.shifts[xvar(1)] = 1;
    return d;
  }());
  CHECK(a == b);
  CHECK_FALSE(a == RatFunc(X(1)));
  CHECK(a.reduced().den() == b.den());
  CHECK(a.reduced().is_poly() == false);
}

TEST_CASE("reduction cancels shift, beta, and q factors") {
  StructuredDenom d;
  d.beta_pow = 1;
  d.q_pow = 2;
  d.shifts[xvar(1)] = 1;
  Poly num = beta_poly() * q_poly().pow(2) * one_plus_beta_var(xvar(1)) * X(2);
  RatFunc f(num, d);
  RatFunc r = f.reduced();
  CHECK(r.is_poly());
  CHECK(r.num() == X(2));
  CHECK(f == RatFunc(X(2)));
}

TEST_CASE("group inverse satisfies x (+) (-x) = 0") {
  RatFunc x{X(1)};
  RatFunc inv = ominus_var(xvar(1));
  CHECK(inv.den().shifts.at(xvar(1)) == 1);
  CHECK(oplus(x, inv).is_zero());
  CHECK(one_plus_beta(inv) * one_plus_beta(x) == RatFunc(Poly::constant(1)));
}

TEST_CASE("rational substitution binds shift variables to variables or zero") {
  RatFunc inv = ominus_var(yvar(1));  // -y1/(1 + beta y1)
  RatFunc moved = inv.substitute({{yvar(1), RatFunc(Poly::variable(zvar(2)))}});
  CHECK(moved == ominus_var(zvar(2)));
  RatFunc at_zero = inv.substitute({{yvar(1), RatFunc(Poly::zero())}});
  CHECK(at_zero.is_zero());

  // Substituting into a polynomial can produce structured denominators.
  Poly p = oplus(X(1), Y(1));
  RatFunc sub = substitute(p, {{yvar(1), ominus_var(zvar(1))}});
  // x (+) (-z) vanishes at x = z.
  CHECK(sub.substitute({{xvar(1), RatFunc(Poly::variable(zvar(1)))}}).is_zero());
}

TEST_CASE("as_poly demands a polynomial value") {
  StructuredDenom d;
  d.shifts[xvar(1)] = 1;
  RatFunc clean(one_plus_beta_var(xvar(1)) * Y(1), d);
  CHECK(clean.as_poly() == Y(1));
  RatFunc dirty(Y(1), d);
  CHECK_THROWS_AS(dirty.as_poly(), NonDivisible);
}

TEST_CASE("q specialization divides out matched q powers") {
  StructuredDenom d;
  d.q_pow = 2;
  RatFunc f(q_poly().pow(2) * X(1) + q_poly().pow(3) * Y(1), d);
  CHECK(f.specialize_q_zero() == X(1));

  RatFunc pole(X(1), d);
  CHECK_THROWS_AS(pole.specialize_q_zero(), QPole);
}

TEST_CASE("term budget guards runaway products") {
  const std::size_t before = term_budget();
  set_term_budget(8);
  Poly big = (X(1) + X(2) + X(3) + Poly::constant(1));
  CHECK_THROWS_AS(big * big.rename({{xvar(1), yvar(1)},
                                    {xvar(2), yvar(2)},
                                    {xvar(3), yvar(3)}}),
                  BudgetExceeded);
  set_term_budget(before);
  CHECK(term_budget() == before);
}

TEST_CASE("rational text embeds the structured denominator") {
  StructuredDenom d;
  d.beta_pow = 1;
  RatFunc f(Poly::constant(-1), d);
  CHECK(f.text() == "(-1) / (beta)");
  CHECK(RatFunc(X(1)).text() == "x1");
}
