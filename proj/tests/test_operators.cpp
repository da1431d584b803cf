#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grothlat/operators.hpp"
#include "grothlat/poly.hpp"
#include "grothlat/ratfunc.hpp"

using namespace grothlat;

namespace {

Poly X(unsigned i) { return Poly::variable(xvar(i)); }
Poly Y(unsigned i) { return Poly::variable(yvar(i)); }

// A dense asymmetric sample touching both alphabets and both parameters.
RatFunc sample() {
  Poly p = oplus(X(1), Y(2)) * oplus(X(2), Y(1)) + X(1).pow(3) +
           q_poly() * X(3) * Y(3) - beta_poly() * X(2).pow(2) * Y(1);
  return RatFunc(p);
}

RatFunc beta_rf() { return RatFunc(beta_poly()); }
RatFunc bq2() { return RatFunc(beta_poly() * q_poly() * q_poly()); }
RatFunc split_rf() { return RatFunc(beta_poly() * one_minus_q2()); }

}  // namespace

TEST_CASE("divided difference on monomials") {
  CHECK(newton_dd(X(1), VarKind::X, 1) == Poly::constant(1));
  CHECK(newton_dd(X(2), VarKind::X, 1) == Poly::constant(-1));
  CHECK(newton_dd(Poly::constant(7), VarKind::X, 1).is_zero());
  CHECK(newton_dd(X(1) * X(2), VarKind::X, 1).is_zero());
  CHECK(newton_dd(X(1).pow(2), VarKind::X, 1) == X(1) + X(2));
  CHECK(newton_dd(X(1).pow(3), VarKind::X, 1) ==
        X(1).pow(2) + X(1) * X(2) + X(2).pow(2));
  CHECK(newton_dd(X(2).pow(2) * X(1), VarKind::X, 1) == -X(1) * X(2));
  CHECK(newton_dd(Y(1), VarKind::X, 1).is_zero());
  CHECK(newton_dd(Y(1).pow(2), VarKind::Y, 1) == Y(1) + Y(2));
  CHECK(newton_dd(X(3), VarKind::X, 2) == Poly::constant(-1));
}

TEST_CASE("divided difference matches its defining quotient") {
  Poly f = sample().num();
  Poly sf = f.swap_adjacent(VarKind::X, 1);
  CHECK(newton_dd(f, VarKind::X, 1) == exact_div(f - sf, X(1) - X(2)));
  Poly sfy = f.swap_adjacent(VarKind::Y, 2);
  CHECK(newton_dd(f, VarKind::Y, 2) == exact_div(f - sfy, Y(2) - Y(3)));
}

TEST_CASE("divided difference kills symmetric input and squares to zero") {
  Poly f = sample().num();
  Poly d = newton_dd(f, VarKind::X, 1);
  CHECK(d.swap_adjacent(VarKind::X, 1) == d);
  CHECK(newton_dd(d, VarKind::X, 1).is_zero());
  Poly sym = X(1) * X(2) + X(1) + X(2) + Y(1);
  CHECK(newton_dd(sym, VarKind::X, 1).is_zero());
}

TEST_CASE("divided difference obeys the twisted Leibniz rule") {
  Poly f = oplus(X(1), Y(1)) + X(2).pow(2);
  Poly g = X(1) * Y(2) - beta_poly() * X(2);
  CHECK(newton_dd(f * g, VarKind::X, 1) ==
        newton_dd(f, VarKind::X, 1) * g +
            f.swap_adjacent(VarKind::X, 1) * newton_dd(g, VarKind::X, 1));
}

TEST_CASE("divided differences satisfy the braid relations") {
  Poly f = sample().num();
  auto d = [](int i, const Poly& p) { return newton_dd(p, VarKind::X, i); };
  CHECK(d(1, d(2, d(1, f))) == d(2, d(1, d(2, f))));
  CHECK(d(1, d(3, f)) == d(3, d(1, f)));
}

TEST_CASE("operator values on constants") {
  RatFunc one{Poly::constant(1)};
  CHECK(pi_op(1, one) == -beta_rf());
  CHECK(pi_inv(1, one) == -RatFunc(Poly::constant(1), [] {
    StructuredDenom d;
    d.beta_pow = 1;
    return d;
  }()));
  CHECK(pi_tilde(1, one) == -RatFunc(Poly::constant(1), [] {
    StructuredDenom d;
    d.beta_pow = 1;
    d.q_pow = 2;
    return d;
  }()));
  CHECK(pi_tilde_inv(1, one) == -bq2());
}

TEST_CASE("forward and inverse operators cancel") {
  RatFunc f = sample();
  CHECK(pi_inv(1, pi_op(1, f)) == f);
  CHECK(pi_op(1, pi_inv(1, f)) == f);
  CHECK(pi_tilde_inv(2, pi_tilde(2, f)) == f);
  CHECK(pi_tilde(2, pi_tilde_inv(2, f)) == f);
}

TEST_CASE("row operators satisfy their quadratic relation") {
  // (pi + beta)(pi - beta q^2) = 0, expanded to avoid operator composition
  // with scalars: pi^2 f + beta (1 - q^2) pi f - beta^2 q^2 f = 0.
  RatFunc f = sample();
  for (int i : {1, 2, 3}) {
    RatFunc pf = pi_op(i, f);
    CHECK((pi_op(i, pf) + split_rf() * pf - beta_rf() * bq2() * f).is_zero());
  }
}

TEST_CASE("column operators satisfy their quadratic relation") {
  // beta^2 q^2 pi~^2 f + beta (1 - q^2) pi~ f - f = 0.
  RatFunc f = sample();
  for (int i : {1, 2}) {
    RatFunc pf = pi_tilde(i, f);
    CHECK((beta_rf() * bq2() * pi_tilde(i, pf) + split_rf() * pf - f)
              .is_zero());
  }
}

TEST_CASE("row and column operators braid and commute across alphabets") {
  RatFunc f = sample();
  CHECK(pi_op(1, pi_op(2, pi_op(1, f))) == pi_op(2, pi_op(1, pi_op(2, f))));
  CHECK(pi_op(1, pi_op(3, f)) == pi_op(3, pi_op(1, f)));
  CHECK(pi_tilde(1, pi_tilde(2, pi_tilde(1, f))) ==
        pi_tilde(2, pi_tilde(1, pi_tilde(2, f))));
  CHECK(pi_op(2, pi_tilde(1, f)) == pi_tilde(1, pi_op(2, f)));
  CHECK(pi_op(1, pi_tilde(1, f)) == pi_tilde(1, pi_op(1, f)));
}

TEST_CASE("exchange identity links the operator to the divided difference") {
  // pi_i = newton_dd composed with multiplication rules: check
  // x_i dd(f) == dd(x_{i+1} f) + f, the classical exchange.
  RatFunc f = sample();
  RatFunc xi{X(1)}, xnext{X(2)};
  CHECK(xi * newton_dd(f, VarKind::X, 1) ==
        newton_dd(xnext * f, VarKind::X, 1) + f);
}

TEST_CASE("one-parameter operators") {
  Poly f = oplus(X(1), Y(1)) * oplus(X(1), Y(2));
  CHECK(mu_op(1, X(1)) == one_plus_beta_var(xvar(1)));
  CHECK(demazure_beta(1, X(1)) == Poly::constant(1));
  CHECK(demazure_beta(1, Poly::constant(1)) == -beta_poly());

  // Projection rules: d(d(f)) = -beta d(f), mu(mu(f)) = beta mu(f).
  Poly df = demazure_beta(1, f);
  CHECK(demazure_beta(1, df) == (beta_poly() * df).scaled(-1));
  Poly mf = mu_op(1, f);
  CHECK(mu_op(1, mf) == beta_poly() * mf);

  // Both produce s_i-symmetric output up to the (1 + beta x_i) prefactor.
  CHECK(newton_dd(df, VarKind::X, 1).is_zero());
  Poly m = mu_op(1, f, VarKind::Y);
  CHECK(m == one_plus_beta_var(yvar(1)) * newton_dd(f, VarKind::Y, 1));
}

TEST_CASE("q = 0 operators agree with the q family specialized") {
  Poly f = oplus(X(1), Y(1)) * oplus(X(2), Y(1)) + beta_poly() * X(1);
  RatFunc rf{f};
  // pi at q = 0 is the demazure_beta chain operator.
  CHECK(pi_op(1, rf).specialize_q_zero() == demazure_beta(1, f));
  CHECK(pi_op(2, rf).specialize_q_zero() == demazure_beta(2, f));
  // pi~^{-1} at q = 0 is mu on the y alphabet.
  CHECK(pi_tilde_inv(1, rf).specialize_q_zero() == mu_op(1, f, VarKind::Y));
}

TEST_CASE("demazure chain operator drops degree to the base case") {
  // On two letters the single chain step sends the rank-one product to 1.
  Poly base = oplus(X(1), Y(1));
  CHECK(demazure_beta(1, base) == Poly::constant(1));
  // (x1 + y1 + beta*x1*y1) - (swap) factors as (x1 - x2)(1 + beta*y1), so the
  // divided difference is 1 + beta*y1 and mu multiplies back the x-side unit.
  Poly mu1 = mu_op(1, base);
  CHECK(mu1 == one_plus_beta_var(xvar(1)) * one_plus_beta_var(yvar(1)));
}

TEST_CASE("operators preserve structured denominators") {
  // The prefactor 1/(beta^2 q^2) lands in the structured denominator; no
  // chain of operators ever introduces shift factors.
  RatFunc f = pi_tilde(1, sample());
  CHECK_FALSE(f.is_poly());
  CHECK(f.den().shifts.empty());
  RatFunc g = pi_op(1, f);
  CHECK(g.den().shifts.empty());
  CHECK(g == pi_op(1, pi_tilde(1, sample())));
}
