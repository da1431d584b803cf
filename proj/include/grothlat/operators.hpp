#pragma once

#include "grothlat/ratfunc.hpp"

namespace grothlat {

// All operators are specializations of one Newton-quotient core acting on an
// alphabet v (= x or y):
//
//   core(f) = [ A f - B s_i f ] / (v_i - v_{i+1}),
//   A = (1-q^2)(1 + beta v_{i+da}),  B = (1 + beta v_i) - q^2 (1 + beta v_{i+1}),
//
// optionally divided by beta^2 q^2.  The numerator always vanishes on
// v_i = v_{i+1}, so the division is exact.
//
//   pi            : axis x, da = 1, no prefactor
//   pi_inv        : axis x, da = 0, prefactor 1/(beta^2 q^2)
//   pi_tilde      : axis y, da = 1, prefactor 1/(beta^2 q^2)
//   pi_tilde_inv  : axis y, da = 0, no prefactor
//
// newton_dd is the classical divided difference (A = B = 1), mu_op is
// (1 + beta v_i) . newton_dd, and demazure_beta is the q = 0 limit
// newton_dd o (1 + beta v_{i+1}); each exists on both alphabets.

RatFunc demazure_core(const RatFunc& f, int i, VarKind axis, int da, bool prefactor);

RatFunc pi_op(int i, const RatFunc& f);
RatFunc pi_inv(int i, const RatFunc& f);
RatFunc pi_tilde(int i, const RatFunc& f);
RatFunc pi_tilde_inv(int i, const RatFunc& f);

RatFunc newton_dd(const RatFunc& f, VarKind axis, int i);
Poly newton_dd(const Poly& f, VarKind axis, int i);

Poly mu_op(int i, const Poly& f, VarKind axis = VarKind::X);
Poly demazure_beta(int i, const Poly& f, VarKind axis = VarKind::X);

}  // namespace grothlat
