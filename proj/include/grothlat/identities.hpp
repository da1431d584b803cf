#pragma once

#include <string>

#include "grothlat/lattice.hpp"
#include "grothlat/operators.hpp"
#include "grothlat/perm.hpp"

namespace grothlat {

// The three routes to the same families of polynomials, plus the identity
// checks that tie them together.  All computation is exact; a CheckResult
// either passes or carries a description of the first failing comparison.

////////////////////////////
// closed products        //
////////////////////////////

// (1-q^2)^n * prod_{i+j<=n} (x_i (+) y_j)
//           * prod_{i+j>n+1} (1 - q^2 (1+beta x_i)(1+beta y_j)),
// the value of the full rectangular system at the longest element.
Poly base_product(int n);
Poly base_product_q0(int n);  // prod_{i+j<=n} (x_i (+) y_j)

////////////////////////////
// operator routes        //
////////////////////////////

// Descending chains from the longest element.  All results are cached per
// permutation; the caches are not thread safe, so warm them from a single
// thread before any parallel use.
RatFunc grothendieck_q(const Perm& w);                 // G_w(x;y), two parameters
Poly grothendieck_beta(const Perm& w);                 // G_w(x;y) at q = 0
RatFunc dual_q(const Perm& w);                         // H_w(x;y)
Poly dual_beta(const Perm& w);                         // H_w(x;y) at q = 0
Poly dual_beta_bruhat(const Perm& w);                  // sum_{v >= w} beta^(l(v)-l(w)) G_v
RatFunc biaxial_q(const Perm& v, const Perm& w);       // G_{v,w}(x;y)
Poly biaxial_beta(const Perm& v, const Perm& w);       // G_{v,w}(x;y) at q = 0

////////////////////////////
// lattice routes         //
////////////////////////////

RatFunc grothendieck_q_lattice(const Perm& w, int jobs = 1);
RatFunc biaxial_q_lattice(const Perm& v, const Perm& w, int jobs = 1);
RatFunc dual_q_lattice(const Perm& w, int jobs = 1);

////////////////////////////
// branching data         //
////////////////////////////

// Entry coefficient of the first-row expansion: product over columns of
// 1, x1 (+) y_i, or 1 + beta (x1 (+) y_i) according to how eta(w) and the
// shifted eta(v) compare; zero outside the branching support.
Poly branching_coeff_formula(const Perm& w, const Perm& v);
// The same coefficient as the value of the one-row system.
Poly branching_coeff_lattice(const Perm& w, const Perm& v);

////////////////////////////
// identity checks        //
////////////////////////////

struct CheckResult {
  bool ok = true;
  std::string detail;  // first failure, empty while ok

  void fail(const std::string& msg) {
    if (ok) detail = msg;
    ok = false;
  }
  void merge(const CheckResult& other) {
    if (!other.ok) fail(other.detail);
  }
};

// Operator route == lattice route == (at q = 0) pipe dream route.
CheckResult check_routes(const Perm& w, int jobs = 1);

// q = 0 specialization of the full system against the one-parameter
// polynomial, in both variable orders (x;y with left boundary w, and y;x
// with left boundary w^{-1}).
CheckResult check_hudson(const Perm& w);

// Left multiplication: descending s_i * w tracks the beta-Demazure operator
// on the y alphabet.
CheckResult check_left_action(const Perm& w);

// The dual family: operator route vs lattice route at symbolic q, the q = 0
// specializations, the Bruhat-sum expansion, the kernel-times-reflection
// formula, and the transpose symmetry.
CheckResult check_dual(const Perm& w, int jobs = 1);

// G_{v,w} = 0 whenever v is not below w in Bruhat order (q = 0 family).
// The converse is false — e.g. G_{132,231} = 0 with 132 <= 231, because
// G_231 does not involve y_2 — so only the stated direction is asserted.
CheckResult check_vanishing(int n);

// The 2n-row kernel system for w: its value equals G_w(x;y) (independent of
// the column variables), the states factor through the midline into
// bottom-half times top-half sums, and the resulting expansion
//   G_w(x;y) = sum_v G_v(y;z) G_{v^{-1},w}(x;(-)z)
// holds with z fully symbolic.
CheckResult check_cauchy_kernel(const Perm& w);

// G_{v,w}(x;y) = sum_{v <= u <= w} G_{v,u}(z;y) G_{u,w}(x;(-)z) at q = 0.
CheckResult check_biaxial_cauchy(const Perm& v, const Perm& w);

// Specialization at the longest element and z = 0:
// G_{w0}(x;y) = sum_v G_v(y) H_{v w0}(x).
CheckResult check_cauchy_w0(int n);

// Replacing two neutral right-boundary labels by one repeated color (one on
// a reflected-star row, one on a plain row) admits no states.
CheckResult check_pair_boundary_emptiness(int n);

// The same emptiness over generalized row interleavings: any choice of which
// rows carry the reflected-star family, any color orders on both families
// with each color's starred row above its plain row; configurations are
// enumerated deterministically and every stride-th one is built and counted.
CheckResult check_interleaved_row_emptiness(int n, int stride = 1);

// First-row branching: formula == one-row system for every candidate v, the
// support matches the two descriptions of the interval, and the assembled
// expansion reproduces G_w.
CheckResult check_branching(const Perm& w);

// Interval support three ways: mask construction, pair of order conditions,
// nonvanishing one-row system values.
CheckResult check_interval_threeway(const Perm& w);

// For single-descent w and v with descent set inside {b}: interval
// membership == partition interleaving.
CheckResult check_grassmannian_pairs(int n);

// States of the two q = 0 one-parameter systems against grouped pipe dreams:
// with rows y and left boundary w^{-1}, states biject with reduced pipe
// dreams (transposed crossings, first-crossing grouping) and round-trip
// through the edge reconstruction; with rows x and left boundary w, crossings
// are read in place and the grouping keeps last crossings.  Every state
// weight equals its fiber's sum of wt * beta^excess.
CheckResult check_pd_bijection(const Perm& w);

// Operator algebra on pseudo-random polynomials (deterministic seed):
// quadratic relations for both operator families, braid relations, the
// commutation between the two alphabets, and the classical
// divided-difference identities.
CheckResult check_hecke_relations(int n, int trials, unsigned seed);

}  // namespace grothlat
