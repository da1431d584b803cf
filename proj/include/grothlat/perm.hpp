#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grothlat/errors.hpp"

namespace grothlat {

// Permutations in one-line notation, 1-based values: img[i-1] = w(i).
// Composition is (a*b)(i) = a(b(i)).

struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> one_line) : img(std::move(one_line)) {}

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[static_cast<std::size_t>(i - 1)]; }

  static Perm identity(int n);
  static Perm longest(int n);  // i -> n+1-i

  bool is_identity() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

Perm compose(const Perm& a, const Perm& b);  // a after b
Perm inverse(const Perm& w);
int length(const Perm& w);  // inversion count

Perm right_s(const Perm& w, int i);    // w * s_i: swap positions i, i+1
Perm left_s(int i, const Perm& w);     // s_i * w: swap values i, i+1
bool right_descent(const Perm& w, int i);  // length(w*s_i) < length(w)
bool left_descent(const Perm& w, int i);   // length(s_i*w) < length(w)

// Lexicographically first reduced word (i1,...,ik) with w = s_{i1}...s_{ik}.
std::vector<int> lex_first_reduced_word(const Perm& w);
std::vector<std::vector<int>> all_reduced_words(const Perm& w);  // small oracle
Perm from_word(const std::vector<int>& word, int n);

std::vector<Perm> all_perms(int n);  // lexicographic one-line order

// Bruhat order (rank-matrix criterion) and the two weak orders.
bool bruhat_leq(const Perm& u, const Perm& v);
bool weak_left_leq(const Perm& u, const Perm& v);   // length(v) = length(u) + length(v u^-1)
bool weak_right_leq(const Perm& u, const Perm& v);  // length(v) = length(u) + length(u^-1 v)

// "21543" (n <= 9) or "2,1,5,4,3"; enforces 1 <= n <= 8.
std::optional<Perm> parse_perm(const std::string& text);
std::string perm_str(const Perm& w);

////////////////////////////
// word combinatorics     //
////////////////////////////

// eta(w) = one-line word of w^{-1}; the letter action v.word permutes
// positions, (v.word)(i) = word(v^{-1}(i)), so that v.eta(w) = eta(v*w).
std::vector<int> eta_of(const Perm& w);
std::vector<int> act_letters(const Perm& v, const std::vector<int>& word);
Perm perm_of_eta(const std::vector<int>& eta);  // inverse of the word as a permutation

// The four derived permutations of the branching construction:
//   w_max = s_1 s_2 ... s_{k-1} w with k = w(1)      (moves the letter 1 to the front)
//   w_minus in S_{n-1}: w_max with the fixed point 1 stripped
//   w_plus in S_{n+1}: 1 prepended, all other values shifted up
//   w_min = s_1^{d_1} ... s_{n-1}^{d_{n-1}} w, d_i = [exists j>i with eta(i) > eta(j)]
Perm w_max_of(const Perm& w);
Perm w_minus_of(const Perm& w);
Perm w_plus_of(const Perm& w);
Perm w_min_of(const Perm& w);

// {v : v = s_1^{e_1}...s_{n-1}^{e_{n-1}} w, length(w) = length(v) + sum e, v(1) = 1}.
std::vector<Perm> lemma_A_set(const Perm& w);
// {v : w_min <= v (Bruhat) and v <=_L w_max}; the branching support.
std::vector<Perm> interval_set(const Perm& w);

////////////////////////////
// Grassmannian data      //
////////////////////////////

struct GrassmannianData {
  int b = 0;                  // unique descent (0 for the identity)
  std::vector<int> lambda;    // partition, lambda[i-1] = lambda_i, length b
};

// Throws NotGrassmannian when w has more than one descent.
GrassmannianData grassmannian_data(const Perm& w);

// mu_i >= nu_i >= mu_{i+1} for all i (with mu_{b+1} = 0) and nu_b = 0,
// both partitions padded to length b.
bool interleaves(const std::vector<int>& mu, const std::vector<int>& nu, int b);

}  // namespace grothlat
