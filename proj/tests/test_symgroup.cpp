#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "grothlat/errors.hpp"
#include "grothlat/perm.hpp"

using namespace grothlat;

namespace {

Perm P(std::vector<int> img) { return Perm(std::move(img)); }

}  // namespace

TEST_CASE("compose, inverse, and length basics") {
  Perm a = P({2, 3, 1});
  Perm b = P({1, 3, 2});
  CHECK(compose(a, b) == P({2, 1, 3}));  // a(b(i))
  CHECK(compose(b, a) == P({3, 2, 1}));
  CHECK(compose(a, inverse(a)) == Perm::identity(3));
  CHECK(compose(inverse(a), a) == Perm::identity(3));
  CHECK(length(Perm::identity(4)) == 0);
  CHECK(length(Perm::longest(4)) == 6);
  CHECK(length(a) == 2);
  CHECK(length(inverse(a)) == 2);
  CHECK(Perm::identity(3).is_identity());
  CHECK_FALSE(a.is_identity());
  CHECK(Perm::longest(3) == P({3, 2, 1}));
}

TEST_CASE("right multiplication swaps positions, left swaps values") {
  Perm w = P({2, 3, 1});
  CHECK(right_s(w, 1) == P({3, 2, 1}));
  CHECK(right_s(w, 2) == P({2, 1, 3}));
  CHECK(left_s(1, w) == P({1, 3, 2}));
  CHECK(left_s(2, w) == P({3, 2, 1}));
  CHECK(right_s(w, 1) == compose(w, left_s(1, Perm::identity(3))));
  CHECK(left_s(1, w) == compose(left_s(1, Perm::identity(3)), w));
}

TEST_CASE("descents track length drops") {
  for (const Perm& w : all_perms(4))
    for (int i = 1; i < 4; ++i) {
      CHECK(right_descent(w, i) == (length(right_s(w, i)) < length(w)));
      CHECK(left_descent(w, i) == (length(left_s(i, w)) < length(w)));
      CHECK(right_descent(w, i) == (w(i) > w(i + 1)));
    }
}

TEST_CASE("reduced words multiply back and are lexicographically minimal") {
  for (const Perm& w : all_perms(4)) {
    std::vector<int> word = lex_first_reduced_word(w);
    CHECK(static_cast<int>(word.size()) == length(w));
    CHECK(from_word(word, 4) == w);
    std::vector<std::vector<int>> words = all_reduced_words(w);
    CHECK(*std::min_element(words.begin(), words.end()) == word);
    for (const auto& other : words) CHECK(from_word(other, 4) == w);
  }
  CHECK(lex_first_reduced_word(Perm::longest(3)) == std::vector<int>{1, 2, 1});
  CHECK(all_reduced_words(Perm::longest(3)).size() == 2);
}

TEST_CASE("permutation listing is lexicographic and complete") {
  std::vector<Perm> s3 = all_perms(3);
  CHECK(s3.size() == 6);
  CHECK(s3.front() == Perm::identity(3));
  CHECK(s3.back() == Perm::longest(3));
  CHECK(std::is_sorted(s3.begin(), s3.end()));
  CHECK(all_perms(4).size() == 24);
}

TEST_CASE("strong order on three letters") {
  // Hasse diagram: 123 < 132, 213 < 231, 312 < 321, with 231 and 312
  // incomparable.
  CHECK(bruhat_leq(P({1, 2, 3}), P({3, 2, 1})));
  CHECK(bruhat_leq(P({1, 3, 2}), P({2, 3, 1})));
  CHECK(bruhat_leq(P({1, 3, 2}), P({3, 1, 2})));
  CHECK(bruhat_leq(P({2, 1, 3}), P({2, 3, 1})));
  CHECK(bruhat_leq(P({2, 1, 3}), P({3, 1, 2})));
  CHECK_FALSE(bruhat_leq(P({2, 3, 1}), P({3, 1, 2})));
  CHECK_FALSE(bruhat_leq(P({3, 1, 2}), P({2, 3, 1})));
  CHECK_FALSE(bruhat_leq(P({1, 3, 2}), P({2, 1, 3})));
  int below_longest = 0;
  for (const Perm& w : all_perms(3))
    if (bruhat_leq(w, Perm::longest(3))) ++below_longest;
  CHECK(below_longest == 6);
}

TEST_CASE("strong order is a graded partial order") {
  const std::vector<Perm> s4 = all_perms(4);
  for (const Perm& u : s4) {
    CHECK(bruhat_leq(u, u));
    for (const Perm& v : s4) {
      if (bruhat_leq(u, v) && bruhat_leq(v, u)) CHECK(u == v);
      if (bruhat_leq(u, v)) CHECK(length(u) <= length(v));
    }
  }
}

TEST_CASE("weak orders refine the strong order") {
  const std::vector<Perm> s4 = all_perms(4);
  for (const Perm& u : s4)
    for (const Perm& v : s4) {
      CHECK(weak_left_leq(u, v) ==
            (length(v) == length(u) + length(compose(v, inverse(u)))));
      CHECK(weak_right_leq(u, v) ==
            (length(v) == length(u) + length(compose(inverse(u), v))));
      if (weak_left_leq(u, v)) CHECK(bruhat_leq(u, v));
      if (weak_right_leq(u, v)) CHECK(bruhat_leq(u, v));
    }
  // 231 covers 132 on the left (231 = s1 * 132) but not 213 (231 * 213 = 321,
  // whose length exceeds the difference, so lengths do not add).
  CHECK(weak_left_leq(P({1, 3, 2}), P({2, 3, 1})));
  CHECK_FALSE(weak_left_leq(P({2, 1, 3}), P({2, 3, 1})));
}

TEST_CASE("permutation parsing accepts digits or comma lists up to n = 8") {
  CHECK(parse_perm("21543") == P({2, 1, 5, 4, 3}));
  CHECK(parse_perm("2,1,5,4,3") == P({2, 1, 5, 4, 3}));
  CHECK(parse_perm("1") == Perm::identity(1));
  CHECK_FALSE(parse_perm("211").has_value());    // repeated value
  CHECK_FALSE(parse_perm("13").has_value());     // not onto
  CHECK_FALSE(parse_perm("").has_value());
  CHECK_THROWS_AS(parse_perm("123456789"), BudgetExceeded);  // n > 8 is rejected hard
  CHECK(perm_str(P({2, 1, 5, 4, 3})) == "21543");
  for (const Perm& w : all_perms(4)) CHECK(parse_perm(perm_str(w)) == w);
}

TEST_CASE("letter words transform equivariantly") {
  for (const Perm& w : all_perms(3)) {
    CHECK(eta_of(w) == inverse(w).img);
    CHECK(perm_of_eta(eta_of(w)) == w);
    for (const Perm& v : all_perms(3))
      CHECK(act_letters(v, eta_of(w)) == eta_of(compose(v, w)));
  }
}

TEST_CASE("derived permutations of the branching construction") {
  Perm w = P({2, 3, 1});
  // w(1) = 2, so w_max = s_1 w, which fixes 1.
  CHECK(w_max_of(w) == P({1, 3, 2}));
  CHECK(w_minus_of(w) == P({2, 1}));
  CHECK(w_min_of(w) == P({1, 3, 2}));
  CHECK(w_plus_of(P({2, 1})) == P({1, 3, 2}));

  Perm u = P({3, 2, 1});
  CHECK(w_max_of(u) == P({1, 3, 2}));
  CHECK(w_max_of(u)(1) == 1);
  CHECK(w_minus_of(u) == P({2, 1}));

  for (const Perm& v : all_perms(4)) {
    Perm vm = w_max_of(v);
    CHECK(vm(1) == 1);
    CHECK(weak_left_leq(vm, v));
    CHECK(w_plus_of(w_minus_of(v)) == vm);
    CHECK(bruhat_leq(w_min_of(v), v));
    CHECK(weak_left_leq(w_min_of(v), w_max_of(v)));
  }
}

TEST_CASE("interval membership matches its defining pair of orders") {
  for (const Perm& w : all_perms(4)) {
    const std::vector<Perm> members = interval_set(w);
    std::set<Perm> mem(members.begin(), members.end());
    for (const Perm& v : all_perms(4)) {
      bool in = bruhat_leq(w_min_of(w), v) && weak_left_leq(v, w_max_of(w));
      CHECK(mem.count(v) == (in ? 1u : 0u));
    }
    // Everything in the interval fixes the letter 1.
    for (const Perm& v : members) CHECK(v(1) == 1);
  }
  CHECK(interval_set(P({2, 3, 1})) == std::vector<Perm>{P({1, 3, 2})});
}

TEST_CASE("prefix set of left transpositions reaching a fixed first letter") {
  CHECK(lemma_A_set(P({2, 1})) == std::vector<Perm>{P({1, 2})});
  for (const Perm& w : all_perms(3)) {
    for (const Perm& v : lemma_A_set(w)) {
      CHECK(v(1) == 1);
      CHECK(weak_left_leq(v, w));
    }
  }
}

TEST_CASE("single-descent shape extraction") {
  GrassmannianData gd = grassmannian_data(P({2, 4, 1, 3}));
  CHECK(gd.b == 2);
  CHECK(gd.lambda == std::vector<int>{2, 1});

  GrassmannianData id = grassmannian_data(Perm::identity(3));
  CHECK(id.b == 0);
  CHECK(id.lambda.empty());

  GrassmannianData simple = grassmannian_data(P({1, 3, 2}));
  CHECK(simple.b == 2);
  CHECK(simple.lambda == std::vector<int>{1, 0});

  CHECK_THROWS_AS(grassmannian_data(P({3, 2, 1})), NotGrassmannian);
  CHECK_THROWS_AS(grassmannian_data(P({2, 1, 4, 3})), NotGrassmannian);
}

TEST_CASE("partition interleaving") {
  CHECK(interleaves({2, 1}, {1, 0}, 2));
  CHECK(interleaves({2, 1}, {2, 0}, 2));
  CHECK_FALSE(interleaves({2, 1}, {0, 0}, 2));   // nu_1 < mu_2
  CHECK_FALSE(interleaves({2, 1}, {3, 0}, 2));   // nu_1 > mu_1
  CHECK_FALSE(interleaves({2, 1}, {2, 1}, 2));   // nu_b must vanish
  CHECK(interleaves({}, {}, 0));
}
