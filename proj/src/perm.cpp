#include "grothlat/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace grothlat {

Perm Perm::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm Perm::longest(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = n + 1 - i;
  return Perm(std::move(v));
}

bool Perm::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Perm compose(const Perm& a, const Perm& b) {
  std::vector<int> v(b.img.size());
  for (int i = 1; i <= b.n(); ++i) v[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Perm(std::move(v));
}

Perm inverse(const Perm& w) {
  std::vector<int> v(w.img.size());
  for (int i = 1; i <= w.n(); ++i) v[static_cast<std::size_t>(w(i) - 1)] = i;
  return Perm(std::move(v));
}

int length(const Perm& w) {
  int count = 0;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

Perm right_s(const Perm& w, int i) {
  Perm out = w;
  std::swap(out.img[static_cast<std::size_t>(i - 1)], out.img[static_cast<std::size_t>(i)]);
  return out;
}

Perm left_s(int i, const Perm& w) {
  Perm out = w;
  for (auto& v : out.img) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return out;
}

bool right_descent(const Perm& w, int i) { return w(i) > w(i + 1); }

bool left_descent(const Perm& w, int i) {
  Perm wi = inverse(w);
  return wi(i) > wi(i + 1);
}

std::vector<int> lex_first_reduced_word(const Perm& w) {
  // Greedy: always strip the smallest left descent; the first letter is
  // minimal and so, inductively, is the whole word.
  std::vector<int> word;
  Perm u = w;
  while (!u.is_identity()) {
    for (int i = 1; i < u.n(); ++i) {
      if (left_descent(u, i)) {
        word.push_back(i);
        u = left_s(i, u);
        break;
      }
    }
  }
  return word;
}

namespace {

void reduced_words_rec(const Perm& u, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
  if (u.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int i = 1; i < u.n(); ++i) {
    if (left_descent(u, i)) {
      prefix.push_back(i);
      reduced_words_rec(left_s(i, u), prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<int>> all_reduced_words(const Perm& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  reduced_words_rec(w, prefix, out);
  return out;
}

Perm from_word(const std::vector<int>& word, int n) {
  Perm u = Perm::identity(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) u = left_s(*it, u);
  return u;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool bruhat_leq(const Perm& u, const Perm& v) {
  // u <= v iff for all (i,j): #{k<=i : u(k) >= j} <= #{k<=i : v(k) >= j}.
  int n = u.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = 2; j <= n; ++j) {
      int cu = 0, cv = 0;
      for (int k = 1; k <= i; ++k) {
        cu += u(k) >= j;
        cv += v(k) >= j;
      }
      if (cu > cv) return false;
    }
  }
  return true;
}

bool weak_left_leq(const Perm& u, const Perm& v) {
  return length(v) == length(u) + length(compose(v, inverse(u)));
}

bool weak_right_leq(const Perm& u, const Perm& v) {
  return length(v) == length(u) + length(compose(inverse(u), v));
}

std::optional<Perm> parse_perm(const std::string& text) {
  std::vector<int> vals;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      if (piece.empty()) return std::nullopt;
      for (char c : piece)
        if (c < '0' || c > '9') return std::nullopt;
      vals.push_back(std::stoi(piece));
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') return std::nullopt;
      vals.push_back(c - '0');
    }
  }
  if (vals.empty()) return std::nullopt;
  if (vals.size() > 8)
    throw BudgetExceeded("permutation size " + std::to_string(vals.size()) + " exceeds 8");
  std::vector<bool> seen(vals.size() + 1, false);
  for (int v : vals) {
    if (v < 1 || v > static_cast<int>(vals.size()) || seen[static_cast<std::size_t>(v)])
      return std::nullopt;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Perm(std::move(vals));
}

std::string perm_str(const Perm& w) {
  std::string out;
  bool commas = w.n() > 9;
  for (int i = 1; i <= w.n(); ++i) {
    if (commas && i > 1) out += ",";
    out += std::to_string(w(i));
  }
  return out;
}

////////////////////////////
// word combinatorics     //
////////////////////////////

std::vector<int> eta_of(const Perm& w) { return inverse(w).img; }

std::vector<int> act_letters(const Perm& v, const std::vector<int>& word) {
  Perm vi = inverse(v);
  std::vector<int> out(word.size());
  for (int i = 1; i <= v.n(); ++i)
    out[static_cast<std::size_t>(i - 1)] = word[static_cast<std::size_t>(vi(i) - 1)];
  return out;
}

Perm perm_of_eta(const std::vector<int>& eta) { return inverse(Perm(eta)); }

Perm w_max_of(const Perm& w) {
  Perm out = w;
  for (int i = w(1) - 1; i >= 1; --i) out = left_s(i, out);
  return out;
}

Perm w_minus_of(const Perm& w) {
  Perm u = w_max_of(w);
  std::vector<int> v(static_cast<std::size_t>(w.n() - 1));
  for (int i = 1; i < w.n(); ++i) v[static_cast<std::size_t>(i - 1)] = u(i + 1) - 1;
  return Perm(std::move(v));
}

Perm w_plus_of(const Perm& w) {
  std::vector<int> v(static_cast<std::size_t>(w.n() + 1));
  v[0] = 1;
  for (int i = 1; i <= w.n(); ++i) v[static_cast<std::size_t>(i)] = w(i) + 1;
  return Perm(std::move(v));
}

Perm w_min_of(const Perm& w) {
  std::vector<int> eta = eta_of(w);
  int n = w.n();
  Perm out = w;
  for (int i = n - 1; i >= 1; --i) {
    bool later_smaller = false;
    for (int j = i + 1; j <= n; ++j)
      later_smaller |= eta[static_cast<std::size_t>(i - 1)] > eta[static_cast<std::size_t>(j - 1)];
    if (later_smaller) out = left_s(i, out);
  }
  return out;
}

std::vector<Perm> lemma_A_set(const Perm& w) {
  int n = w.n();
  std::set<Perm> found;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    Perm v = w;
    int weight = 0;
    for (int i = n - 1; i >= 1; --i) {
      if (mask & (1u << (i - 1))) {
        v = left_s(i, v);
        ++weight;
      }
    }
    if (length(w) == length(v) + weight && v(1) == 1) found.insert(v);
  }
  return std::vector<Perm>(found.begin(), found.end());
}

std::vector<Perm> interval_set(const Perm& w) {
  Perm lo = w_min_of(w), hi = w_max_of(w);
  std::vector<Perm> out;
  for (const Perm& v : all_perms(w.n()))
    if (bruhat_leq(lo, v) && weak_left_leq(v, hi)) out.push_back(v);
  return out;
}

////////////////////////////
// Grassmannian data      //
////////////////////////////

GrassmannianData grassmannian_data(const Perm& w) {
  std::vector<int> descents;
  for (int i = 1; i < w.n(); ++i)
    if (right_descent(w, i)) descents.push_back(i);
  if (descents.size() > 1)
    throw NotGrassmannian("permutation " + perm_str(w) + " has " +
                          std::to_string(descents.size()) + " descents");
  GrassmannianData out;
  if (descents.empty()) return out;
  out.b = descents[0];
  out.lambda.resize(static_cast<std::size_t>(out.b));
  for (int i = 1; i <= out.b; ++i)
    out.lambda[static_cast<std::size_t>(out.b - i)] = w(i) - i;
  return out;
}

bool interleaves(const std::vector<int>& mu, const std::vector<int>& nu, int b) {
  auto part = [](const std::vector<int>& p, int i) {
    return i >= 1 && i <= static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i - 1)] : 0;
  };
  if (part(nu, b) != 0) return false;
  for (int i = 1; i <= b; ++i)
    if (!(part(mu, i) >= part(nu, i) && part(nu, i) >= part(mu, i + 1))) return false;
  return true;
}

}  // namespace grothlat
