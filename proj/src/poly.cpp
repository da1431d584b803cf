#include "grothlat/poly.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace grothlat {

////////////////////////////
// budget                 //
////////////////////////////

namespace {

std::size_t initial_budget() {
  if (const char* env = std::getenv("GROTHLAT_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

std::atomic<std::size_t> g_budget{initial_budget()};

}  // namespace

std::size_t term_budget() { return g_budget.load(); }
void set_term_budget(std::size_t budget) { g_budget.store(budget); }

void check_budget(std::size_t count, const char* where) {
  if (count > g_budget.load()) {
    std::ostringstream os;
    os << where << ": size " << count << " exceeds budget " << g_budget.load();
    throw BudgetExceeded(os.str());
  }
}

////////////////////////////
// variables              //
////////////////////////////

std::string var_name(VarId v) {
  switch (v.kind()) {
    case VarKind::X: return "x" + std::to_string(v.index());
    case VarKind::Y: return "y" + std::to_string(v.index());
    case VarKind::Z: return "z" + std::to_string(v.index());
    case VarKind::Beta: return "beta";
    case VarKind::Q: return "q";
  }
  return "?";
}

std::optional<VarId> parse_var(const std::string& s) {
  if (s == "beta") return beta_var();
  if (s == "q") return q_var();
  if (s.size() < 2) return std::nullopt;
  VarKind k;
  switch (s[0]) {
    case 'x': k = VarKind::X; break;
    case 'y': k = VarKind::Y; break;
    case 'z': k = VarKind::Z; break;
    default: return std::nullopt;
  }
  unsigned idx = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    idx = idx * 10 + static_cast<unsigned>(s[i] - '0');
  }
  if (idx == 0 || idx > 0x0fff) return std::nullopt;
  return VarId(k, idx);
}

////////////////////////////
// rationals              //
////////////////////////////

std::string rat_text(const Rat& r) { return r.str(); }

Rat rat_parse(const std::string& text) {
  auto slash = text.find('/');
  using boost::multiprecision::cpp_int;
  if (slash == std::string::npos) return Rat(cpp_int(text));
  cpp_int num(text.substr(0, slash));
  cpp_int den(text.substr(slash + 1));
  return Rat(num, den);
}

////////////////////////////
// monomials              //
////////////////////////////

int Monomial::exponent(VarId v) const {
  for (const auto& [var, e] : factors)
    if (var == v) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [var, e] : factors) d += e;
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  std::size_t j = 0;
  for (const auto& [var, e] : factors) {
    while (j < m.factors.size() && m.factors[j].first < var) ++j;
    if (j == m.factors.size() || !(m.factors[j].first == var) || m.factors[j].second < e)
      return false;
  }
  return true;
}

Monomial Monomial::times(const Monomial& m) const {
  Monomial out;
  out.factors.reserve(factors.size() + m.factors.size());
  std::size_t i = 0, j = 0;
  while (i < factors.size() || j < m.factors.size()) {
    if (j == m.factors.size() ||
        (i < factors.size() && factors[i].first < m.factors[j].first)) {
      out.factors.push_back(factors[i++]);
    } else if (i == factors.size() || m.factors[j].first < factors[i].first) {
      out.factors.push_back(m.factors[j++]);
    } else {
      out.factors.emplace_back(factors[i].first, factors[i].second + m.factors[j].second);
      ++i, ++j;
    }
  }
  return out;
}

Monomial Monomial::divide_by(const Monomial& m) const {
  Monomial out;
  std::size_t j = 0;
  for (const auto& [var, e] : factors) {
    int sub = 0;
    while (j < m.factors.size() && m.factors[j].first < var) ++j;
    if (j < m.factors.size() && m.factors[j].first == var) sub = m.factors[j].second;
    if (e - sub > 0) out.factors.emplace_back(var, e - sub);
  }
  return out;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  // Walk both factor lists in ascending VarId; the first variable where the
  // exponents differ decides, higher exponent = larger monomial.
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    if (a.factors[i].first == b.factors[j].first) {
      if (a.factors[i].second != b.factors[j].second)
        return a.factors[i].second < b.factors[j].second;
      ++i, ++j;
    } else if (a.factors[i].first < b.factors[j].first) {
      return false;  // a has positive exponent where b has zero
    } else {
      return true;
    }
  }
  if (i < a.factors.size()) return false;
  return j < b.factors.size();
}

bool graded_less(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(
      a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
      [](const std::pair<VarId, int>& p, const std::pair<VarId, int>& q) {
        if (!(p.first == q.first)) return p.first < q.first;
        return p.second < q.second;
      });
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& [var, e] : m.factors) {
    h = (h ^ var.code) * 1099511628211ull;
    h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
  }
  return h;
}

Monomial mono_of(VarId v, int e) {
  Monomial m;
  if (e != 0) m.factors.emplace_back(v, e);
  return m;
}

////////////////////////////
// polynomials            //
////////////////////////////

Poly Poly::constant(const Rat& c) {
  Poly p;
  if (c != 0) p.terms_.emplace_back(Monomial{}, c);
  return p;
}

Poly Poly::variable(VarId v) { return term(mono_of(v), Rat(1)); }

Poly Poly::term(Monomial m, Rat c) {
  Poly p;
  if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.empty() && terms_[0].second == 1;
}

bool Poly::is_constant(Rat* value) const {
  if (terms_.empty()) {
    if (value) *value = 0;
    return true;
  }
  if (terms_.size() == 1 && terms_[0].first.empty()) {
    if (value) *value = terms_[0].second;
    return true;
  }
  return false;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() ||
        (i < a.terms_.size() && lex_less(a.terms_[i].first, b.terms_[j].first))) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || lex_less(b.terms_[j].first, a.terms_[i].first)) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      Rat c = a.terms_[i].second + b.terms_[j].second;
      if (c != 0) out.terms_.emplace_back(a.terms_[i].first, std::move(c));
      ++i, ++j;
    }
  }
  check_budget(out.terms_.size(), "poly add");
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  // Accumulate in a hash map, then sort once; exact coefficients make the
  // result independent of accumulation order.
  std::unordered_map<Monomial, Rat, MonomialHash> acc;
  acc.reserve(a.terms_.size() * 2);
  const Poly& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const Poly& large = a.terms_.size() <= b.terms_.size() ? b : a;
  for (const auto& [ma, ca] : small.terms_) {
    for (const auto& [mb, cb] : large.terms_) {
      Monomial m = ma.times(mb);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), ca * cb);
      else
        it->second += ca * cb;
    }
    check_budget(acc.size(), "poly mul");
  }
  std::vector<std::pair<Monomial, Rat>> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.emplace_back(std::move(const_cast<Monomial&>(m)), std::move(c));
  std::sort(terms.begin(), terms.end(),
            [](const auto& p, const auto& q) { return lex_less(p.first, q.first); });
  Poly out;
  out.terms_ = std::move(terms);
  return out;
}

Poly Poly::scaled(const Rat& c) const {
  if (c == 0) return Poly();
  Poly out = *this;
  for (auto& [m, k] : out.terms_) k *= c;
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly out = Poly::constant(1);
  Poly base = *this;
  while (e) {
    if (e & 1u) out = out * base;
    base = (e >>= 1) ? base * base : base;
  }
  return out;
}

int Poly::degree_in(VarId v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

Poly Poly::from_sorted(std::vector<std::pair<Monomial, Rat>> terms) {
  Poly out;
  out.terms_ = std::move(terms);
  return out;
}

Poly Poly::swap_adjacent(VarKind kind, unsigned i) const {
  VarId a(kind, i), b(kind, i + 1);
  std::vector<std::pair<Monomial, Rat>> terms = terms_;
  for (auto& [m, c] : terms) {
    int ea = m.exponent(a), eb = m.exponent(b);
    if (ea == eb) continue;
    Monomial nm;
    nm.factors.reserve(m.factors.size());
    for (const auto& [var, e] : m.factors)
      if (!(var == a) && !(var == b)) nm.factors.emplace_back(var, e);
    if (eb) nm.factors.emplace_back(a, eb);
    if (ea) nm.factors.emplace_back(b, ea);
    std::sort(nm.factors.begin(), nm.factors.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    m = std::move(nm);
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& p, const auto& q) { return lex_less(p.first, q.first); });
  return from_sorted(std::move(terms));
}

Poly Poly::substitute_zero(VarId v) const {
  std::vector<std::pair<Monomial, Rat>> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) == 0) terms.push_back({m, c});
  return from_sorted(std::move(terms));
}

Poly Poly::rename(const std::map<VarId, VarId>& images) const {
  // General (collision-merging) implementation: rebuild each monomial, then
  // re-accumulate.
  std::unordered_map<Monomial, Rat, MonomialHash> acc;
  for (const auto& [m, c] : terms_) {
    Monomial nm;
    nm.factors.reserve(m.factors.size());
    for (const auto& [var, e] : m.factors) {
      auto it = images.find(var);
      nm.factors.emplace_back(it == images.end() ? var : it->second, e);
    }
    std::sort(nm.factors.begin(), nm.factors.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    Monomial merged;
    for (const auto& [var, e] : nm.factors) {
      if (!merged.factors.empty() && merged.factors.back().first == var)
        merged.factors.back().second += e;
      else
        merged.factors.emplace_back(var, e);
    }
    acc[merged] += c;
  }
  std::vector<std::pair<Monomial, Rat>> terms;
  for (auto& [m, c] : acc)
    if (c != 0) terms.emplace_back(m, c);
  std::sort(terms.begin(), terms.end(),
            [](const auto& p, const auto& q) { return lex_less(p.first, q.first); });
  return from_sorted(std::move(terms));
}

bool Poly::canonical() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].second == 0) return false;
    for (const auto& [var, e] : terms_[i].first.factors)
      if (e <= 0) return false;
    for (std::size_t k = 1; k < terms_[i].first.factors.size(); ++k)
      if (!(terms_[i].first.factors[k - 1].first < terms_[i].first.factors[k].first))
        return false;
    if (i && !lex_less(terms_[i - 1].first, terms_[i].first)) return false;
  }
  return true;
}

////////////////////////////
// division               //
////////////////////////////

Poly exact_div(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw NonDivisible("exact_div: division by zero");
  if (num.is_zero()) return Poly();
  // Lead-term reduction under lex order.  The order is multiplicative, so if
  // num is a true multiple the lead of every remainder stays divisible and
  // the loop terminates with remainder zero; any stall is a genuine failure.
  std::map<Monomial, Rat, bool (*)(const Monomial&, const Monomial&)> rem(lex_less);
  for (const auto& [m, c] : num.terms()) rem.emplace(m, c);
  const auto& dlead = den.terms().back();
  std::vector<std::pair<Monomial, Rat>> quot;  // generated in descending order
  while (!rem.empty()) {
    auto lead = std::prev(rem.end());
    if (!dlead.first.divides(lead->first))
      throw NonDivisible("exact_div: leading term not divisible");
    Monomial t = lead->first.divide_by(dlead.first);
    Rat c = lead->second / dlead.second;
    quot.emplace_back(t, c);
    for (const auto& [dm, dc] : den.terms()) {
      Monomial m = t.times(dm);
      auto it = rem.find(m);
      if (it == rem.end()) {
        rem.emplace(std::move(m), -c * dc);
      } else {
        it->second -= c * dc;
        if (it->second == 0) rem.erase(it);
      }
    }
    check_budget(quot.size(), "exact_div");
  }
  std::reverse(quot.begin(), quot.end());
  return Poly::from_sorted(std::move(quot));
}

////////////////////////////
// serialization          //
////////////////////////////

namespace {

std::string mono_text(const Monomial& m) {
  // Display convention: deformation parameters (beta, q) lead the monomial,
  // alphabet variables follow, e.g. "beta*x1*y1".
  std::vector<std::pair<VarId, int>> factors(m.factors.begin(), m.factors.end());
  std::stable_partition(factors.begin(), factors.end(), [](const auto& f) {
    return f.first.kind() == VarKind::Beta || f.first.kind() == VarKind::Q;
  });
  std::string out;
  for (const auto& [var, e] : factors) {
    if (!out.empty()) out += "*";
    out += var_name(var);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string Poly::text() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rat>> terms = terms_;
  std::sort(terms.begin(), terms.end(),
            [](const auto& p, const auto& q) { return graded_less(p.first, q.first); });
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [m, c] = terms[i];
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (i == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string coeff = rat_text(a);
    bool fraction = coeff.find('/') != std::string::npos;
    if (m.empty()) {
      out += coeff;
    } else if (a == 1) {
      out += mono_text(m);
    } else {
      out += fraction ? "(" + coeff + ")" : coeff;
      out += "*" + mono_text(m);
    }
  }
  return out;
}

std::string Poly::json() const {
  nlohmann::ordered_json j;
  j["terms"] = nlohmann::ordered_json::array();
  std::vector<std::pair<Monomial, Rat>> terms = terms_;
  std::sort(terms.begin(), terms.end(),
            [](const auto& p, const auto& q) { return graded_less(p.first, q.first); });
  for (const auto& [m, c] : terms) {
    nlohmann::ordered_json t;
    t["coeff"] = rat_text(c);
    t["exps"] = nlohmann::ordered_json::object();
    for (const auto& [var, e] : m.factors) t["exps"][var_name(var)] = e;
    j["terms"].push_back(std::move(t));
  }
  return j.dump();
}

Poly Poly::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Poly out;
  for (const auto& t : j.at("terms")) {
    Monomial m;
    for (const auto& [name, e] : t.at("exps").items()) {
      auto v = parse_var(name);
      if (!v) throw std::runtime_error("from_json: bad variable " + name);
      m.factors.emplace_back(*v, e.get<int>());
    }
    std::sort(m.factors.begin(), m.factors.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    out += Poly::term(std::move(m), rat_parse(t.at("coeff").get<std::string>()));
  }
  return out;
}

////////////////////////////
// formal group helpers   //
////////////////////////////

Poly oplus(const Poly& a, const Poly& b) { return a + b + beta_poly() * a * b; }

Poly one_plus_beta(const Poly& a) { return Poly::constant(1) + beta_poly() * a; }

Poly one_plus_beta_var(VarId v) {
  return Poly::constant(1) + Poly::term(mono_of(beta_var()).times(mono_of(v)), Rat(1));
}

Poly beta_poly() { return Poly::variable(beta_var()); }
Poly q_poly() { return Poly::variable(q_var()); }

Poly one_minus_q2() { return Poly::constant(1) - Poly::term(mono_of(q_var(), 2), Rat(1)); }

}  // namespace grothlat
