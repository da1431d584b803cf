#include "grothlat/ratfunc.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace grothlat {

namespace {

// Division that reports failure instead of throwing; reduction probes call
// this constantly and a miss is not an error there.
std::optional<Poly> try_exact_div(const Poly& num, const Poly& den) {
  try {
    return exact_div(num, den);
  } catch (const NonDivisible&) {
    return std::nullopt;
  }
}

// Divide every term's exponent of v by e (exactly); nullopt if any term
// falls short.
std::optional<Poly> try_mono_div(const Poly& p, VarId v, int e) {
  if (e == 0) return p;
  std::vector<std::pair<Monomial, Rat>> terms;
  terms.reserve(p.size());
  Monomial d = mono_of(v, e);
  for (const auto& [m, c] : p.terms()) {
    if (m.exponent(v) < e) return std::nullopt;
    terms.emplace_back(m.divide_by(d), c);
  }
  return Poly::from_sorted(std::move(terms));
}

}  // namespace

////////////////////////////
// StructuredDenom        //
////////////////////////////

Poly StructuredDenom::expand() const {
  Poly out = Poly::constant(1);
  Monomial m;
  if (beta_pow) m = m.times(mono_of(beta_var(), beta_pow));
  if (q_pow) m = m.times(mono_of(q_var(), q_pow));
  out = Poly::term(std::move(m), Rat(1));
  for (const auto& [v, e] : shifts) out *= one_plus_beta_var(v).pow(static_cast<unsigned>(e));
  return out;
}

StructuredDenom StructuredDenom::times(const StructuredDenom& o) const {
  StructuredDenom out = *this;
  out.beta_pow += o.beta_pow;
  out.q_pow += o.q_pow;
  for (const auto& [v, e] : o.shifts) out.shifts[v] += e;
  return out;
}

StructuredDenom StructuredDenom::divide_by(const StructuredDenom& o) const {
  StructuredDenom out = *this;
  out.beta_pow -= o.beta_pow;
  out.q_pow -= o.q_pow;
  for (const auto& [v, e] : o.shifts) {
    out.shifts[v] -= e;
    if (out.shifts[v] == 0) out.shifts.erase(v);
  }
  return out;
}

StructuredDenom StructuredDenom::factor_max(const StructuredDenom& a,
                                            const StructuredDenom& b) {
  StructuredDenom out;
  out.beta_pow = std::max(a.beta_pow, b.beta_pow);
  out.q_pow = std::max(a.q_pow, b.q_pow);
  out.shifts = a.shifts;
  for (const auto& [v, e] : b.shifts) {
    auto it = out.shifts.find(v);
    if (it == out.shifts.end())
      out.shifts[v] = e;
    else
      it->second = std::max(it->second, e);
  }
  return out;
}

StructuredDenom StructuredDenom::swap_adjacent(VarKind kind, unsigned i) const {
  StructuredDenom out = *this;
  VarId a(kind, i), b(kind, i + 1);
  auto ia = out.shifts.find(a), ib = out.shifts.find(b);
  int ea = ia == out.shifts.end() ? 0 : ia->second;
  int eb = ib == out.shifts.end() ? 0 : ib->second;
  if (ea == eb) return out;
  out.shifts.erase(a);
  out.shifts.erase(b);
  if (eb) out.shifts[a] = eb;
  if (ea) out.shifts[b] = ea;
  return out;
}

std::string StructuredDenom::text() const {
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += "*";
    out += piece;
  };
  if (beta_pow == 1) append("beta");
  if (beta_pow > 1) append("beta^" + std::to_string(beta_pow));
  if (q_pow == 1) append("q");
  if (q_pow > 1) append("q^" + std::to_string(q_pow));
  for (const auto& [v, e] : shifts) {
    std::string piece = "(1+beta*" + var_name(v) + ")";
    if (e > 1) piece += "^" + std::to_string(e);
    append(piece);
  }
  return out.empty() ? "1" : out;
}

////////////////////////////
// RatFunc                //
////////////////////////////

RatFunc::RatFunc(Poly num, StructuredDenom den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) den_ = StructuredDenom{};
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  StructuredDenom common = StructuredDenom::factor_max(a.den_, b.den_);
  Poly pa = a.num_ * common.divide_by(a.den_).expand();
  Poly pb = b.num_ * common.divide_by(b.den_).expand();
  return RatFunc(pa + pb, common).reduced();
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_.times(b.den_)).reduced();
}

RatFunc RatFunc::scaled(const Rat& c) const {
  if (c == 0) return RatFunc();
  return RatFunc(num_.scaled(c), den_);
}

RatFunc RatFunc::pow(unsigned e) const {
  RatFunc out = RatFunc(Poly::constant(1));
  RatFunc base = *this;
  while (e) {
    if (e & 1u) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_.expand() == b.num_ * a.den_.expand();
}

RatFunc RatFunc::reduced() const {
  if (num_.is_zero()) return RatFunc();
  Poly n = num_;
  StructuredDenom d = den_;
  for (auto it = d.shifts.begin(); it != d.shifts.end();) {
    Poly shift = one_plus_beta_var(it->first);
    while (it->second > 0) {
      auto q = try_exact_div(n, shift);
      if (!q) break;
      n = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? d.shifts.erase(it) : std::next(it);
  }
  if (d.q_pow > 0) {
    int common = d.q_pow;
    for (const auto& [m, c] : n.terms()) common = std::min(common, m.exponent(q_var()));
    if (common > 0) {
      n = *try_mono_div(n, q_var(), common);
      d.q_pow -= common;
    }
  }
  if (d.beta_pow > 0) {
    int common = d.beta_pow;
    for (const auto& [m, c] : n.terms()) common = std::min(common, m.exponent(beta_var()));
    if (common > 0) {
      n = *try_mono_div(n, beta_var(), common);
      d.beta_pow -= common;
    }
  }
  return RatFunc(std::move(n), std::move(d));
}

Poly RatFunc::as_poly() const {
  RatFunc r = reduced();
  if (!r.den_.is_one()) throw NonDivisible("as_poly: residual denominator " + r.den_.text());
  return r.num_;
}

Poly RatFunc::specialize_q_zero() const {
  RatFunc r = reduced();
  if (r.den_.q_pow > 0) throw QPole("specialize_q_zero: q pole of order " +
                                    std::to_string(r.den_.q_pow));
  Poly n = r.num_.set_q_zero();
  if (n.is_zero()) return n;
  if (r.den_.beta_pow > 0) {
    auto q = try_mono_div(n, beta_var(), r.den_.beta_pow);
    if (!q) throw NonDivisible("specialize_q_zero: residual beta^" +
                               std::to_string(r.den_.beta_pow));
    n = std::move(*q);
  }
  for (const auto& [v, e] : r.den_.shifts)
    for (int k = 0; k < e; ++k) n = exact_div(n, one_plus_beta_var(v));
  return n;
}

RatFunc RatFunc::swap_adjacent(VarKind kind, unsigned i) const {
  return RatFunc(num_.swap_adjacent(kind, i), den_.swap_adjacent(kind, i));
}

RatFunc RatFunc::substitute(const std::map<VarId, RatFunc>& bind) const {
  StructuredDenom d;
  d.beta_pow = den_.beta_pow;
  d.q_pow = den_.q_pow;
  for (const auto& [v, e] : den_.shifts) {
    auto it = bind.find(v);
    if (it == bind.end()) {
      d.shifts[v] += e;
      continue;
    }
    const RatFunc& value = it->second;
    if (value.is_zero()) continue;  // (1 + beta*0) = 1
    if (value.is_poly() && value.num().size() == 1 &&
        value.num().terms()[0].second == 1 &&
        value.num().terms()[0].first.factors.size() == 1 &&
        value.num().terms()[0].first.factors[0].second == 1) {
      d.shifts[value.num().terms()[0].first.factors[0].first] += e;
      continue;
    }
    throw std::logic_error("RatFunc::substitute: denominator shift bound to non-variable");
  }
  RatFunc n = grothlat::substitute(num_, bind);
  return RatFunc(n.num(), n.den().times(d)).reduced();
}

RatFunc substitute(const Poly& p, const std::map<VarId, RatFunc>& bind) {
  RatFunc out;
  for (const auto& [m, c] : p.terms()) {
    RatFunc term = RatFunc(Poly::constant(c));
    Monomial rest;
    for (const auto& [v, e] : m.factors) {
      auto it = bind.find(v);
      if (it == bind.end())
        rest.factors.emplace_back(v, e);
      else
        term = term * it->second.pow(static_cast<unsigned>(e));
    }
    out += term * RatFunc(Poly::term(std::move(rest), Rat(1)));
  }
  return out;
}

std::string RatFunc::text() const {
  if (den_.is_one()) return num_.text();
  return "(" + num_.text() + ") / (" + den_.text() + ")";
}

std::string RatFunc::json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(num_.json());
  nlohmann::ordered_json d;
  d["beta"] = den_.beta_pow;
  d["q"] = den_.q_pow;
  d["shifts"] = nlohmann::ordered_json::object();
  for (const auto& [v, e] : den_.shifts) d["shifts"][var_name(v)] = e;
  j["den"] = std::move(d);
  return j.dump();
}

////////////////////////////
// group law              //
////////////////////////////

RatFunc oplus(const RatFunc& a, const RatFunc& b) {
  return a + b + RatFunc(beta_poly()) * a * b;
}

RatFunc ominus_var(VarId v) {
  StructuredDenom d;
  d.shifts[v] = 1;
  return RatFunc(-Poly::variable(v), d);
}

RatFunc one_plus_beta(const RatFunc& a) {
  return RatFunc(Poly::constant(1)) + RatFunc(beta_poly()) * a;
}

}  // namespace grothlat
