// Command-line front end: compute family members, run verification sweeps,
// and enumerate lattice states.  Exit codes: 0 success, 1 failed
// verification, 2 usage/parse error, 3 exhausted budget or a q-pole.

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grothlat/identities.hpp"
#include "grothlat/pipedreams.hpp"
#include "grothlat/twist.hpp"
#include "grothlat/ybe.hpp"

namespace {

using namespace grothlat;

////////////////////////////
// LaTeX rendering        //
////////////////////////////

std::string latex_rat(const Rat& r, bool lead) {
  const bool neg = r < 0;
  const std::string body = rat_text(neg ? Rat(-r) : r);
  std::string out = lead ? (neg ? "-" : "") : (neg ? " - " : " + ");
  const auto slash = body.find('/');
  if (slash == std::string::npos)
    out += body;
  else
    out += "\\tfrac{" + body.substr(0, slash) + "}{" + body.substr(slash + 1) + "}";
  return out;
}

std::string latex_var(VarId v) {
  switch (v.kind()) {
    case VarKind::Beta: return "\\beta";
    case VarKind::Q: return "q";
    default: {
      const std::string name = var_name(v);
      return name.substr(0, 1) + "_{" + name.substr(1) + "}";
    }
  }
}

std::string latex_mono(const Monomial& m) {
  // Same display convention as the text form: beta and q lead the monomial.
  std::vector<std::pair<VarId, int>> factors(m.factors.begin(), m.factors.end());
  std::stable_partition(factors.begin(), factors.end(), [](const auto& f) {
    return f.first.kind() == VarKind::Beta || f.first.kind() == VarKind::Q;
  });
  std::string out;
  for (const auto& [v, e] : factors) {
    if (!out.empty()) out += " ";
    out += latex_var(v);
    if (e > 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

std::string latex_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rat>> terms = p.terms();
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return graded_less(a.first, b.first); });
  std::string out;
  bool lead = true;
  for (const auto& [mono, coeff] : terms) {
    const Rat unit = (coeff < 0) ? Rat(-1) : Rat(1);
    const std::string body = latex_mono(mono);
    if (mono.empty() || coeff != unit) {
      out += latex_rat(coeff, lead);
      if (!body.empty()) out += " " + body;
    } else {
      out += lead ? (coeff < 0 ? "-" : "") : (coeff < 0 ? " - " : " + ");
      out += body;
    }
    lead = false;
  }
  return out;
}

std::string latex_ratfunc(const RatFunc& f) {
  const RatFunc r = f.reduced();
  if (r.is_poly()) return latex_poly(r.num());
  std::string den;
  const StructuredDenom& d = r.den();
  if (d.beta_pow > 0) {
    den += "\\beta";
    if (d.beta_pow > 1) den += "^{" + std::to_string(d.beta_pow) + "}";
  }
  if (d.q_pow > 0) {
    den += " q";
    if (d.q_pow > 1) den += "^{" + std::to_string(d.q_pow) + "}";
  }
  for (const auto& [v, e] : d.shifts) {
    den += " (1 + \\beta " + latex_var(v) + ")";
    if (e > 1) den += "^{" + std::to_string(e) + "}";
  }
  return "\\frac{" + latex_poly(r.num()) + "}{" + den + "}";
}

////////////////////////////
// output plumbing        //
////////////////////////////

void emit(const RatFunc& value, const std::string& format) {
  if (format == "json") {
    std::cout << value.json() << "\n";
  } else if (format == "latex") {
    std::cout << latex_ratfunc(value) << "\n";
  } else {
    const RatFunc r = value.reduced();
    std::cout << (r.is_poly() ? r.num().text() : r.text()) << "\n";
  }
}

std::optional<Perm> need_perm(const std::string& text, const char* what) {
  auto p = parse_perm(text);
  if (!p) std::cerr << "invalid permutation for " << what << ": '" << text << "'\n";
  return p;
}

////////////////////////////
// compute                //
////////////////////////////

struct ComputeArgs {
  std::string family, perm, perm_v, perm_w;
  std::string route = "operators";
  std::string format = "text";
  int n = 0;
  int jobs = 1;
  bool q0 = false;
  bool force = false;
};

int run_compute(const ComputeArgs& a) {
  Perm w = Perm::identity(1), v = Perm::identity(1);
  bool biaxial = a.family == "biaxial";
  if (biaxial) {
    if (a.perm_v.empty() || a.perm_w.empty()) {
      std::cerr << "family biaxial needs --perm-v and --perm-w\n";
      return 2;
    }
    auto pv = need_perm(a.perm_v, "--perm-v"), pw = need_perm(a.perm_w, "--perm-w");
    if (!pv || !pw) return 2;
    if (pv->n() != pw->n()) {
      std::cerr << "--perm-v and --perm-w must have the same size\n";
      return 2;
    }
    v = *pv;
    w = *pw;
  } else {
    if (a.perm.empty()) {
      std::cerr << "family " << a.family << " needs --perm\n";
      return 2;
    }
    auto pw = need_perm(a.perm, "--perm");
    if (!pw) return 2;
    w = *pw;
  }
  if (a.n != 0 && a.n != w.n()) {
    std::cerr << "--n disagrees with the permutation length\n";
    return 2;
  }
  const int cap = (a.route == "lattice") ? 3 : 4;
  if (w.n() > cap && !a.force) {
    std::cerr << "n = " << w.n() << " exceeds the default cap " << cap
              << " for route " << a.route << "; pass --force to override\n";
    return 2;
  }
  if (a.route == "pipedreams" && (a.family != "G" || !a.q0)) {
    std::cerr << "route pipedreams covers family G at q = 0 only\n";
    return 2;
  }

  try {
    RatFunc value;
    if (a.route == "lattice") {
      if (a.family == "G")
        value = partition_function(build_system_G(Perm::identity(w.n()), w, a.q0), a.jobs);
      else if (a.family == "H")
        value = partition_function(
            build_system_G(compose(Perm::longest(w.n()), inverse(w)), Perm::longest(w.n()), a.q0),
            a.jobs);
      else
        value = partition_function(build_system_G(v, w, a.q0), a.jobs);
    } else if (a.route == "pipedreams") {
      value = RatFunc(grothendieck_via_pd(w));
    } else if (a.family == "G") {
      value = a.q0 ? RatFunc(grothendieck_beta(w)) : grothendieck_q(w);
    } else if (a.family == "H") {
      value = a.q0 ? RatFunc(dual_beta(w)) : dual_q(w);
    } else {
      value = a.q0 ? RatFunc(biaxial_beta(v, w)) : biaxial_q(v, w);
    }
    emit(value, a.format);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const QPole& e) {
    std::cerr << "q-pole: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

////////////////////////////
// verify                 //
////////////////////////////

struct NamedCheck {
  std::string name;
  std::function<CheckResult()> run;
};

CheckResult from_ybe(RFam fam) {
  const YbeReport rep = verify_ybe(fam);
  CheckResult res;
  if (!rep.ok) res.fail(rep.counterexample);
  return res;
}

CheckResult from_twist() {
  const TwistReport rep = verify_twist();
  CheckResult res;
  if (!rep.rect_ok || !rep.row_ok) res.fail(rep.detail);
  return res;
}

int interleaving_stride(int n) {
  if (n <= 2) return 1;
  if (n == 3) return 17;
  return 997;
}

// The default n caps: symbolic lattice sweeps 3, operator sweeps 4.
const std::map<std::string, int>& verify_caps() {
  static const std::map<std::string, int> caps = {
      {"cauchy", 3},          {"hudson", 3},   {"dual", 3},
      {"pipedream-bijection", 3}, {"biaxial-cauchy", 4}, {"branching", 4},
      {"hecke", 4},
  };
  return caps;
}

void add_verify(std::vector<NamedCheck>& out, const std::string& which, int n, int jobs) {
  const auto per_perm = [n](std::function<CheckResult(const Perm&)> fn) {
    return [n, fn] {
      CheckResult res;
      for (const Perm& w : all_perms(n)) res.merge(fn(w));
      return res;
    };
  };
  if (which == "ybe-row") {
    out.push_back({"ybe-row", [] {
                     CheckResult res = from_ybe(RFam::ROW);
                     res.merge(from_ybe(RFam::SSTAR_ROW));
                     return res;
                   }});
  } else if (which == "ybe-col") {
    out.push_back({"ybe-col", [] { return from_ybe(RFam::COL); }});
  } else if (which == "ybe-rhombus") {
    out.push_back({"ybe-rhombus", [] { return from_ybe(RFam::RHOMBUS); }});
  } else if (which == "drinfeld") {
    out.push_back({"drinfeld", [] { return from_twist(); }});
  } else if (which == "cauchy") {
    out.push_back({"cauchy", [n, per_perm] {
                     CheckResult res = per_perm(check_cauchy_kernel)();
                     res.merge(check_cauchy_w0(n));
                     res.merge(check_pair_boundary_emptiness(n));
                     res.merge(check_interleaved_row_emptiness(n, interleaving_stride(n)));
                     return res;
                   }});
  } else if (which == "biaxial-cauchy") {
    out.push_back({"biaxial-cauchy", [n] {
                     CheckResult res;
                     for (const Perm& v : all_perms(n))
                       for (const Perm& w : all_perms(n))
                         res.merge(check_biaxial_cauchy(v, w));
                     return res;
                   }});
  } else if (which == "branching") {
    out.push_back({"branching", [n, per_perm] {
                     CheckResult res = per_perm(check_branching)();
                     res.merge(per_perm(check_interval_threeway)());
                     res.merge(check_grassmannian_pairs(n));
                     return res;
                   }});
  } else if (which == "hudson") {
    out.push_back({"hudson", [per_perm] {
                     CheckResult res = per_perm(check_hudson)();
                     res.merge(per_perm(check_left_action)());
                     return res;
                   }});
  } else if (which == "dual") {
    out.push_back({"dual", [jobs, per_perm] {
                     return per_perm([jobs](const Perm& w) { return check_dual(w, jobs); })();
                   }});
  } else if (which == "pipedream-bijection") {
    out.push_back({"pipedream-bijection", per_perm(check_pd_bijection)});
  } else if (which == "hecke") {
    out.push_back({"hecke", [n] { return check_hecke_relations(n, 12, 20240816u); }});
  }
}

int run_verify(const std::string& which, int n, int jobs, bool force) {
  static const std::vector<std::string> order = {
      "ybe-row",  "ybe-col",        "ybe-rhombus",   "drinfeld",
      "cauchy",   "biaxial-cauchy", "branching",     "hudson",
      "dual",     "pipedream-bijection", "hecke",
  };
  std::vector<NamedCheck> checks;
  if (which == "all") {
    for (const std::string& name : order) {
      int eff = n;
      if (auto it = verify_caps().find(name); it != verify_caps().end() && !force)
        eff = std::min(eff, it->second);
      add_verify(checks, name, eff, jobs);
    }
  } else {
    if (auto it = verify_caps().find(which); it != verify_caps().end()) {
      if (n > it->second && !force) {
        std::cerr << "n = " << n << " exceeds the default cap " << it->second
                  << " for " << which << "; pass --force to override\n";
        return 2;
      }
    }
    add_verify(checks, which, n, jobs);
  }
  if (checks.empty()) {
    std::cerr << "unknown verification: " << which << "\n";
    return 2;
  }
  bool all_ok = true;
  for (const NamedCheck& c : checks) {
    CheckResult res;
    try {
      res = c.run();
    } catch (const BudgetExceeded& e) {
      std::cerr << "budget exceeded: " << e.what() << "\n";
      return 3;
    } catch (const QPole& e) {
      std::cerr << "q-pole: " << e.what() << "\n";
      return 3;
    }
    if (res.ok) {
      std::cout << c.name << ": pass\n";
    } else {
      std::cout << c.name << ": FAIL: " << res.detail << "\n";
      all_ok = false;
    }
  }
  return all_ok ? 0 : 1;
}

////////////////////////////
// states                 //
////////////////////////////

struct StatesArgs {
  std::string system;
  std::string perm_v, perm_w;
  std::vector<int> pair;
  bool q0 = false;
  bool flip = false;
  bool count = false;
  bool dump = false;
};

int run_states(const StatesArgs& a) {
  LatticeSystem sys;
  if (a.system == "G") {
    if (a.perm_w.empty()) {
      std::cerr << "states --system G needs --perm-w (and optionally --perm-v)\n";
      return 2;
    }
    auto pw = need_perm(a.perm_w, "--perm-w");
    if (!pw) return 2;
    Perm v = Perm::identity(pw->n());
    if (!a.perm_v.empty()) {
      auto pv = need_perm(a.perm_v, "--perm-v");
      if (!pv || pv->n() != pw->n()) {
        std::cerr << "--perm-v must match --perm-w in size\n";
        return 2;
      }
      v = *pv;
    }
    const int n = pw->n();
    std::vector<RatFunc> xs, ys;
    for (int i = 1; i <= n; ++i) {
      xs.emplace_back(Poly::variable(xvar(static_cast<unsigned>(i))));
      ys.emplace_back(Poly::variable(yvar(static_cast<unsigned>(i))));
    }
    sys = a.flip ? build_rect_system(v, *pw, ys, xs, a.q0)
                 : build_rect_system(v, *pw, xs, ys, a.q0);
  } else if (a.system == "cauchy") {
    if (a.perm_w.empty()) {
      std::cerr << "states --system cauchy needs --perm-w\n";
      return 2;
    }
    auto pw = need_perm(a.perm_w, "--perm-w");
    if (!pw) return 2;
    Perm v = Perm::identity(pw->n());
    if (!a.perm_v.empty()) {
      auto pv = need_perm(a.perm_v, "--perm-v");
      if (!pv || pv->n() != pw->n()) {
        std::cerr << "--perm-v must match --perm-w in size\n";
        return 2;
      }
      v = *pv;
    }
    sys = build_cauchy_system(*pw, v);
    if (!a.pair.empty()) {
      const int n = pw->n();
      const int i = a.pair[0], j = a.pair[1], c = a.pair[2];
      if (i < 1 || i > n || j < 1 || j > n || c < 1 || c > n) {
        std::cerr << "--pair indices out of range\n";
        return 2;
      }
      sys.right[static_cast<std::size_t>(n - i)] = c;
      sys.right[static_cast<std::size_t>(n - 1 + j)] = c;
    }
  } else {
    std::cerr << "unknown system: " << a.system << "\n";
    return 2;
  }

  try {
    if (a.count) {
      std::cout << "states: " << count_states(sys) << "\n";
      return 0;
    }
    const std::vector<LatticeState> states = enumerate_states(sys);
    std::cout << "states: " << states.size() << "\n";
    std::size_t idx = 0;
    for (const LatticeState& st : states) {
      std::cout << "state " << idx++ << ": weight = ";
      const RatFunc wgt = state_weight(sys, st).reduced();
      std::cout << (wgt.is_poly() ? wgt.num().text() : wgt.text()) << "\n";
      if (a.dump) std::cout << state_dump(sys, st);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with biaxial double Grothendieck polynomials"};
  app.require_subcommand(1);

  ComputeArgs ca;
  CLI::App* compute = app.add_subcommand("compute", "Evaluate one family member");
  compute->add_option("--family", ca.family, "G, H, or biaxial")
      ->required()
      ->check(CLI::IsMember({"G", "H", "biaxial"}));
  compute->add_option("--perm", ca.perm, "one-line permutation, e.g. 1432");
  compute->add_option("--perm-v", ca.perm_v, "first index of the biaxial family");
  compute->add_option("--perm-w", ca.perm_w, "second index of the biaxial family");
  compute->add_option("--n", ca.n, "size consistency check");
  compute->add_flag("--q0", ca.q0, "specialize q = 0");
  compute->add_option("--route", ca.route, "computation path")
      ->check(CLI::IsMember({"operators", "lattice", "pipedreams"}));
  compute->add_option("--format", ca.format, "output form")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  compute->add_option("--jobs", ca.jobs, "worker threads for lattice sums")
      ->check(CLI::PositiveNumber);
  compute->add_flag("--force", ca.force, "override the default n caps");

  std::string which;
  int vn = 3, vjobs = 1;
  bool vforce = false;
  CLI::App* verify = app.add_subcommand("verify", "Run an identity sweep");
  verify->add_option("which", which, "what to verify")
      ->required()
      ->check(CLI::IsMember({"ybe-row", "ybe-col", "ybe-rhombus", "drinfeld", "cauchy",
                             "biaxial-cauchy", "branching", "hudson", "dual",
                             "pipedream-bijection", "hecke", "all"}));
  verify->add_option("--n", vn, "sweep size (default 3, capped per check)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", vjobs, "worker threads for lattice sums")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--force", vforce, "override the default n caps");

  StatesArgs sa;
  CLI::App* states = app.add_subcommand("states", "Enumerate admissible states");
  states->add_option("--system", sa.system, "G or cauchy")
      ->required()
      ->check(CLI::IsMember({"G", "cauchy"}));
  states->add_option("--perm-v", sa.perm_v, "top boundary (G) or plain-row colors (cauchy)");
  states->add_option("--perm-w", sa.perm_w, "left boundary (G) or starred-row colors (cauchy)");
  states->add_option("--pair", sa.pair, "replace right boundary: starred row i, plain row j, color c")
      ->expected(3);
  states->add_flag("--q0", sa.q0, "drop all q-dependent admissible patterns");
  states->add_flag("--flip", sa.flip, "rows y and columns x instead of rows x");
  states->add_flag("--count", sa.count, "print only the tally");
  states->add_flag("--dump", sa.dump, "print every edge label grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (compute->parsed()) return run_compute(ca);
  if (verify->parsed()) return run_verify(which, vn, vjobs, vforce);
  return run_states(sa);
}
