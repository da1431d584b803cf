#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grothlat {

// Every failure mode the library reports deliberately. Callers that want a
// nonzero-exit policy (the CLI) map these to exit codes; the tests assert on
// the concrete types.

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NonDivisible : std::runtime_error {
  explicit NonDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct QPole : std::runtime_error {
  explicit QPole(const std::string& what) : std::runtime_error(what) {}
};

struct NotGrassmannian : std::runtime_error {
  explicit NotGrassmannian(const std::string& what) : std::runtime_error(what) {}
};

struct NotReduced : std::runtime_error {
  explicit NotReduced(const std::string& what) : std::runtime_error(what) {}
};

// Global guardrail for runaway symbolic computations.  The default caps both
// polynomial term counts and lattice enumeration work at one million; the
// environment variable GROTHLAT_BUDGET overrides it (parsed once, first use).
std::size_t term_budget();
void set_term_budget(std::size_t budget);
void check_budget(std::size_t count, const char* where);

}  // namespace grothlat
