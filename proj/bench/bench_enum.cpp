// Compares the row-transfer partition function (OpenMP over layer entries)
// against the serial depth-first reference on a spread of systems, checking
// exact agreement and reporting wall times.
//
//   bench_enum [n] [jobs]     (defaults: n = 3, jobs = 4)

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "grothlat/identities.hpp"

using namespace grothlat;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bench_one(const std::string& name, const LatticeSystem& sys, int jobs) {
  const auto t0 = Clock::now();
  const RatFunc serial = partition_function_serial(sys);
  const double serial_ms = ms_since(t0);

  const auto t1 = Clock::now();
  const RatFunc transfer1 = partition_function(sys, 1);
  const double transfer1_ms = ms_since(t1);

  const auto t2 = Clock::now();
  const RatFunc transferN = partition_function(sys, jobs);
  const double transferN_ms = ms_since(t2);

  const bool same = (serial == transfer1) && (transfer1 == transferN);
  std::cout << name << ": serial " << serial_ms << " ms, transfer(1) "
            << transfer1_ms << " ms, transfer(" << jobs << ") " << transferN_ms
            << " ms, terms " << transferN.num().size()
            << (same ? "" : "  ** MISMATCH **") << "\n";
  if (!same) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 3;
  const int jobs = argc > 2 ? std::atoi(argv[2]) : 4;
  if (n < 1 || n > 4 || jobs < 1) {
    std::cerr << "usage: bench_enum [n in 1..4] [jobs >= 1]\n";
    return 2;
  }

  for (const Perm& w : all_perms(n)) {
    bench_one("symbolic S_{" + perm_str(Perm::identity(n)) + "," + perm_str(w) + "}",
              build_system_G(Perm::identity(n), w, false), jobs);
  }
  for (const Perm& w : all_perms(n)) {
    bench_one("kernel R_" + perm_str(w), build_cauchy_system(w, Perm::identity(n)),
              jobs);
  }
  std::cout << "all transfer/serial values agree\n";
  return 0;
}
