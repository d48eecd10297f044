// Compares the serial reference runner against the OpenMP kernels on the
// exhaustive F2 sweeps used by the acceptance suite.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "linrel/laws.hpp"
#include "linrel/mp2.hpp"

using namespace linrel;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp unavailable; parallel runs fall back to serial\n");
#endif

  GeneratorConfig config;
  config.field = FieldSpec::prime(2);
  config.ambient_dim = 2;
  config.mode = GeneratorConfig::Mode::Exhaustive;

  std::printf("%-20s %10s %12s %12s %9s\n", "law", "instances", "serial(s)",
              "parallel(s)", "speedup");
  double serial_total = 0, parallel_total = 0;
  for (const Law& law : law_registry()) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict vs = check_law(law, config, ExecutionMode::Serial);
    double serial = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    Verdict vp = check_law(law, config, ExecutionMode::Parallel);
    double parallel = seconds_since(t0);
    if (vs.applicable != vp.applicable || vs.failure_count != vp.failure_count) {
      std::printf("MISMATCH between serial and parallel verdicts for %s\n",
                  law.id.c_str());
      return 1;
    }
    serial_total += serial;
    parallel_total += parallel;
    std::printf("%-20s %10llu %12.3f %12.3f %8.2fx\n", law.id.c_str(),
                static_cast<unsigned long long>(vs.tried), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
  }
  std::printf("%-20s %10s %12.3f %12.3f %8.2fx\n", "total", "", serial_total,
              parallel_total,
              parallel_total > 0 ? serial_total / parallel_total : 0.0);

  // The membership oracle sweep: every enumerated relation on F2^2.
  FieldSpec f2 = FieldSpec::prime(2);
  std::vector<LinearRelation> rels;
  for (Subspace& g : enumerate_subspaces(f2, 4)) rels.emplace_back(2, 2, std::move(g));
  auto sweep = [&](OracleExecution exec) {
    auto t0 = std::chrono::steady_clock::now();
    std::size_t members = 0;
    for (const LinearRelation& t : rels)
      if (mp2_membership_bruteforce(t, exec)) ++members;
    double dt = seconds_since(t0);
    return std::make_pair(members, dt);
  };
  auto [members_s, dt_s] = sweep(OracleExecution::Serial);
  auto [members_p, dt_p] = sweep(OracleExecution::Parallel);
  if (members_s != members_p) {
    std::printf("MISMATCH between serial and parallel oracle sweeps\n");
    return 1;
  }
  std::printf("%-20s %10zu %12.3f %12.3f %8.2fx\n", "mp2-oracle", rels.size(), dt_s,
              dt_p, dt_p > 0 ? dt_s / dt_p : 0.0);
  std::printf("mp2 members among %zu relations: %zu\n", rels.size(), members_s);
  return 0;
}
