#pragma once

// Exhaustive invariant sweeps over small parameter ranges. Each check
// reports a name, a pass flag and a short detail (first counterexample,
// or the number of cases examined).

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nomials {

struct VerifyOptions {
  /// Largest N (number of levels / ground-set size) swept.
  std::uint64_t max_levels = 5;
  /// Largest K (length / number of particles) swept.
  std::uint64_t max_size = 6;
  /// Largest n in the multichoose summation identities.
  std::uint64_t max_choose = 8;
  /// Largest urn size ||psi|| in the multivariate sweep (grounds of size <= 4).
  std::uint64_t max_urn = 8;
  /// Energy-family sweep: E <= max_energy, K <= max_energy_particles.
  std::uint64_t max_energy = 20;
  std::uint64_t max_energy_particles = 8;
  std::uint64_t seed = 20240601;
};

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

using CheckObserver = std::function<void(const CheckResult&)>;

/// Runs every check in a fixed order; `observe` (if set) sees each result as
/// soon as it is available.
std::vector<CheckResult> run_verification(const VerifyOptions& options, const CheckObserver& observe = {});

}  // namespace nomials
