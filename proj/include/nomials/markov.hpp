#pragma once

// A sum-preserving Markov chain on M[K,i](N): move one particle one level
// down, then one (possibly other) particle one level up. The
// Boltzmann-on-multisets distribution is stationary for it. Conjugating with
// frequentist learning and its Bayesian inversion gives a chain on levels
// with Boltzmann-on-numbers as fixed point.

#include "nomials/boltzmann.hpp"
#include "nomials/dist.hpp"
#include "nomials/multiset.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace nomials {

/// The enumerated state space M[K,i](N) in canonical order.
class ShiftSpace {
 public:
  explicit ShiftSpace(const EnergyConfig& config);

  const EnergyConfig& config() const { return config_; }
  const std::vector<Multiset>& states() const { return states_; }
  bool contains(const Multiset& phi) const;
  /// Position of phi in states(); throws std::invalid_argument if absent.
  std::size_t index_of(const Multiset& phi) const;

 private:
  EnergyConfig config_;
  std::vector<Multiset> states_;
};

/// One transition from phi. Throws std::invalid_argument if phi is not in
/// M[K,i](N) for the given config.
Dist<Multiset> shift(const EnergyConfig& config, const Multiset& phi);
Channel<Multiset, Multiset> shift_channel(const EnergyConfig& config);

/// TV(c_*(omega), omega), exact; zero iff omega is stationary for c.
template <class T>
Rational stationarity_residual(const Dist<T>& omega, const Channel<T, T>& c) {
  return total_variation(pushforward(c, omega), omega);
}

/// Bayesian inversion of flrn with prior B_M[N,K](i):
/// weight(phi) = (phi) phi(j) / sum_psi (psi) psi(j).
/// Throws std::invalid_argument if no configuration has a particle at j.
Dist<Multiset> flrn_dagger(const EnergyConfig& config, Level j);
Channel<Level, Multiset> flrn_dagger_channel(const EnergyConfig& config);
/// sum_psi (psi) psi(j), which equals K * C_N(K-1, i-j).
Natural flrn_dagger_denominator(const EnergyConfig& config, Level j);

/// flrn . shift . flrn-dagger, a chain on levels 0..N-1.
Channel<Level, Level> shift_on_numbers(const EnergyConfig& config);

struct ChainStep {
  std::uint64_t step;
  Rational tv_distance;
};

/// Exact pushforward iteration; entry k is TV(c^k_*(start), reference).
template <class T>
std::vector<ChainStep> iterate_chain(const Dist<T>& start, const Channel<T, T>& c, std::uint64_t steps,
                                     const Dist<T>& reference) {
  std::vector<ChainStep> out;
  out.reserve(steps + 1);
  Dist<T> current = start;
  out.push_back({0, total_variation(current, reference)});
  for (std::uint64_t k = 1; k <= steps; ++k) {
    current = pushforward(c, current);
    out.push_back({k, total_variation(current, reference)});
  }
  return out;
}

/// Dense row-stochastic matrix over space.states(); refuses spaces above
/// `max_states`.
std::vector<std::vector<Rational>> transition_matrix(const ShiftSpace& space, std::size_t max_states = 10'000);

/// Draws from a distribution using double-precision cumulative weights.
template <class T>
T sample(const Dist<T>& omega, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double u = unit(rng);
  const T* last = nullptr;
  for (const auto& [x, w] : omega) {
    last = &x;
    u -= to_double(w);
    if (u < 0.0) return x;
  }
  return *last;
}

/// Monte-Carlo trajectory of the shift chain (demo only; deterministic for a
/// given seed). The first entry is `start`.
std::vector<Multiset> sample_trajectory(const EnergyConfig& config, const Multiset& start, std::uint64_t steps,
                                        std::uint64_t seed);

}  // namespace nomials
