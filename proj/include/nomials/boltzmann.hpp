#pragma once

// The three discrete Boltzmann families:
//   on multisets  B_M[N,K](i): configurations phi in M[K,i](N), weight (phi)/C_N(K,i)
//   on numbers    B_n[N,K](i): energy level of a randomly chosen particle
//   on energy     B_E[E](K)  : B_n[E+1,K](E), in multichoose form

#include "nomials/dist.hpp"
#include "nomials/multiset.hpp"
#include "nomials/numbers.hpp"

#include <cstdint>
#include <vector>

namespace nomials {

/// N levels, K particles, total energy i.
struct EnergyConfig {
  std::uint64_t levels;
  std::uint64_t particles;
  std::uint64_t total;

  /// Requires N >= 1, K >= 1, 0 <= i <= (N-1)K.
  static EnergyConfig make(std::uint64_t levels, std::uint64_t particles, std::uint64_t total);
  /// The energy family: N = E+1, i = E, with E >= 1 and K >= 2.
  static EnergyConfig energy(std::uint64_t total_energy, std::uint64_t particles);

  std::uint64_t max_total() const { return (levels - 1) * particles; }
};

Dist<Multiset> boltzmann_on_multisets(const EnergyConfig& c);

/// Nomial-ratio route: weight(j) = C_N(K-1, i-j) / C_N(K, i).
Dist<Level> boltzmann_on_numbers(const EnergyConfig& c);
/// flrn-pushforward of boltzmann_on_multisets (enumerates M[K,i](N)).
Dist<Level> boltzmann_on_numbers_via_flrn(const EnergyConfig& c);

/// weight(j) = multichoose(K-1, E-j) / multichoose(K, E) on 0..E.
/// Requires E >= 1 and K >= 2.
Dist<Level> boltzmann_on_energy(std::uint64_t total_energy, std::uint64_t particles);

/// Uniform distribution over the sequences in [N]^K with sum i.
/// Throws BudgetExceeded when N^K > budget.
Dist<Sequence> microstate_uniform(const EnergyConfig& c, std::uint64_t budget = kDefaultBudget);
/// Image of a sequence distribution under the n-th projection.
Dist<Level> projection_marginal(const Dist<Sequence>& microstates, std::size_t n);
/// Image of a sequence distribution under accumulation onto levels 0..N-1.
Dist<Multiset> accumulation_image(const Dist<Sequence>& microstates, std::size_t levels);

/// K * B_E[E](K), exactly and as doubles. Sums to K.
std::vector<Rational> scaled_unnormalized_exact(std::uint64_t total_energy, std::uint64_t particles);
std::vector<double> scaled_unnormalized(std::uint64_t total_energy, std::uint64_t particles);

/// Images under level reversal j -> N-1-j.
Dist<Multiset> reverse_image(const Dist<Multiset>& omega);
Dist<Level> reverse_image(const Dist<Level>& omega, std::size_t levels);

}  // namespace nomials
