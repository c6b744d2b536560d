#include "nomials/markov.hpp"

#include "nomials/nomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nomials {

ShiftSpace::ShiftSpace(const EnergyConfig& config)
    : config_(config), states_(enumerate_multisets_with_sum(config.levels, config.particles, config.total)) {}

bool ShiftSpace::contains(const Multiset& phi) const {
  return std::binary_search(states_.begin(), states_.end(), phi);
}

std::size_t ShiftSpace::index_of(const Multiset& phi) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), phi);
  if (it == states_.end() || !(*it == phi)) throw std::invalid_argument("multiset not in the state space");
  return static_cast<std::size_t>(it - states_.begin());
}

namespace {

void require_state(const EnergyConfig& config, const Multiset& phi) {
  const auto& g = *phi.ground();
  if (!g.numeric() || g.size() != config.levels || phi.size() != config.particles || som(phi) != config.total) {
    throw std::invalid_argument("shift: " + to_ket(phi) + " is not in M[" + std::to_string(config.particles) + "," +
                                std::to_string(config.total) + "](" + std::to_string(config.levels) + ")");
  }
}

}  // namespace

Dist<Multiset> shift(const EnergyConfig& config, const Multiset& phi) {
  require_state(config, phi);
  const std::size_t n = config.levels;
  const Natural size(phi.size());
  Dist<Multiset>::Weights w;
  if (phi(0) != 0) w[phi] += make_rational(Natural(phi(0)), size);
  for (Level d = 1; d < n; ++d) {
    if (phi(d) == 0) continue;
    const Multiset down = phi.minus(d).plus(d - 1);
    // Particles that can still move up: everything not at the top level.
    const Natural movable(down.size() - down(n - 1));
    const Rational pick_down = make_rational(Natural(phi(d)), size);
    for (Level u = 0; u + 1 < n; ++u) {
      if (down(u) == 0) continue;
      w[down.minus(u).plus(u + 1)] += pick_down * make_rational(Natural(down(u)), movable);
    }
  }
  return Dist<Multiset>::from_weights(std::move(w));
}

Channel<Multiset, Multiset> shift_channel(const EnergyConfig& config) {
  return Channel<Multiset, Multiset>{"shift", [config](const Multiset& phi) { return shift(config, phi); }};
}

Natural flrn_dagger_denominator(const EnergyConfig& config, Level j) {
  if (j >= config.levels) throw std::out_of_range("level outside 0..N-1");
  Natural total = 0;
  for_each_multiset_with_sum(config.levels, config.particles, config.total,
                             [&](const Multiset& psi) { total += coefficient(psi) * psi(j); });
  return total;
}

Dist<Multiset> flrn_dagger(const EnergyConfig& config, Level j) {
  const Natural denominator = flrn_dagger_denominator(config, j);
  if (denominator == 0) {
    throw std::invalid_argument("flrn-dagger: level " + std::to_string(j) + " is unattainable");
  }
  Dist<Multiset>::Weights w;
  for_each_multiset_with_sum(config.levels, config.particles, config.total, [&](const Multiset& phi) {
    if (phi(j) != 0) w.emplace(phi, make_rational(coefficient(phi) * phi(j), denominator));
  });
  return Dist<Multiset>::from_weights(std::move(w));
}

Channel<Level, Multiset> flrn_dagger_channel(const EnergyConfig& config) {
  return Channel<Level, Multiset>{"flrn-dagger", [config](Level j) { return flrn_dagger(config, j); }};
}

Channel<Level, Level> shift_on_numbers(const EnergyConfig& config) {
  return compose(flrn_channel(), compose(shift_channel(config), flrn_dagger_channel(config)));
}

std::vector<std::vector<Rational>> transition_matrix(const ShiftSpace& space, std::size_t max_states) {
  const auto& states = space.states();
  if (states.size() > max_states) {
    throw std::invalid_argument("state space has " + std::to_string(states.size()) + " states, limit is " +
                                std::to_string(max_states));
  }
  std::vector<std::vector<Rational>> out(states.size(), std::vector<Rational>(states.size(), Rational(0)));
  for (std::size_t r = 0; r < states.size(); ++r) {
    for (const auto& [target, w] : shift(space.config(), states[r])) out[r][space.index_of(target)] = w;
  }
  return out;
}

std::vector<Multiset> sample_trajectory(const EnergyConfig& config, const Multiset& start, std::uint64_t steps,
                                        std::uint64_t seed) {
  require_state(config, start);
  std::mt19937_64 rng(seed);
  std::vector<Multiset> out{start};
  out.reserve(steps + 1);
  for (std::uint64_t k = 0; k < steps; ++k) out.push_back(sample(shift(config, out.back()), rng));
  return out;
}

}  // namespace nomials
