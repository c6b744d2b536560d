#include "nomials/boltzmann.hpp"

#include "nomials/nomial.hpp"

#include <stdexcept>
#include <string>

namespace nomials {

EnergyConfig EnergyConfig::make(std::uint64_t levels, std::uint64_t particles, std::uint64_t total) {
  if (levels == 0) throw std::invalid_argument("Boltzmann distributions need N >= 1 levels");
  if (particles == 0) throw std::invalid_argument("Boltzmann distributions need K >= 1 particles");
  EnergyConfig c{levels, particles, total};
  if (total > c.max_total()) {
    throw std::out_of_range("total energy i=" + std::to_string(total) + " outside 0..(N-1)K=" +
                            std::to_string(c.max_total()));
  }
  return c;
}

EnergyConfig EnergyConfig::energy(std::uint64_t total_energy, std::uint64_t particles) {
  if (total_energy < 1) throw std::invalid_argument("Boltzmann-on-energy needs E >= 1");
  if (particles < 2) throw std::invalid_argument("Boltzmann-on-energy needs K >= 2 particles");
  return make(total_energy + 1, particles, total_energy);
}

Dist<Multiset> boltzmann_on_multisets(const EnergyConfig& c) {
  const Natural total = nomial(NomialParams::make(c.levels, c.particles, c.total));
  Dist<Multiset>::Weights w;
  for_each_multiset_with_sum(c.levels, c.particles, c.total, [&](const Multiset& phi) {
    w.emplace(phi, make_rational(coefficient(phi), total));
  });
  return Dist<Multiset>::from_weights(std::move(w));
}

Dist<Level> boltzmann_on_numbers(const EnergyConfig& c) {
  const Natural total = nomial(NomialParams::make(c.levels, c.particles, c.total));
  Dist<Level>::Weights w;
  const std::uint64_t top = std::min(c.levels, c.total + 1);
  for (Level j = 0; j < top; ++j) {
    const Natural count =
        nomial_count(c.levels, c.particles - 1, static_cast<std::int64_t>(c.total) - static_cast<std::int64_t>(j));
    if (count != 0) w.emplace(j, make_rational(count, total));
  }
  return Dist<Level>::from_weights(std::move(w));
}

Dist<Level> boltzmann_on_numbers_via_flrn(const EnergyConfig& c) {
  return pushforward(flrn_channel(), boltzmann_on_multisets(c));
}

Dist<Level> boltzmann_on_energy(std::uint64_t total_energy, std::uint64_t particles) {
  const auto c = EnergyConfig::energy(total_energy, particles);
  const Natural total = multichoose(c.particles, c.total);
  Dist<Level>::Weights w;
  for (Level j = 0; j <= total_energy; ++j) {
    w.emplace(j, make_rational(multichoose(particles - 1, total_energy - j), total));
  }
  return Dist<Level>::from_weights(std::move(w));
}

Dist<Sequence> microstate_uniform(const EnergyConfig& c, std::uint64_t budget) {
  if (power(c.levels, c.particles) > Natural(budget)) {
    throw BudgetExceeded("microstate enumeration over " + std::to_string(c.levels) + "^" +
                         std::to_string(c.particles) + " sequences exceeds budget");
  }
  // Only sequences with the right sum are produced: each prefix is pruned
  // when the remaining entries cannot reach (or would overshoot) the total.
  std::vector<Sequence> hits;
  Sequence seq(c.particles, 0);
  auto fill = [&](auto&& self, std::size_t pos, std::uint64_t left) -> void {
    if (pos == seq.size()) {
      if (left == 0) hits.push_back(seq);
      return;
    }
    const std::uint64_t rest = seq.size() - pos - 1;
    for (Level j = 0; j < c.levels && j <= left; ++j) {
      if (left - j > (c.levels - 1) * rest) continue;
      seq[pos] = j;
      self(self, pos + 1, left - j);
    }
  };
  fill(fill, 0, c.total);
  return uniform(hits);
}

Dist<Level> projection_marginal(const Dist<Sequence>& microstates, std::size_t n) {
  return image(microstates, [n](const Sequence& v) { return v.at(n); });
}

Dist<Multiset> accumulation_image(const Dist<Sequence>& microstates, std::size_t levels) {
  const auto ground = GroundSet::levels(levels);
  return image(microstates, [&](const Sequence& v) { return accumulate(ground, v); });
}

std::vector<Rational> scaled_unnormalized_exact(std::uint64_t total_energy, std::uint64_t particles) {
  const auto dist = boltzmann_on_energy(total_energy, particles);
  std::vector<Rational> out;
  out.reserve(dist.size());
  const Rational k{Natural(particles)};
  for (const auto& [j, w] : dist) out.push_back(k * w);
  return out;
}

std::vector<double> scaled_unnormalized(std::uint64_t total_energy, std::uint64_t particles) {
  std::vector<double> out;
  for (const auto& r : scaled_unnormalized_exact(total_energy, particles)) out.push_back(to_double(r));
  return out;
}

Dist<Multiset> reverse_image(const Dist<Multiset>& omega) {
  return image(omega, [](const Multiset& phi) { return reverse(phi); });
}

Dist<Level> reverse_image(const Dist<Level>& omega, std::size_t levels) {
  return image(omega, [levels](Level j) {
    if (j >= levels) throw std::out_of_range("level outside 0..N-1");
    return levels - 1 - j;
  });
}

}  // namespace nomials
