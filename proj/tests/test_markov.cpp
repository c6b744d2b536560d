#include "nomials/boltzmann.hpp"
#include "nomials/markov.hpp"
#include "nomials/nomial.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace nomials;

TEST_CASE("hand-computed shift step") {
  const auto c = EnergyConfig::make(3, 6, 8);
  auto g = GroundSet::levels(3);
  const Multiset phi(g, {1, 2, 3});
  const auto d = shift(c, phi);
  CHECK(d.size() == 3);
  CHECK(d(phi) == Rational(55, 72));
  CHECK(d(Multiset(g, {2, 0, 4})) == Rational(1, 9));
  CHECK(d(Multiset(g, {0, 4, 2})) == Rational(1, 8));
}

TEST_CASE("shift agrees with a particle-level simulation") {
  for (std::uint64_t n = 1; n <= 4; ++n) {
    for (std::uint64_t k = 1; k <= 5; ++k) {
      for (std::uint64_t i = 0; i <= (n - 1) * k; ++i) {
        const auto c = EnergyConfig::make(n, k, i);
        const ShiftSpace space(c);
        for (const auto& phi : space.states()) {
          CHECK(oracle::by_counts(shift(c, phi)) == oracle::shift_step(n, oracle::counts_of(phi)));
        }
      }
    }
  }
}

TEST_CASE("stationarity on both chains") {
  for (std::uint64_t n = 1; n <= 4; ++n) {
    for (std::uint64_t k = 1; k <= 5; ++k) {
      for (std::uint64_t i = 0; i <= (n - 1) * k; ++i) {
        const auto c = EnergyConfig::make(n, k, i);
        CHECK(stationarity_residual(boltzmann_on_multisets(c), shift_channel(c)) == 0);
        CHECK(stationarity_residual(boltzmann_on_numbers(c), shift_on_numbers(c)) == 0);
      }
    }
  }
}

TEST_CASE("flrn-dagger is the Bayesian inversion") {
  const auto c = EnergyConfig::make(4, 3, 4);
  const auto prior = boltzmann_on_multisets(c);
  const auto marginal = pushforward(flrn_channel(), prior);
  for (const auto& [j, pj] : marginal) {
    const auto post = flrn_dagger(c, j);
    for (const auto& [phi, w] : post) CHECK(w == prior(phi) * flrn(phi)(j) / pj);
    CHECK(flrn_dagger_denominator(c, j) == Natural(c.particles) * nomial_count(4, 2, static_cast<std::int64_t>(4 - j)));
  }
  CHECK_THROWS(flrn_dagger(EnergyConfig::make(4, 2, 0), 2));
  CHECK_THROWS(flrn_dagger_denominator(c, 4));
}

TEST_CASE("state space, matrix and iteration") {
  const auto c = EnergyConfig::make(3, 3, 3);
  const ShiftSpace space(c);
  CHECK(space.states().size() == 2);
  CHECK(space.index_of(space.states()[1]) == 1);
  CHECK_THROWS(space.index_of(Multiset(GroundSet::levels(3), {3, 0, 0})));
  const auto m = transition_matrix(space);
  for (const auto& row : m) {
    Rational s = 0;
    for (const auto& x : row) s += x;
    CHECK(s == 1);
  }
  CHECK_THROWS(transition_matrix(space, 1));
  const auto steps = iterate_chain(point(space.states()[0]), shift_channel(c), 5, boltzmann_on_multisets(c));
  CHECK(steps.size() == 6);
  for (std::size_t k = 1; k < steps.size(); ++k) CHECK(steps[k].tv_distance <= steps[k - 1].tv_distance);
  CHECK_THROWS(shift(c, Multiset(GroundSet::levels(3), {3, 0, 0})));
  CHECK_THROWS(shift(c, Multiset(GroundSet::levels(4), {1, 1, 0, 1})));
}

TEST_CASE("sampled trajectories stay in the space and are reproducible") {
  const auto c = EnergyConfig::make(5, 4, 7);
  const ShiftSpace space(c);
  const auto a = sample_trajectory(c, space.states().front(), 200, 42);
  const auto b = sample_trajectory(c, space.states().front(), 200, 42);
  CHECK(a == b);
  CHECK(a.size() == 201);
  for (const auto& phi : a) CHECK(space.contains(phi));
}
