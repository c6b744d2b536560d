#include "nomials/dist.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace nomials;

namespace {

Dist<Level> levels(std::initializer_list<std::pair<Level, Rational>> ws) {
  Dist<Level>::Weights w;
  for (const auto& [x, r] : ws) w[x] = r;
  return Dist<Level>::from_weights(w);
}

Dist<Level> random_level_dist(std::mt19937_64& rng, std::size_t n) {
  Dist<Level>::Weights w;
  for (Level j = 0; j < n; ++j) w[j] = Rational(static_cast<long>(rng() % 5));
  w[rng() % n] += 1;
  return Dist<Level>::normalize(w);
}

}  // namespace

TEST_CASE("constructors enforce exact normalisation") {
  CHECK_THROWS(Dist<Level>::from_weights({{0, Rational(1, 2)}}));
  CHECK_THROWS(Dist<Level>::from_weights({{0, Rational(3, 2)}, {1, Rational(-1, 2)}}));
  CHECK_THROWS(Dist<Level>::normalize({{0, Rational(0)}}));
  auto d = Dist<Level>::from_weights({{0, Rational(1)}, {1, Rational(0)}});
  CHECK(d.size() == 1);
  auto e = Dist<Level>::normalize({{0, Rational(1)}, {1, Rational(3)}});
  CHECK(e(1) == Rational(3, 4));
  CHECK(e(7) == 0);
  CHECK(uniform(std::vector<Level>{2, 4, 2}) == levels({{2, Rational(1, 2)}, {4, Rational(1, 2)}}));
  CHECK_THROWS(uniform(std::vector<Level>{}));
}

TEST_CASE("image equals pushforward of point channels") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto omega = random_level_dist(rng, 1 + rng() % 6);
    auto f = [](Level x) { return x % 3; };
    const Channel<Level, Level> c{"f", [&](const Level& x) { return point(f(x)); }};
    CHECK(image(omega, f) == pushforward(c, omega));
  }
}

TEST_CASE("composition is associative and pushforward respects it") {
  std::mt19937_64 rng(5);
  const Channel<Level, Level> a{"a", [](const Level& x) {
                                  return Dist<Level>::normalize({{x, Rational(1)}, {x + 1, Rational(2)}});
                                }};
  const Channel<Level, Level> b{"b", [](const Level& x) {
                                  return Dist<Level>::normalize({{x / 2, Rational(1)}, {x * 2, Rational(1)}});
                                }};
  for (int t = 0; t < 20; ++t) {
    const auto omega = random_level_dist(rng, 5);
    CHECK(pushforward(compose(b, a), omega) == pushforward(b, pushforward(a, omega)));
    CHECK(pushforward(compose(a, compose(b, a)), omega) == pushforward(compose(compose(a, b), a), omega));
  }
}

TEST_CASE("flrn") {
  auto g = GroundSet::levels(4);
  const auto d = flrn(Multiset(g, {3, 0, 0, 1}));
  CHECK(d == levels({{0, Rational(3, 4)}, {3, Rational(1, 4)}}));
  CHECK_THROWS(flrn(Multiset(g)));
  CHECK(flrn_channel()(Multiset(g, {0, 2, 0, 0})) == point(Level{1}));
}

TEST_CASE("multiset coefficient distribution against sequences") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto g = GroundSet::levels(n);
    for (Count k = 0; k <= 4; ++k) {
      std::map<oracle::Counts, Rational> want;
      std::uint64_t total = 0;
      oracle::each_sequence(n, k, [&](const auto&) { ++total; });
      oracle::each_sequence(n, k, [&](const auto& v) { want[oracle::tally(n, v)] += oracle::frac(1, total); });
      const auto d = multiset_coefficient_distribution(g, k);
      CHECK(oracle::by_counts(d) == want);
      if (k >= 1) CHECK(pushforward(flrn_channel(), d) == flrn(Multiset::ones(g)));
    }
  }
}

TEST_CASE("mean and variance are exact") {
  const auto d = levels({{0, Rational(1, 4)}, {2, Rational(3, 4)}});
  CHECK(mean(d) == Rational(3, 2));
  CHECK(variance(d) == Rational(3, 4));
  CHECK(variance(point(Level{5})) == 0);
}

TEST_CASE("entropy, KL and total variation") {
  const std::vector<double> u{0.25, 0.25, 0.25, 0.25};
  const std::vector<double> p{0.5, 0.5, 0.0, 0.0};
  CHECK(entropy(std::span<const double>(u)) == doctest::Approx(std::log(4.0)));
  CHECK(entropy(std::span<const double>(p)) == doctest::Approx(std::log(2.0)));
  CHECK(kl_divergence(std::span<const double>(p), std::span<const double>(u)) == doctest::Approx(std::log(2.0)));
  CHECK_THROWS_AS(kl_divergence(std::span<const double>(u), std::span<const double>(p)), std::domain_error);
  CHECK(total_variation(std::span<const double>(p), std::span<const double>(u)) == doctest::Approx(0.5));

  const auto a = levels({{0, Rational(1, 2)}, {1, Rational(1, 2)}});
  const auto b = levels({{1, Rational(1, 4)}, {2, Rational(3, 4)}});
  CHECK(total_variation(a, b) == Rational(3, 4));
  CHECK(total_variation(a, a) == 0);
  CHECK(kl_divergence(a, a) == 0.0);
  CHECK_THROWS(kl_divergence(a, b));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const auto x = random_level_dist(rng, 4);
    const auto y = Dist<Level>::normalize({{0, Rational(1)}, {1, Rational(2)}, {2, Rational(1)}, {3, Rational(1)}});
    CHECK(kl_divergence(x, y) >= -1e-15);
  }
}

TEST_CASE("ket text forms round trip") {
  const auto d = levels({{0, Rational(1, 2)}, {1, Rational(3, 10)}, {2, Rational(3, 20)}, {3, Rational(1, 20)}});
  CHECK(to_kets(d) == "1/2|0> + 3/10|1> + 3/20|2> + 1/20|3>");
  CHECK(parse_level_dist(to_kets(d)) == d);
  CHECK_THROWS(parse_level_dist("1/2|0> + 1/3|1>"));

  auto g = GroundSet::levels(4);
  const auto m = multiset_coefficient_distribution(g, 3);
  CHECK(parse_multiset_dist(to_kets(m), g) == m);
  CHECK(to_kets(point(Multiset(g, {3, 0, 0, 1}))) == "1|3|0> + 1|3>>");

  auto ab = GroundSet::named({"a", "b"});
  CHECK(to_kets(levels({{0, Rational(1, 3)}, {1, Rational(2, 3)}}), *ab) == "1/3|a> + 2/3|b>");
  CHECK(format_element(std::vector<Level>{0, 2, 1}) == "(0, 2, 1)");
}
