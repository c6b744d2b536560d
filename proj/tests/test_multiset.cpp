#include "nomials/multiset.hpp"
#include "nomials/numbers.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace nomials;

TEST_CASE("numbers: binomials, multichoose and rationals") {
  CHECK(binom(6, 2) == 15);
  CHECK(binom(0, 0) == 1);
  CHECK_THROWS_AS(binom(3, 4), std::invalid_argument);
  CHECK(multichoose(3, 2) == 6);
  CHECK(multichoose(1, 7) == 1);
  CHECK_THROWS(multichoose(0, 1));
  CHECK(factorial(10) == 3628800);
  CHECK(power(3, 4) == 81);
  for (std::uint64_t n = 0; n <= 30; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) CHECK(binom(n, k) == Natural(oracle::choose(n, k)));
  }
  CHECK(make_rational(4, 6) == Rational(2, 3));
  CHECK(to_string(make_rational(4, 6)) == "2/3");
  CHECK(to_string(make_rational(6, 3)) == "2");
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("ground sets") {
  auto g = GroundSet::levels(3);
  CHECK(g->size() == 3);
  CHECK(g->numeric());
  CHECK(g->label(2) == "2");
  auto h = GroundSet::named({"a", "b"});
  CHECK_FALSE(h->numeric());
  CHECK(h->index_of("b") == 1);
  CHECK_THROWS(h->index_of("c"));
  CHECK_THROWS(GroundSet::levels(0));
  CHECK_THROWS(GroundSet::named({"a", "a"}));
  CHECK_THROWS(GroundSet::named({}));
}

TEST_CASE("multiset arithmetic and statistics") {
  auto g = GroundSet::levels(4);
  Multiset phi(g, {3, 0, 0, 1});
  CHECK(phi.size() == 4);
  CHECK(som(phi) == 3);
  CHECK(coefficient(phi) == 4);
  CHECK(to_ket(phi) == "3|0> + 1|3>");
  CHECK(phi.support() == std::vector<Level>{0, 3});
  CHECK(reverse(phi) == Multiset(g, {1, 0, 0, 3}));
  CHECK(phi.plus(1).minus(0) == Multiset(g, {2, 1, 0, 1}));
  CHECK_THROWS(phi.minus(1));
  CHECK(leq(Multiset(g, {1, 0, 0, 1}), phi));
  CHECK_FALSE(leq(Multiset(g, {0, 1, 0, 0}), phi));
  CHECK(Multiset(g).empty());
  CHECK(to_ket(Multiset(g)) == "0");
  CHECK(coefficient(Multiset(g)) == 1);
  const std::vector<Level> seq{0, 3, 0, 0};
  CHECK(accumulate(g, seq) == phi);
  CHECK_THROWS(Multiset(g, {1, 2}));
}

TEST_CASE("symbolic grounds are rejected by som") {
  auto g = GroundSet::named({"a", "b"});
  Multiset phi(g, {1, 2});
  CHECK(to_ket(phi) == "1|a> + 2|b>");
  CHECK_THROWS(som(phi));
  CHECK(accumulate(g, std::vector<std::string>{"b", "a", "b"}) == phi);
}

TEST_CASE("ket parsing") {
  auto phi = parse_multiset("3|0> + 1|3>");
  CHECK(phi.ground()->size() == 4);
  CHECK(phi == Multiset(GroundSet::levels(4), {3, 0, 0, 1}));
  auto psi = parse_multiset("1|a>+5|b>+3|c>");
  CHECK(psi.ground()->labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(psi.size() == 9);
  CHECK(parse_multiset("2|1> + 1|1>") == Multiset(GroundSet::levels(2), {0, 3}));
  CHECK(parse_multiset("0", 3) == Multiset(GroundSet::levels(3)));
  CHECK_THROWS(parse_multiset("3|0"));
  CHECK_THROWS(parse_multiset("x|0>"));
  CHECK_THROWS(parse_multiset("1|5>", GroundSet::levels(3)));
}

TEST_CASE("ket round trip on random multisets") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 6;
    auto g = GroundSet::levels(n);
    std::vector<Count> c(n);
    for (auto& x : c) x = rng() % 4;
    Multiset phi(g, c);
    CHECK(parse_multiset(to_ket(phi), g) == phi);
  }
}

TEST_CASE("canonical order puts the last level most significant") {
  auto all = enumerate_multisets(GroundSet::levels(3), 2);
  std::vector<std::string> kets;
  for (const auto& phi : all) kets.push_back(to_ket(phi));
  CHECK(kets == std::vector<std::string>{"2|0>", "1|0> + 1|1>", "2|1>", "1|0> + 1|2>", "1|1> + 1|2>", "2|2>"});
}

TEST_CASE("enumeration counts and coefficients against sequence counting") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto g = GroundSet::levels(n);
    for (Count k = 0; k <= 6; ++k) {
      auto all = enumerate_multisets(g, k);
      CHECK(all.size() == oracle::multiset_number(n, k));
      CHECK(std::is_sorted(all.begin(), all.end()));
      std::map<oracle::Counts, std::uint64_t> hits;
      oracle::each_sequence(n, k, [&](const auto& v) { ++hits[oracle::tally(n, v)]; });
      for (const auto& phi : all) CHECK(coefficient(phi) == Natural(hits.at(oracle::counts_of(phi))));
    }
  }
}

TEST_CASE("fixed-sum enumeration matches filtering") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (Count k = 0; k <= 5; ++k) {
      for (Count i = 0; i <= (n - 1) * k; ++i) {
        std::vector<Multiset> filtered;
        for (const auto& phi : enumerate_multisets(GroundSet::levels(n), k)) {
          if (som(phi) == i) filtered.push_back(phi);
        }
        CHECK(enumerate_multisets_with_sum(n, k, i) == filtered);
      }
      CHECK_THROWS_AS(enumerate_multisets_with_sum(n, k, (n - 1) * k + 1), std::out_of_range);
    }
  }
}

TEST_CASE("bounded enumeration matches filtering") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 4;
    auto g = GroundSet::levels(n);
    std::vector<Count> c(n);
    for (auto& x : c) x = rng() % 4;
    Multiset cap(g, c);
    for (Count k = 0; k <= cap.size() + 1; ++k) {
      std::vector<Multiset> filtered;
      for (const auto& phi : enumerate_multisets(g, k)) {
        if (leq(phi, cap)) filtered.push_back(phi);
      }
      CHECK(enumerate_bounded_multisets(cap, k) == filtered);
    }
  }
}
