#include "nomials/nomial.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace nomials;

namespace {

std::vector<Natural> naturals(std::initializer_list<long> xs) {
  std::vector<Natural> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("trinomial and quadrinomial rows") {
  const NomialTable three(3, 4);
  CHECK(three.row(0) == naturals({1}));
  CHECK(three.row(1) == naturals({1, 1, 1}));
  CHECK(three.row(2) == naturals({1, 2, 3, 2, 1}));
  CHECK(three.row(3) == naturals({1, 3, 6, 7, 6, 3, 1}));
  CHECK(three.row(4) == naturals({1, 4, 10, 16, 19, 16, 10, 4, 1}));
  const NomialTable four(4, 5);
  CHECK(four.row(2) == naturals({1, 2, 3, 4, 3, 2, 1}));
  CHECK(four.row(3) == naturals({1, 3, 6, 10, 12, 12, 10, 6, 3, 1}));
  CHECK(four.row(4) == naturals({1, 4, 10, 20, 31, 40, 44, 40, 31, 20, 10, 4, 1}));
  CHECK(four.row(5) == naturals({1, 5, 15, 35, 65, 101, 135, 155, 155, 135, 101, 65, 35, 15, 5, 1}));
  CHECK(three.at(4, 99) == 0);
}

TEST_CASE("worked values") {
  CHECK(nomial(NomialParams::make(4, 4, 3)) == 20);
  CHECK(nomial(NomialParams::make(9, 6, 8)) == 1287);
  CHECK(nomial(NomialParams::make(2, 7, 3)) == binom(7, 3));
}

TEST_CASE("every route agrees with sequence counting") {
  for (std::uint64_t n = 1; n <= 5; ++n) {
    for (std::uint64_t k = 0; k <= 5; ++k) {
      for (std::uint64_t i = 0; i <= (n - 1) * k; ++i) {
        const NomialParams p{n, k, i};
        const Natural want(oracle::count_sequences(n, k, i));
        CHECK(nomial_enum_sequences(p) == want);
        CHECK(nomial_via_multisets(p) == want);
        CHECK(nomial_recursive(p) == want);
        CHECK(nomial(p) == want);
        if (i < n && k >= 1) CHECK(nomial_closed_form(p) == Natural(oracle::multiset_number(k, i)));
      }
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(NomialParams::make(0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(NomialParams::make(3, 2, 5), std::out_of_range);
  CHECK_THROWS(nomial_closed_form(NomialParams{3, 2, 3}));
  CHECK(nomial_count(3, 2, -1) == 0);
  CHECK(nomial_count(3, 2, 5) == 0);
  CHECK(nomial_count(3, 2, 2) == 3);
  CHECK_THROWS_AS(nomial_enum_sequences(NomialParams{10, 8, 3}, 1000), BudgetExceeded);
}

TEST_CASE("large arguments stay exact") {
  // C_2(K, i) = binom(K, i); C_N(1, i) = 1; the K = 1 row has N ones.
  CHECK(nomial(NomialParams::make(2, 200, 100)) == binom(200, 100));
  CHECK(nomial(NomialParams::make(50, 1, 49)) == 1);
  Natural total = 0;
  const NomialTable table(7, 30);
  for (const auto& x : table.row(30)) total += x;
  CHECK(total == power(7, 30));
}

TEST_CASE("prefix sums") {
  CHECK(nomial_prefix_sum(4, 4, 4) == 1 + 4 + 10 + 20);
  for (std::uint64_t n = 1; n <= 6; ++n) {
    for (std::uint64_t k = 1; k <= 6; ++k) {
      for (std::uint64_t m = 0; m <= n; ++m) {
        std::uint64_t s = 0;
        for (std::uint64_t i = 0; i < m; ++i) s += oracle::count_sequences(n, k, i);
        CHECK(nomial_prefix_sum(n, k, m) == Natural(s));
      }
    }
  }
  CHECK_THROWS(nomial_prefix_sum(3, 0, 1));
  CHECK_THROWS(nomial_prefix_sum(3, 2, 4));
}

TEST_CASE("polynomial expansion, Vandermonde and row identities") {
  for (std::uint64_t n = 1; n <= 5; ++n) {
    const NomialTable t(n, 8);
    for (std::uint64_t k = 0; k <= 8; ++k) {
      CHECK(polynomial_expand(n, k) == t.row(k));
      const auto& row = t.row(k);
      CHECK(std::equal(row.begin(), row.end(), row.rbegin()));
    }
    for (std::uint64_t k1 = 0; k1 <= 4; ++k1) {
      for (std::uint64_t k2 = 0; k2 <= 4; ++k2) {
        for (std::uint64_t i = 0; i <= (n - 1) * (k1 + k2); ++i) CHECK(vandermonde_check(n, k1, k2, i));
      }
    }
  }
}

TEST_CASE("multichoose summation identities") {
  for (std::uint64_t n = 1; n <= 8; ++n) {
    for (std::uint64_t m = 1; m <= 12; ++m) {
      const auto r = check_choose_sums(n, m);
      CHECK(r.plain);
      CHECK(r.weighted);
      CHECK(r.squared);
    }
  }
  CHECK_THROWS(check_choose_sums(0, 3));
}
