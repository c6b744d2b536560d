#include "nomials/multivariate.hpp"

#include "nomials/nomial.hpp"

#include <stdexcept>
#include <string>

namespace nomials {

namespace {

void require_all_positive(const Multiset& psi, const char* what) {
  for (Count c : psi.counts()) {
    if (c == 0) throw std::invalid_argument(std::string(what) + " requires psi(x) >= 1 for every ground label");
  }
}

}  // namespace

Natural mult_binom(const Multiset& psi, const Multiset& phi) {
  if (!leq(phi, psi)) throw std::invalid_argument("mult_binom requires phi <= psi");
  Natural out = 1;
  for (Level x = 0; x < psi.counts().size(); ++x) out *= binom(psi(x), phi(x));
  return out;
}

Natural mult_multichoose(const Multiset& psi, const Multiset& phi) {
  if (!same_ground(psi.ground(), phi.ground())) throw std::invalid_argument("mult_multichoose: grounds differ");
  require_all_positive(psi, "mult_multichoose");
  Natural out = 1;
  for (Level x = 0; x < psi.counts().size(); ++x) out *= multichoose(psi(x), phi(x));
  return out;
}

Dist<Multiset> hypergeometric(Count draws, const Multiset& urn) {
  if (draws > urn.size()) throw std::invalid_argument("hypergeometric needs K <= ||psi||");
  const Natural total = binom(urn.size(), draws);
  Dist<Multiset>::Weights w;
  for_each_bounded_multiset(urn, draws, [&](const Multiset& phi) {
    w.emplace(phi, make_rational(mult_binom(urn, phi), total));
  });
  return Dist<Multiset>::from_weights(std::move(w));
}

Dist<Multiset> polya(Count draws, const Multiset& urn) {
  require_all_positive(urn, "polya");
  const Natural total = multichoose(urn.size(), draws);
  Dist<Multiset>::Weights w;
  for_each_multiset(urn.ground(), draws, [&](const Multiset& phi) {
    w.emplace(phi, make_rational(mult_multichoose(urn, phi), total));
  });
  return Dist<Multiset>::from_weights(std::move(w));
}

Natural nomial_coeff_multisets(std::uint64_t levels, const Multiset& psi, const Multiset& phi) {
  if (levels == 0) throw std::invalid_argument("N-nomials need N >= 1");
  if (!leq(phi, psi.scaled(levels - 1))) throw std::invalid_argument("C_N(psi, phi) requires phi <= (N-1) psi");
  Natural out = 1;
  for (Level x = 0; x < psi.counts().size(); ++x) out *= nomial(NomialParams{levels, psi(x), phi(x)});
  return out;
}

Dist<Multiset> nomial_distribution(std::uint64_t levels, Count total, const Multiset& urn) {
  const auto norm = NomialParams::make(levels, urn.size(), total);
  const Natural denominator = nomial(norm);
  Dist<Multiset>::Weights w;
  for_each_bounded_multiset(urn.scaled(levels - 1), total, [&](const Multiset& phi) {
    w.emplace(phi, make_rational(nomial_coeff_multisets(levels, urn, phi), denominator));
  });
  return Dist<Multiset>::from_weights(std::move(w));
}

Dist<Multiset> nomial_distribution(Count total, const Multiset& urn) {
  return nomial_distribution(urn.ground()->size(), total, urn);
}

Dist<MultisetTuple> boltzmann_multi(std::uint64_t levels, const Multiset& sizes, Count total) {
  const auto norm = NomialParams::make(levels, sizes.size(), total);
  const Natural denominator = nomial(norm);
  const std::size_t kinds = sizes.counts().size();

  // Per component: configurations grouped by their som.
  std::vector<std::vector<std::vector<Multiset>>> by_sum(kinds);
  std::vector<Count> max_sum(kinds);
  for (std::size_t x = 0; x < kinds; ++x) {
    max_sum[x] = (levels - 1) * sizes(x);
    by_sum[x].resize(max_sum[x] + 1);
    for (Count t = 0; t <= max_sum[x]; ++t) by_sum[x][t] = enumerate_multisets_with_sum(levels, sizes(x), t);
  }
  std::vector<Count> tail_max(kinds + 1, 0);
  for (std::size_t x = kinds; x-- > 0;) tail_max[x] = tail_max[x + 1] + max_sum[x];

  Dist<MultisetTuple>::Weights w;
  MultisetTuple tuple;
  tuple.reserve(kinds);
  auto fill = [&](auto&& self, std::size_t x, Count left, const Natural& weight) -> void {
    if (x == kinds) {
      if (left == 0) w.emplace(tuple, make_rational(weight, denominator));
      return;
    }
    for (Count t = 0; t <= std::min(left, max_sum[x]); ++t) {
      if (left - t > tail_max[x + 1]) continue;
      for (const auto& phi : by_sum[x][t]) {
        tuple.push_back(phi);
        self(self, x + 1, left - t, weight * coefficient(phi));
        tuple.pop_back();
      }
    }
  };
  fill(fill, 0, total, Natural(1));
  return Dist<MultisetTuple>::from_weights(std::move(w));
}

Dist<LevelTuple> boltzmann_multi_numbers(std::uint64_t levels, const Multiset& sizes, Count total) {
  require_all_positive(sizes, "boltzmann_multi_numbers");
  const Channel<MultisetTuple, LevelTuple> product_flrn{
      "flrn x ... x flrn", [](const MultisetTuple& tuple) {
        Dist<LevelTuple>::Weights acc{{LevelTuple{}, Rational(1)}};
        for (const auto& phi : tuple) {
          Dist<LevelTuple>::Weights next;
          const auto component = flrn(phi);
          for (const auto& [prefix, w] : acc) {
            for (const auto& [j, v] : component) {
              LevelTuple extended = prefix;
              extended.push_back(j);
              next.emplace(std::move(extended), w * v);
            }
          }
          acc = std::move(next);
        }
        return Dist<LevelTuple>::from_weights(std::move(acc));
      }};
  return pushforward(product_flrn, boltzmann_multi(levels, sizes, total));
}

}  // namespace nomials
