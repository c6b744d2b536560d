#pragma once

// Brute-force reference computations used only by the tests. Everything
// here works on plain sequences and count vectors and avoids the library's
// enumeration and formula code.

#include "nomials/multiset.hpp"
#include "nomials/numbers.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using nomials::Rational;
using Counts = std::vector<std::uint64_t>;

inline Rational frac(std::uint64_t a, std::uint64_t b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

/// Calls f on every sequence in [n]^k.
inline void each_sequence(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> v(k, 0);
  while (true) {
    f(v);
    std::size_t pos = 0;
    while (pos < k && ++v[pos] == n) v[pos++] = 0;
    if (pos == k) return;
  }
}

inline std::uint64_t sum_of(const std::vector<std::size_t>& v) {
  std::uint64_t s = 0;
  for (auto x : v) s += x;
  return s;
}

inline Counts tally(std::size_t n, const std::vector<std::size_t>& v) {
  Counts c(n, 0);
  for (auto x : v) ++c[x];
  return c;
}

/// Number of sequences in [n]^k summing to i.
inline std::uint64_t count_sequences(std::size_t n, std::size_t k, std::uint64_t i) {
  std::uint64_t hits = 0;
  each_sequence(n, k, [&](const std::vector<std::size_t>& v) { hits += sum_of(v) == i; });
  return hits;
}

/// Pascal's triangle in 64-bit integers; fine for n <= 60.
inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::vector<std::uint64_t> row{1};
  for (std::uint64_t r = 1; r <= n; ++r) {
    std::vector<std::uint64_t> next(r + 1, 1);
    for (std::uint64_t j = 1; j < r; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

/// Size-k multisets over an m-element set, counted by stars and bars.
inline std::uint64_t multiset_number(std::uint64_t m, std::uint64_t k) {
  if (m == 0) return k == 0 ? 1 : 0;
  return choose(m + k - 1, k);
}

/// Uniform microstates with sum i, grouped by their tally.
inline std::map<Counts, Rational> boltzmann_multisets(std::size_t n, std::size_t k, std::uint64_t i) {
  std::map<Counts, std::uint64_t> hits;
  std::uint64_t total = 0;
  each_sequence(n, k, [&](const std::vector<std::size_t>& v) {
    if (sum_of(v) != i) return;
    ++hits[tally(n, v)];
    ++total;
  });
  std::map<Counts, Rational> out;
  for (const auto& [c, h] : hits) out[c] = frac(h, total);
  return out;
}

/// Uniform microstates with sum i, first coordinate.
inline std::map<std::size_t, Rational> boltzmann_numbers(std::size_t n, std::size_t k, std::uint64_t i) {
  std::map<std::size_t, std::uint64_t> hits;
  std::uint64_t total = 0;
  each_sequence(n, k, [&](const std::vector<std::size_t>& v) {
    if (sum_of(v) != i) return;
    ++hits[v[0]];
    ++total;
  });
  std::map<std::size_t, Rational> out;
  for (const auto& [j, h] : hits) out[j] = frac(h, total);
  return out;
}

/// One shift step simulated on an explicit particle list: a uniformly chosen
/// particle drops one level (or stays at 0 and nothing else happens), then a
/// uniformly chosen particle below the top level rises one level.
inline std::map<Counts, Rational> shift_step(std::size_t n, const Counts& phi) {
  std::vector<std::size_t> particles;
  for (std::size_t x = 0; x < phi.size(); ++x) particles.insert(particles.end(), phi[x], x);
  const std::size_t k = particles.size();
  std::map<Counts, Rational> out;
  for (std::size_t a = 0; a < k; ++a) {
    const Rational pick = frac(1, k);
    if (particles[a] == 0) {
      out[phi] += pick;
      continue;
    }
    auto down = particles;
    --down[a];
    std::vector<std::size_t> movable;
    for (std::size_t b = 0; b < k; ++b) {
      if (down[b] + 1 < n) movable.push_back(b);
    }
    for (std::size_t b : movable) {
      auto up = down;
      ++up[b];
      out[tally(n, up)] += pick * frac(1, movable.size());
    }
  }
  return out;
}

/// Draws without replacement from an urn of distinguishable balls.
inline std::map<Counts, Rational> hypergeometric(const Counts& urn, std::size_t draws) {
  std::vector<std::size_t> balls;
  for (std::size_t x = 0; x < urn.size(); ++x) balls.insert(balls.end(), urn[x], x);
  std::map<Counts, std::uint64_t> hits;
  std::uint64_t total = 0;
  // Subsets of the balls as bitmasks.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << balls.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != draws) continue;
    Counts c(urn.size(), 0);
    for (std::size_t b = 0; b < balls.size(); ++b) {
      if (mask >> b & 1) ++c[balls[b]];
    }
    ++hits[c];
    ++total;
  }
  std::map<Counts, Rational> out;
  for (const auto& [c, h] : hits) out[c] = frac(h, total);
  return out;
}

/// Sequential Polya urn: each drawn ball is returned with an extra copy.
inline std::map<Counts, Rational> polya(const Counts& urn, std::size_t draws) {
  std::map<Counts, Rational> out;
  std::function<void(Counts&, Counts&, std::size_t, const Rational&)> go = [&](Counts& current, Counts& drawn,
                                                                                std::size_t left, const Rational& p) {
    if (left == 0) {
      out[drawn] += p;
      return;
    }
    std::uint64_t size = 0;
    for (auto c : current) size += c;
    for (std::size_t x = 0; x < current.size(); ++x) {
      if (current[x] == 0) continue;
      const Rational q = p * frac(current[x], size);
      ++current[x];
      ++drawn[x];
      go(current, drawn, left - 1, q);
      --current[x];
      --drawn[x];
    }
  };
  Counts current = urn;
  Counts drawn(urn.size(), 0);
  go(current, drawn, draws, Rational(1));
  return out;
}

/// Every ball of the urn gets a level in [n]; keep assignments with total i
/// and record, per colour, the sum of levels.
inline std::map<Counts, Rational> nomial_distribution(std::size_t n, const Counts& urn, std::uint64_t i) {
  std::vector<std::size_t> colour;
  for (std::size_t x = 0; x < urn.size(); ++x) colour.insert(colour.end(), urn[x], x);
  std::map<Counts, std::uint64_t> hits;
  std::uint64_t total = 0;
  each_sequence(n, colour.size(), [&](const std::vector<std::size_t>& v) {
    if (sum_of(v) != i) return;
    Counts c(urn.size(), 0);
    for (std::size_t b = 0; b < v.size(); ++b) c[colour[b]] += v[b];
    ++hits[c];
    ++total;
  });
  std::map<Counts, Rational> out;
  for (const auto& [c, h] : hits) out[c] = frac(h, total);
  return out;
}

/// Microstates for several kinds of particles: sizes[x] particles of kind x,
/// each on a level in [n], total level sum i; grouped by per-kind tallies.
inline std::map<std::vector<Counts>, Rational> boltzmann_multi(std::size_t n, const Counts& sizes, std::uint64_t i) {
  std::size_t k = 0;
  for (auto s : sizes) k += s;
  std::map<std::vector<Counts>, std::uint64_t> hits;
  std::uint64_t total = 0;
  each_sequence(n, k, [&](const std::vector<std::size_t>& v) {
    if (sum_of(v) != i) return;
    std::vector<Counts> key;
    std::size_t pos = 0;
    for (auto s : sizes) {
      Counts c(n, 0);
      for (std::size_t t = 0; t < s; ++t) ++c[v[pos++]];
      key.push_back(std::move(c));
    }
    ++hits[key];
    ++total;
  });
  std::map<std::vector<Counts>, Rational> out;
  for (const auto& [c, h] : hits) out[c] = frac(h, total);
  return out;
}

inline Counts counts_of(const nomials::Multiset& phi) { return Counts(phi.counts().begin(), phi.counts().end()); }

/// Re-keys a multiset distribution by count vectors for comparison with the oracles above.
template <class D>
std::map<Counts, Rational> by_counts(const D& dist) {
  std::map<Counts, Rational> out;
  for (const auto& [phi, w] : dist) out[counts_of(phi)] = w;
  return out;
}

template <class D>
std::map<std::size_t, Rational> by_level(const D& dist) {
  std::map<std::size_t, Rational> out;
  for (const auto& [j, w] : dist) out[j] = w;
  return out;
}

}  // namespace oracle
