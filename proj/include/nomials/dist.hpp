#pragma once

// Finite discrete distributions with exact rational weights, channels
// (element -> distribution kernels), image/pushforward, and summary
// statistics.

#include "nomials/multiset.hpp"
#include "nomials/numbers.hpp"

#include <cmath>
#include <concepts>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nomials {

template <class T>
class Dist {
 public:
  using element_type = T;
  using Weights = std::map<T, Rational>;

  /// Weights must be positive (zeros are dropped) and sum to exactly 1.
  static Dist from_weights(Weights weights) {
    Rational total = 0;
    for (auto it = weights.begin(); it != weights.end();) {
      if (sgn(it->second) < 0) throw std::invalid_argument("distribution weight is negative");
      if (sgn(it->second) == 0) {
        it = weights.erase(it);
        continue;
      }
      total += it->second;
      ++it;
    }
    if (total != 1) throw std::invalid_argument("distribution weights sum to " + to_string(total) + ", not 1");
    return Dist(std::move(weights));
  }

  /// Divides nonnegative masses by their (positive) total.
  static Dist normalize(Weights masses) {
    Rational total = 0;
    for (const auto& [x, w] : masses) {
      if (sgn(w) < 0) throw std::invalid_argument("negative mass in normalisation");
      total += w;
    }
    if (sgn(total) == 0) throw std::invalid_argument("cannot normalise zero total mass");
    Weights out;
    for (auto& [x, w] : masses) {
      if (sgn(w) != 0) out.emplace(x, w / total);
    }
    return Dist(std::move(out));
  }

  const Weights& weights() const { return weights_; }
  Rational operator()(const T& x) const {
    auto it = weights_.find(x);
    return it == weights_.end() ? Rational(0) : it->second;
  }
  std::size_t size() const { return weights_.size(); }
  auto begin() const { return weights_.begin(); }
  auto end() const { return weights_.end(); }
  std::vector<T> support() const {
    std::vector<T> out;
    out.reserve(weights_.size());
    for (const auto& [x, w] : weights_) out.push_back(x);
    return out;
  }

  friend bool operator==(const Dist& a, const Dist& b) { return a.weights_ == b.weights_; }

 private:
  explicit Dist(Weights weights) : weights_(std::move(weights)) {}
  Weights weights_;
};

template <class X, class Y>
struct Channel {
  std::string description;
  std::function<Dist<Y>(const X&)> kernel;

  Dist<Y> operator()(const X& x) const { return kernel(x); }
};

template <class T>
Dist<T> point(const T& x) {
  return Dist<T>::from_weights({{x, Rational(1)}});
}

/// Equal weights on the distinct elements of `set`.
template <class T>
Dist<T> uniform(const std::vector<T>& set) {
  if (set.empty()) throw std::invalid_argument("uniform distribution over an empty set");
  typename Dist<T>::Weights masses;
  for (const auto& x : set) masses[x] = 1;
  return Dist<T>::normalize(std::move(masses));
}

template <class T, class F>
auto image(const Dist<T>& omega, F&& f) {
  using Y = std::decay_t<std::invoke_result_t<F&, const T&>>;
  typename Dist<Y>::Weights out;
  for (const auto& [x, w] : omega) out[f(x)] += w;
  return Dist<Y>::from_weights(std::move(out));
}

template <class X, class Y>
Dist<Y> pushforward(const Channel<X, Y>& c, const Dist<X>& omega) {
  typename Dist<Y>::Weights out;
  for (const auto& [x, w] : omega) {
    for (const auto& [y, v] : c(x)) out[y] += w * v;
  }
  return Dist<Y>::from_weights(std::move(out));
}

/// (d after c)(x) = d_*(c(x)).
template <class X, class Y, class Z>
Channel<X, Z> compose(Channel<Y, Z> d, Channel<X, Y> c) {
  std::string description = d.description + " . " + c.description;
  return Channel<X, Z>{std::move(description),
                       [d = std::move(d), c = std::move(c)](const X& x) { return pushforward(d, c(x)); }};
}

/// Frequentist learning: phi(x)/||phi|| on the support; requires ||phi|| >= 1.
Dist<Level> flrn(const Multiset& phi);
Channel<Multiset, Level> flrn_channel();

/// coefficient(phi) / |X|^K over M[K](X).
Dist<Multiset> multiset_coefficient_distribution(const GroundPtr& ground, Count k);

template <class T>
concept Numeric = std::integral<T>;

template <Numeric T>
Rational mean(const Dist<T>& omega) {
  Rational out = 0;
  for (const auto& [x, w] : omega) out += w * Rational(Natural(static_cast<long>(x)));
  return out;
}

template <Numeric T>
Rational variance(const Dist<T>& omega) {
  Rational second = 0;
  for (const auto& [x, w] : omega) {
    const Rational v{Natural(static_cast<long>(x))};
    second += w * v * v;
  }
  const Rational m = mean(omega);
  return second - m * m;
}

/// Natural-log entropy of a dense weight vector; 0 ln 0 = 0.
double entropy(std::span<const double> weights);
/// KL(p || q) in nats; throws std::domain_error if p > 0 where q == 0.
double kl_divergence(std::span<const double> p, std::span<const double> q);
double total_variation(std::span<const double> p, std::span<const double> q);

template <class T>
double entropy(const Dist<T>& omega) {
  std::vector<double> w;
  w.reserve(omega.size());
  for (const auto& [x, r] : omega) w.push_back(to_double(r));
  return entropy(std::span<const double>(w));
}

/// KL(omega || rho); requires support(omega) within support(rho).
template <class T>
double kl_divergence(const Dist<T>& omega, const Dist<T>& rho) {
  double out = 0.0;
  for (const auto& [x, w] : omega) {
    const Rational r = rho(x);
    if (sgn(r) == 0) throw std::domain_error("KL divergence: support not contained in reference support");
    // The ratio is taken exactly so that KL(w, w) is exactly 0.
    const Rational ratio = w / r;
    out += to_double(w) * std::log(to_double(ratio));
  }
  return out;
}

/// Exact 1/2 sum |omega - rho|.
template <class T>
Rational total_variation(const Dist<T>& omega, const Dist<T>& rho) {
  Rational out = 0;
  for (const auto& [x, w] : omega) out += abs(w - rho(x));
  for (const auto& [y, v] : rho) {
    if (sgn(omega(y)) == 0) out += v;
  }
  return out / 2;
}

/// Dense weight vector over 0..len-1 for level distributions.
std::vector<double> dense_weights(const Dist<Level>& omega, std::size_t len);

// Text forms -----------------------------------------------------------------

std::string format_element(Level x);
std::string format_element(const Multiset& phi);
/// "(0, 2, 1)"
std::string format_element(const std::vector<Level>& seq);
/// "(3|0> + 1|1>, 2|0>)"
std::string format_element(const std::vector<Multiset>& tuple);

/// "1/2|0> + 3/10|1>"; multiset elements nest: "1/5|3|0> + 1|3>>".
template <class T>
std::string to_kets(const Dist<T>& omega) {
  std::string out;
  for (const auto& [x, w] : omega) {
    if (!out.empty()) out += " + ";
    out += to_string(w) + "|" + format_element(x) + ">";
  }
  return out;
}

/// Level distribution with labels from a (possibly symbolic) ground set.
std::string to_kets(const Dist<Level>& omega, const GroundSet& ground);

Dist<Level> parse_level_dist(const std::string& text);
Dist<Multiset> parse_multiset_dist(const std::string& text, const GroundPtr& ground);

}  // namespace nomials
