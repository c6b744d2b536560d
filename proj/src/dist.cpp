#include "nomials/dist.hpp"

#include "ket_lexer.hpp"

#include <algorithm>
#include <cctype>

namespace nomials {

Dist<Level> flrn(const Multiset& phi) {
  if (phi.empty()) throw std::invalid_argument("flrn of the empty multiset");
  Dist<Level>::Weights w;
  const Natural total(phi.size());
  const auto counts = phi.counts();
  for (Level x = 0; x < counts.size(); ++x) {
    if (counts[x] != 0) w.emplace(x, make_rational(Natural(counts[x]), total));
  }
  return Dist<Level>::from_weights(std::move(w));
}

Channel<Multiset, Level> flrn_channel() {
  return Channel<Multiset, Level>{"flrn", [](const Multiset& phi) { return flrn(phi); }};
}

Dist<Multiset> multiset_coefficient_distribution(const GroundPtr& ground, Count k) {
  Dist<Multiset>::Weights w;
  const Natural denominator = power(ground->size(), k);
  for_each_multiset(ground, k, [&](const Multiset& phi) {
    w.emplace(phi, make_rational(coefficient(phi), denominator));
  });
  return Dist<Multiset>::from_weights(std::move(w));
}

double entropy(std::span<const double> weights) {
  double out = 0.0;
  for (double w : weights) {
    if (w > 0.0) out -= w * std::log(w);
  }
  return out;
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw std::invalid_argument("KL divergence: length mismatch");
  double out = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0.0) continue;
    if (q[k] <= 0.0) throw std::domain_error("KL divergence: support not contained in reference support");
    out += p[k] * std::log(p[k] / q[k]);
  }
  return out;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw std::invalid_argument("total variation: length mismatch");
  double out = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) out += std::abs(p[k] - q[k]);
  return out / 2.0;
}

std::vector<double> dense_weights(const Dist<Level>& omega, std::size_t len) {
  std::vector<double> out(len, 0.0);
  for (const auto& [x, w] : omega) {
    if (x >= len) throw std::out_of_range("dense_weights: element beyond requested length");
    out[x] = to_double(w);
  }
  return out;
}

std::string format_element(Level x) { return std::to_string(x); }

std::string format_element(const Multiset& phi) { return to_ket(phi); }

std::string format_element(const std::vector<Level>& seq) {
  std::string out = "(";
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k != 0) out += ", ";
    out += std::to_string(seq[k]);
  }
  return out + ")";
}

std::string format_element(const std::vector<Multiset>& tuple) {
  std::string out = "(";
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (k != 0) out += ", ";
    out += to_ket(tuple[k]);
  }
  return out + ")";
}

std::string to_kets(const Dist<Level>& omega, const GroundSet& ground) {
  std::string out;
  for (const auto& [x, w] : omega) {
    if (!out.empty()) out += " + ";
    out += to_string(w) + "|" + ground.label(x) + ">";
  }
  return out;
}

Dist<Level> parse_level_dist(const std::string& text) {
  Dist<Level>::Weights w;
  for (const auto& term : detail::split_ket_terms(text)) {
    w[static_cast<Level>(detail::parse_count(term.inner))] += parse_rational(term.weight);
  }
  return Dist<Level>::from_weights(std::move(w));
}

Dist<Multiset> parse_multiset_dist(const std::string& text, const GroundPtr& ground) {
  Dist<Multiset>::Weights w;
  for (const auto& term : detail::split_ket_terms(text)) {
    w[parse_multiset(term.inner, ground)] += parse_rational(term.weight);
  }
  return Dist<Multiset>::from_weights(std::move(w));
}

}  // namespace nomials
