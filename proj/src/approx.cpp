#include "nomials/approx.hpp"

#include "nomials/boltzmann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nomials {

double RealDist::mean() const {
  double out = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) out += weights[j] * static_cast<double>(j);
  return out;
}

double RealDist::entropy() const { return nomials::entropy(std::span<const double>(weights)); }

RealDist to_real(const Dist<Level>& omega, std::size_t len) { return RealDist{dense_weights(omega, len)}; }

namespace {

RealDist normalized(std::vector<double> masses) {
  double total = 0.0;
  for (double m : masses) total += m;
  for (double& m : masses) m /= total;
  return RealDist{std::move(masses)};
}

}  // namespace

Dist<Level> ratio_approx(std::uint64_t total_energy, const Rational& mu) {
  if (total_energy < 1) throw std::invalid_argument("ratio approximation needs E >= 1");
  if (sgn(mu) <= 0) throw std::invalid_argument("ratio approximation needs mu > 0");
  const Rational ratio = mu / (mu + 1);
  Dist<Level>::Weights masses;
  Rational term = 1;
  for (Level j = 0; j <= total_energy; ++j) {
    masses.emplace(j, term);
    term *= ratio;
  }
  return Dist<Level>::normalize(std::move(masses));
}

RealDist discrete_exponential(std::uint64_t total_energy, double mu) {
  if (!(mu > 0.0)) throw std::invalid_argument("discrete exponential needs mu > 0");
  std::vector<double> masses(total_energy + 1);
  for (std::size_t j = 0; j < masses.size(); ++j) masses[j] = std::exp(-static_cast<double>(j) / mu);
  return normalized(std::move(masses));
}

double max_entropy_polynomial(std::uint64_t total_energy, double mu, double x) {
  double acc = 0.0;
  for (std::uint64_t j = total_energy + 1; j-- > 0;) acc = acc * x + (static_cast<double>(j) - mu);
  return acc;
}

namespace {

double max_entropy_derivative(std::uint64_t total_energy, double mu, double x) {
  double acc = 0.0;
  for (std::uint64_t j = total_energy + 1; j-- > 1;) {
    acc = acc * x + static_cast<double>(j) * (static_cast<double>(j) - mu);
  }
  return acc;
}

RealDist geometric_weights(std::uint64_t total_energy, double s) {
  // Scale by the largest term so that s > 1 does not overflow.
  const double log_s = std::log(s);
  const double top = log_s > 0.0 ? log_s * static_cast<double>(total_energy) : 0.0;
  std::vector<double> masses(total_energy + 1);
  for (std::size_t j = 0; j < masses.size(); ++j) masses[j] = std::exp(log_s * static_cast<double>(j) - top);
  return normalized(std::move(masses));
}

}  // namespace

MaxEntropyResult max_entropy_dist(std::uint64_t total_energy, const Rational& mu_exact) {
  const Rational e{Natural(total_energy)};
  if (sgn(mu_exact) < 0 || mu_exact > e) throw std::invalid_argument("max-entropy needs 0 <= mu <= E");
  if (total_energy == 0 || sgn(mu_exact) == 0) {
    std::vector<double> w(total_energy + 1, 0.0);
    w[0] = 1.0;
    return {RealDist{std::move(w)}, 0.0, 0.0};
  }
  if (mu_exact == e) {
    std::vector<double> w(total_energy + 1, 0.0);
    w[total_energy] = 1.0;
    return {RealDist{std::move(w)}, std::numeric_limits<double>::infinity(), 0.0};
  }

  const double mu = to_double(mu_exact);
  auto poly = [&](double x) { return max_entropy_polynomial(total_energy, mu, x); };

  // P(0) = -mu < 0 and P(x) > 0 for large x: grow a bracket around mu/(mu+1).
  const double start = mu / (mu + 1.0);
  double lo = start;
  double hi = start;
  if (poly(start) < 0.0) {
    do {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi)) throw std::runtime_error("max-entropy: no sign change found");
    } while (poly(hi) < 0.0);
  } else {
    do {
      hi = lo;
      lo /= 2.0;
      if (lo == 0.0) throw std::runtime_error("max-entropy: no sign change found");
    } while (poly(lo) >= 0.0);
  }

  // Safeguarded Newton: take the Newton step when it stays inside the
  // bracket, otherwise bisect.
  double x = 0.5 * (lo + hi);
  double fx = poly(x);
  for (int iter = 0; iter < 1000; ++iter) {
    if (std::abs(fx) < 1e-12) break;
    if (fx < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    if (std::nextafter(lo, hi) >= hi) break;
    const double slope = max_entropy_derivative(total_energy, mu, x);
    double next = slope != 0.0 ? x - fx / slope : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
    fx = poly(x);
  }
  return {geometric_weights(total_energy, x), x, std::abs(fx)};
}

double continuous_exponential_pdf(double mu, double x) {
  if (!(mu > 0.0)) throw std::invalid_argument("exponential pdf needs mu > 0");
  if (x < 0.0) return 0.0;
  return std::exp(-x / mu) / mu;
}

const CandidateReport& ApproxReport::candidate(const std::string& name) const {
  for (const auto& c : candidates) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no candidate named '" + name + "'");
}

ApproxReport compare(std::uint64_t total_energy, std::uint64_t particles) {
  auto reference = boltzmann_on_energy(total_energy, particles);
  const Rational mu = make_rational(Natural(total_energy), Natural(particles));
  const std::size_t len = total_energy + 1;
  const RealDist ref_real = to_real(reference, len);

  auto me = max_entropy_dist(total_energy, mu);
  std::vector<std::pair<std::string, RealDist>> dists = {
      {"ratio", to_real(ratio_approx(total_energy, mu), len)},
      {"discrete-exponential", discrete_exponential(total_energy, to_double(mu))},
      {"max-entropy", me.dist},
  };

  ApproxReport report{total_energy, particles, mu, reference, ref_real.entropy(), {}, me.root, {}};
  for (auto& [name, dist] : dists) {
    CandidateReport c{name,
                      dist,
                      dist.mean(),
                      dist.entropy(),
                      kl_divergence(std::span<const double>(ref_real.weights), std::span<const double>(dist.weights)),
                      total_variation(std::span<const double>(ref_real.weights), std::span<const double>(dist.weights))};
    report.candidates.push_back(std::move(c));
  }
  std::vector<const CandidateReport*> order;
  for (const auto& c : report.candidates) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(), [](const CandidateReport* a, const CandidateReport* b) {
    return a->kl_from_reference < b->kl_from_reference;
  });
  for (const auto* c : order) report.ranking.push_back(c->name);
  return report;
}

}  // namespace nomials
