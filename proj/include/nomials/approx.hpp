#pragma once

// Approximations of Boltzmann-on-energy B_E[E](K) with mean mu = E/K:
//   ratio               normalise (mu/(mu+1))^j on 0..E       (exact)
//   discrete exponential normalise e^{-j/mu} on 0..E
//   maximum entropy     normalise s^j, s > 0 the root of sum_j x^j (j - mu)
//   continuous          pdf x -> e^{-x/mu} / mu on [0, inf)

#include "nomials/dist.hpp"
#include "nomials/numbers.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nomials {

/// Float weights over levels 0..E.
struct RealDist {
  std::vector<double> weights;

  double mean() const;
  double entropy() const;
};

RealDist to_real(const Dist<Level>& omega, std::size_t len);

/// Requires E >= 1 and mu > 0.
Dist<Level> ratio_approx(std::uint64_t total_energy, const Rational& mu);

/// Requires mu > 0. Weights sum to 1 within 1e-12.
RealDist discrete_exponential(std::uint64_t total_energy, double mu);

struct MaxEntropyResult {
  RealDist dist;
  /// The positive root; 0 when mu = 0 and +inf when mu = E.
  double root;
  /// |sum_j s^j (j - mu)| at the returned root.
  double residual;
};

/// sum_{0<=j<=E} x^j (j - mu).
double max_entropy_polynomial(std::uint64_t total_energy, double mu, double x);

/// Requires 0 <= mu <= E. Boundary values give exact point masses at 0 or E.
/// Throws std::runtime_error if the polynomial fails to change sign.
MaxEntropyResult max_entropy_dist(std::uint64_t total_energy, const Rational& mu);

/// x -> e^{-x/mu} / mu; requires mu > 0 and x >= 0.
double continuous_exponential_pdf(double mu, double x);

struct CandidateReport {
  std::string name;
  RealDist dist;
  double mean;
  double entropy;
  /// KL(reference || candidate) in nats.
  double kl_from_reference;
  double total_variation;
};

struct ApproxReport {
  std::uint64_t total_energy;
  std::uint64_t particles;
  Rational mu;
  Dist<Level> reference;
  double reference_entropy;
  /// "ratio", "discrete-exponential", "max-entropy", in that order.
  std::vector<CandidateReport> candidates;
  double max_entropy_root;
  /// Candidate names sorted by increasing KL(reference || candidate).
  std::vector<std::string> ranking;

  const CandidateReport& candidate(const std::string& name) const;
};

/// Reference B_E[E](K) with mu = E/K against the three discrete candidates.
ApproxReport compare(std::uint64_t total_energy, std::uint64_t particles);

}  // namespace nomials
