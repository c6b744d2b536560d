#include "nomials/verify.hpp"

#include "nomials/approx.hpp"
#include "nomials/boltzmann.hpp"
#include "nomials/dist.hpp"
#include "nomials/markov.hpp"
#include "nomials/multiset.hpp"
#include "nomials/multivariate.hpp"
#include "nomials/nomial.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <random>

namespace nomials {

namespace {

// Collects the first failure of a check and counts examined cases.
class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  template <class Detail>
  void require(bool ok, Detail&& detail) {
    ++cases_;
    if (!ok && failure_.empty()) failure_ = detail();
  }

  void fail(std::string why) {
    if (failure_.empty()) failure_ = std::move(why);
  }

  CheckResult result() const {
    if (!failure_.empty()) return {name_, false, failure_};
    return {name_, true, std::to_string(cases_) + " cases"};
  }

 private:
  std::string name_;
  std::string failure_;
  std::uint64_t cases_ = 0;
};

std::string nki(std::uint64_t n, std::uint64_t k, std::uint64_t i) {
  return "N=" + std::to_string(n) + " K=" + std::to_string(k) + " i=" + std::to_string(i);
}

// Every urn over grounds 0..g-1, g = 1..4, with 1 <= ||psi|| <= max_urn.
std::vector<Multiset> urn_sweep(std::uint64_t max_urn) {
  std::vector<Multiset> out;
  for (std::size_t g = 1; g <= 4; ++g) {
    const auto ground = GroundSet::levels(g);
    for (Count l = 1; l <= max_urn; ++l) for_each_multiset(ground, l, [&](const Multiset& psi) { out.push_back(psi); });
  }
  return out;
}

bool all_positive(const Multiset& psi) {
  return std::all_of(psi.counts().begin(), psi.counts().end(), [](Count c) { return c > 0; });
}

class Runner {
 public:
  explicit Runner(const CheckObserver& observe) : observe_(observe) {}

  template <class Body>
  void run(const std::string& name, Body&& body) {
    Check c(name);
    try {
      body(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    results_.push_back(c.result());
    if (observe_) observe_(results_.back());
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const CheckObserver& observe_;
  std::vector<CheckResult> results_;
};

void multiset_checks(Runner& r, const VerifyOptions& o) {
  r.run("multiset.count", [&](Check& c) {
    for (std::size_t g = 1; g <= o.max_levels; ++g) {
      for (Count k = 0; k <= o.max_size; ++k) {
        const auto n = enumerate_multisets(GroundSet::levels(g), k).size();
        c.require(multichoose(g, k) == Natural(n), [&] { return "|X|=" + std::to_string(g) + " K=" + std::to_string(k); });
      }
    }
  });

  r.run("multiset.coefficient_counts_sequences", [&](Check& c) {
    for (std::size_t g = 1; g <= std::min<std::uint64_t>(o.max_levels, 4); ++g) {
      const auto ground = GroundSet::levels(g);
      for (Count k = 0; k <= std::min<std::uint64_t>(o.max_size, 6); ++k) {
        std::map<Multiset, std::uint64_t> hits;
        Sequence v(k, 0);
        while (true) {
          ++hits[accumulate(ground, v)];
          std::size_t pos = 0;
          while (pos < k && ++v[pos] == g) v[pos++] = 0;
          if (pos == k) break;
        }
        for (const auto& [phi, n] : hits) {
          c.require(coefficient(phi) == Natural(n), [&] { return to_ket(phi); });
        }
        c.require(Natural(hits.size()) == multichoose(g, k), [&] { return "support size at K=" + std::to_string(k); });
      }
    }
  });

  r.run("multiset.coefficient_sum", [&](Check& c) {
    for (std::size_t g = 1; g <= o.max_levels; ++g) {
      for (Count k = 0; k <= o.max_size; ++k) {
        Natural total = 0;
        for_each_multiset(GroundSet::levels(g), k, [&](const Multiset& phi) { total += coefficient(phi); });
        c.require(total == power(g, k), [&] { return "|X|=" + std::to_string(g) + " K=" + std::to_string(k); });
      }
    }
  });

  r.run("multiset.reversal", [&](Check& c) {
    for (std::size_t g = 1; g <= o.max_levels; ++g) {
      for (Count k = 0; k <= o.max_size; ++k) {
        for_each_multiset(GroundSet::levels(g), k, [&](const Multiset& phi) {
          const Multiset rev = reverse(phi);
          c.require(coefficient(rev) == coefficient(phi) && som(rev) == (g - 1) * k - som(phi) && reverse(rev) == phi,
                    [&] { return to_ket(phi); });
        });
      }
    }
  });

  r.run("multiset.choose_sums", [&](Check& c) {
    for (std::uint64_t n = 1; n <= o.max_choose; ++n) {
      for (std::uint64_t m = 1; m <= o.max_choose + 2; ++m) {
        c.require(check_choose_sums(n, m).all(), [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); });
      }
    }
  });
}

void nomial_checks(Runner& r, const VerifyOptions& o) {
  r.run("nomial.routes", [&](Check& c) {
    for (std::uint64_t n = 1; n <= o.max_levels; ++n) {
      NomialTable table(n, o.max_size);
      for (std::uint64_t k = 0; k <= o.max_size; ++k) {
        for (std::uint64_t i = 0; i <= (n - 1) * k; ++i) {
          const NomialParams p{n, k, i};
          const Natural want = nomial_enum_sequences(p);
          bool ok = nomial_via_multisets(p) == want && nomial_recursive(p) == want && table.at(k, i) == want;
          if (i < n && k >= 1) ok = ok && nomial_closed_form(p) == want;
          c.require(ok, [&] { return nki(n, k, i); });
        }
      }
    }
  });

  r.run("nomial.row_sum", [&](Check& c) {
    for (std::uint64_t n = 1; n <= o.max_levels; ++n) {
      NomialTable table(n, o.max_size);
      for (std::uint64_t k = 0; k <= o.max_size; ++k) {
        Natural total = 0;
        for (const auto& x : table.row(k)) total += x;
        c.require(total == power(n, k), [&] { return nki(n, k, 0); });
      }
    }
  });

  r.run("nomial.palindrome", [&](Check& c) {
    for (std::uint64_t n = 1; n <= o.max_levels; ++n) {
      for (std::uint64_t k = 0; k <= o.max_size; ++k) {
        const auto top = static_cast<std::int64_t>((n - 1) * k);
        for (std::int64_t i = 0; i <= top; ++i) {
          c.require(nomial_count(n, k, i) == nomial_count(n, k, top - i), [&] { return nki(n, k, i); });
        }
      }
    }
  });

  r.run("nomial.polynomial_expansion", [&](Check& c) {
    for (std::uint64_t n = 1; n <= o.max_levels; ++n) {
      NomialTable table(n, o.max_size);
      for (std::uint64_t k = 0; k <= o.max_size; ++k) {
        c.require(polynomial_expand(n, k) == table.row(k), [&] { return nki(n, k, 0); });
      }
    }
  });

  r.run("nomial.vandermonde", [&](Check& c) {
    for (std::uint64_t n = 1; n <= o.max_levels; ++n) {
      for (std::uint64_t k1 = 0; k1 <= o.max_size; ++k1) {
        for (std::uint64_t k2 = 0; k1 + k2 <= o.max_size; ++k2) {
          for (std::uint64_t i = 0; i <= (n - 1) * (k1 + k2); ++i) {
            c.require(vandermonde_check(n, k1, k2, i), [&] {
              return nki(n, k1 + k2, i) + " split " + std::to_string(k1) + "+" + std::to_string(k2);
            });
          }
        }
      }
    }
  });

  r.run("nomial.prefix_sum", [&](Check& c) {
    for (std::uint64_t n = 1; n <= o.max_levels; ++n) {
      for (std::uint64_t k = 1; k <= o.max_size; ++k) {
        for (std::uint64_t m = 0; m <= n; ++m) {
          bool ok = true;
          try {
            nomial_prefix_sum(n, k, m);
          } catch (const std::logic_error&) {
            ok = false;
          }
          c.require(ok, [&] { return nki(n, k, m); });
        }
      }
    }
  });
}

void dist_checks(Runner& r, const VerifyOptions& o) {
  r.run("dist.normalization", [&](Check& c) {
    for (std::size_t g = 1; g <= o.max_levels; ++g) {
      const auto ground = GroundSet::levels(g);
      for (Count k = 0; k <= o.max_size; ++k) {
        Rational total = 0;
        for (const auto& [phi, w] : multiset_coefficient_distribution(ground, k)) total += w;
        c.require(total == 1, [&] { return "coefficient distribution |X|=" + std::to_string(g); });
        if (k == 0) continue;
        for_each_multiset(ground, k, [&](const Multiset& phi) {
          Rational s = 0;
          for (const auto& [x, w] : flrn(phi)) s += w;
          c.require(s == 1, [&] { return "flrn " + to_ket(phi); });
        });
      }
    }
  });

  r.run("dist.image_is_pushforward", [&](Check& c) {
    for (std::size_t g = 1; g <= o.max_levels; ++g) {
      const auto ground = GroundSet::levels(g);
      for (Count k = 0; k <= o.max_size; ++k) {
        const auto omega = multiset_coefficient_distribution(ground, k);
        const Channel<Multiset, Count> as_point{"som", [](const Multiset& phi) { return point(som(phi)); }};
        c.require(image(omega, [](const Multiset& phi) { return som(phi); }) == pushforward(as_point, omega),
                  [&] { return "som, |X|=" + std::to_string(g) + " K=" + std::to_string(k); });
        const Channel<Multiset, Multiset> rev{"reverse", [](const Multiset& phi) { return point(reverse(phi)); }};
        c.require(image(omega, [](const Multiset& phi) { return reverse(phi); }) == pushforward(rev, omega),
                  [&] { return "reverse, |X|=" + std::to_string(g) + " K=" + std::to_string(k); });
      }
    }
  });

  r.run("dist.flrn_of_coefficient_distribution", [&](Check& c) {
    for (std::size_t g = 1; g <= 3; ++g) {
      const auto ground = GroundSet::levels(g);
      for (Count k = 1; k <= 4; ++k) {
        const auto pushed = pushforward(flrn_channel(), multiset_coefficient_distribution(ground, k));
        c.require(pushed == flrn(Multiset::ones(ground)), [&] { return "|X|=" + std::to_string(g) + " K=" + std::to_string(k); });
      }
    }
  });
}

template <class F>
void for_each_config(std::uint64_t max_levels, std::uint64_t max_size, F&& f) {
  for (std::uint64_t n = 1; n <= max_levels; ++n) {
    for (std::uint64_t k = 1; k <= max_size; ++k) {
      for (std::uint64_t i = 0; i <= (n - 1) * k; ++i) f(EnergyConfig::make(n, k, i));
    }
  }
}

std::string describe(const EnergyConfig& e) { return nki(e.levels, e.particles, e.total); }

void boltzmann_checks(Runner& r, const VerifyOptions& o) {
  r.run("boltzmann.reversal_multisets", [&](Check& c) {
    for_each_config(o.max_levels, o.max_size, [&](const EnergyConfig& e) {
      const auto mirrored = EnergyConfig::make(e.levels, e.particles, e.max_total() - e.total);
      c.require(reverse_image(boltzmann_on_multisets(e)) == boltzmann_on_multisets(mirrored), [&] { return describe(e); });
    });
  });

  r.run("boltzmann.reversal_numbers", [&](Check& c) {
    for_each_config(o.max_levels, o.max_size, [&](const EnergyConfig& e) {
      const auto mirrored = EnergyConfig::make(e.levels, e.particles, e.max_total() - e.total);
      c.require(reverse_image(boltzmann_on_numbers(e), e.levels) == boltzmann_on_numbers(mirrored),
                [&] { return describe(e); });
    });
  });

  r.run("boltzmann.numbers_routes", [&](Check& c) {
    for_each_config(o.max_levels, o.max_size, [&](const EnergyConfig& e) {
      c.require(boltzmann_on_numbers(e) == boltzmann_on_numbers_via_flrn(e), [&] { return describe(e); });
    });
  });

  r.run("boltzmann.mean", [&](Check& c) {
    for_each_config(o.max_levels, o.max_size, [&](const EnergyConfig& e) {
      c.require(mean(boltzmann_on_numbers(e)) == make_rational(Natural(e.total), Natural(e.particles)),
                [&] { return describe(e); });
    });
  });

  r.run("boltzmann.support_truncation", [&](Check& c) {
    for_each_config(o.max_levels, o.max_size, [&](const EnergyConfig& e) {
      if (e.total >= e.levels) return;
      const auto support = boltzmann_on_numbers(e).support();
      c.require(support.empty() || support.back() <= e.total, [&] { return describe(e); });
    });
  });

  r.run("boltzmann.energy_moments", [&](Check& c) {
    for (std::uint64_t big_e = 1; big_e <= o.max_energy; ++big_e) {
      for (std::uint64_t k = 2; k <= o.max_energy_particles; ++k) {
        const auto d = boltzmann_on_energy(big_e, k);
        const Natural e(big_e);
        const Natural kk(k);
        const Rational want_mean = make_rational(e, kk);
        const Rational want_var = make_rational(e * (e + kk) * (kk - 1), kk * kk * (kk + 1));
        c.require(mean(d) == want_mean && variance(d) == want_var &&
                      d == boltzmann_on_numbers(EnergyConfig::energy(big_e, k)),
                  [&] { return "E=" + std::to_string(big_e) + " K=" + std::to_string(k); });
      }
    }
  });

  r.run("boltzmann.microstate_oracle", [&](Check& c) {
    for_each_config(std::min<std::uint64_t>(o.max_levels, 4), std::min<std::uint64_t>(o.max_size, 5),
                    [&](const EnergyConfig& e) {
                      const auto micro = microstate_uniform(e);
                      c.require(accumulation_image(micro, e.levels) == boltzmann_on_multisets(e),
                                [&] { return "acc image, " + describe(e); });
                      for (std::size_t j = 0; j < e.particles; ++j) {
                        c.require(projection_marginal(micro, j) == boltzmann_on_numbers(e),
                                  [&] { return "projection " + std::to_string(j) + ", " + describe(e); });
                      }
                    });
  });
}

void markov_checks(Runner& r, const VerifyOptions& o) {
  r.run("markov.conservation", [&](Check& c) {
    for_each_config(o.max_levels, o.max_size, [&](const EnergyConfig& e) {
      const ShiftSpace space(e);
      for (const auto& phi : space.states()) {
        const auto out = shift(e, phi);
        Rational total = 0;
        bool inside = true;
        for (const auto& [psi, w] : out) {
          total += w;
          inside = inside && space.contains(psi);
        }
        c.require(inside && total == 1, [&] { return to_ket(phi) + ", " + describe(e); });
      }
    });
  });

  r.run("markov.stationarity_multisets", [&](Check& c) {
    for_each_config(o.max_levels, o.max_size, [&](const EnergyConfig& e) {
      const auto b = boltzmann_on_multisets(e);
      c.require(pushforward(shift_channel(e), b) == b, [&] { return describe(e); });
    });
  });

  r.run("markov.stationarity_numbers", [&](Check& c) {
    for_each_config(o.max_levels, o.max_size, [&](const EnergyConfig& e) {
      const auto b = boltzmann_on_numbers(e);
      c.require(pushforward(shift_on_numbers(e), b) == b, [&] { return describe(e); });
    });
  });
}

void approx_checks(Runner& r, const VerifyOptions& o) {
  auto each_mu = [&](auto&& f) {
    for (std::uint64_t big_e = 1; big_e <= o.max_energy; ++big_e) {
      for (std::uint64_t k = 2; k <= o.max_energy_particles; ++k) f(big_e, k, make_rational(Natural(big_e), Natural(k)));
    }
  };
  auto label = [](std::uint64_t big_e, std::uint64_t k) { return "E=" + std::to_string(big_e) + " K=" + std::to_string(k); };

  r.run("approx.ratio_geometric", [&](Check& c) {
    each_mu([&](std::uint64_t big_e, std::uint64_t k, const Rational& mu) {
      const auto d = ratio_approx(big_e, mu);
      const Rational q = mu / (mu + 1);
      Rational total = 0;
      bool ok = d.size() == big_e + 1;
      for (Level j = 0; j <= big_e; ++j) {
        total += d(j);
        if (j > 0) ok = ok && d(j) == d(j - 1) * q;
      }
      c.require(ok && total == 1, [&] { return label(big_e, k); });
    });
  });

  r.run("approx.root_unique", [&](Check& c) {
    each_mu([&](std::uint64_t big_e, std::uint64_t k, const Rational& mu) {
      if (mu >= Rational(Natural(big_e))) return;
      // Coefficients j - mu change sign exactly once, so Descartes' rule
      // leaves exactly one positive root.
      const double m = to_double(mu);
      int changes = 0;
      for (std::uint64_t j = 1; j <= big_e; ++j) {
        if ((static_cast<double>(j - 1) - m < 0) != (static_cast<double>(j) - m < 0)) ++changes;
      }
      const auto res = max_entropy_dist(big_e, mu);
      const double scale = std::max(1.0, std::pow(res.root, static_cast<double>(big_e)) * static_cast<double>(big_e));
      c.require(changes == 1 && res.root > 0.0 && res.residual <= 1e-9 * scale, [&] { return label(big_e, k); });
    });
  });

  r.run("approx.max_entropy_mean", [&](Check& c) {
    each_mu([&](std::uint64_t big_e, std::uint64_t k, const Rational& mu) {
      if (mu >= Rational(Natural(big_e))) return;
      const auto res = max_entropy_dist(big_e, mu);
      c.require(std::abs(res.dist.mean() - to_double(mu)) <= 1e-9, [&] { return label(big_e, k); });
    });
  });

  r.run("approx.max_entropy_is_maximal", [&](Check& c) {
    std::mt19937_64 rng(o.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::uint64_t big_e : {3, 8, 25}) {
      for (std::uint64_t k : {2, 5}) {
        const Rational mu = make_rational(Natural(big_e), Natural(k));
        const auto best = max_entropy_dist(big_e, mu).dist;
        const double h = best.entropy();
        const std::size_t len = big_e + 1;
        // Orthonormal basis of span{1, j} for projecting perturbations.
        std::vector<double> e0(len, 1.0 / std::sqrt(static_cast<double>(len)));
        std::vector<double> e1(len);
        double avg = 0.5 * static_cast<double>(big_e);
        double norm = 0.0;
        for (std::size_t j = 0; j < len; ++j) {
          e1[j] = static_cast<double>(j) - avg;
          norm += e1[j] * e1[j];
        }
        for (double& x : e1) x /= std::sqrt(norm);
        for (int trial = 0; trial < 100; ++trial) {
          std::vector<double> d(len);
          for (double& x : d) x = gauss(rng);
          double a = 0.0;
          double b = 0.0;
          for (std::size_t j = 0; j < len; ++j) {
            a += d[j] * e0[j];
            b += d[j] * e1[j];
          }
          for (std::size_t j = 0; j < len; ++j) d[j] -= a * e0[j] + b * e1[j];
          // Largest step keeping all weights nonnegative, then a random fraction of it.
          double t_max = std::numeric_limits<double>::infinity();
          for (std::size_t j = 0; j < len; ++j) {
            if (d[j] < 0.0) t_max = std::min(t_max, -best.weights[j] / d[j]);
          }
          const double t = t_max * unit(rng);
          RealDist other{best.weights};
          for (std::size_t j = 0; j < len; ++j) other.weights[j] = std::max(0.0, other.weights[j] + t * d[j]);
          c.require(other.entropy() <= h + 1e-12, [&] { return label(big_e, k) + " trial " + std::to_string(trial); });
        }
      }
    }
  });
}

void multivariate_checks(Runner& r, const VerifyOptions& o) {
  const auto urns = urn_sweep(o.max_urn);

  r.run("multivariate.vandermonde_binom", [&](Check& c) {
    for (const auto& psi : urns) {
      for (Count k = 0; k <= psi.size(); ++k) {
        Natural total = 0;
        for_each_bounded_multiset(psi, k, [&](const Multiset& phi) { total += mult_binom(psi, phi); });
        c.require(total == binom(psi.size(), k), [&] { return to_ket(psi) + " K=" + std::to_string(k); });
      }
    }
  });

  r.run("multivariate.vandermonde_multichoose", [&](Check& c) {
    for (const auto& psi : urns) {
      if (!all_positive(psi)) continue;
      for (Count k = 0; k <= psi.size(); ++k) {
        Natural total = 0;
        for_each_multiset(psi.ground(), k, [&](const Multiset& phi) { total += mult_multichoose(psi, phi); });
        c.require(total == multichoose(psi.size(), k), [&] { return to_ket(psi) + " K=" + std::to_string(k); });
      }
    }
  });

  r.run("multivariate.vandermonde_nomial", [&](Check& c) {
    for (const auto& psi : urns) {
      for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(o.max_levels, 5); ++n) {
        const Multiset cap = psi.scaled(n - 1);
        for (Count i = 0; i <= cap.size(); ++i) {
          Natural total = 0;
          for_each_bounded_multiset(cap, i, [&](const Multiset& phi) { total += nomial_coeff_multisets(n, psi, phi); });
          c.require(total == nomial(NomialParams{n, psi.size(), i}),
                    [&] { return to_ket(psi) + " N=" + std::to_string(n) + " i=" + std::to_string(i); });
        }
      }
    }
  });

  r.run("multivariate.flrn_hypergeometric", [&](Check& c) {
    for (const auto& psi : urns) {
      for (Count k = 1; k <= psi.size(); ++k) {
        c.require(pushforward(flrn_channel(), hypergeometric(k, psi)) == flrn(psi),
                  [&] { return to_ket(psi) + " K=" + std::to_string(k); });
      }
    }
  });

  r.run("multivariate.flrn_polya", [&](Check& c) {
    for (const auto& psi : urns) {
      if (!all_positive(psi)) continue;
      for (Count k = 1; k <= psi.size(); ++k) {
        c.require(pushforward(flrn_channel(), polya(k, psi)) == flrn(psi),
                  [&] { return to_ket(psi) + " K=" + std::to_string(k); });
      }
    }
  });

  r.run("multivariate.flrn_nomial", [&](Check& c) {
    for (const auto& psi : urns) {
      const std::uint64_t n = psi.ground()->size();
      for (Count i = 1; i <= (n - 1) * psi.size(); ++i) {
        c.require(pushforward(flrn_channel(), nomial_distribution(i, psi)) == flrn(psi),
                  [&] { return to_ket(psi) + " i=" + std::to_string(i); });
      }
    }
  });

  r.run("multivariate.binary_is_hypergeometric", [&](Check& c) {
    for (const auto& psi : urns) {
      if (psi.ground()->size() != 2) continue;
      for (Count i = 0; i <= psi.size(); ++i) {
        c.require(nomial_distribution(i, psi) == hypergeometric(i, psi),
                  [&] { return to_ket(psi) + " i=" + std::to_string(i); });
      }
    }
  });

  r.run("multivariate.boltzmann_multi", [&](Check& c) {
    const std::uint64_t max_n = std::min<std::uint64_t>(o.max_levels, 4);
    const std::uint64_t max_k = std::min<std::uint64_t>(o.max_size, 5);
    for (const auto& sizes : urn_sweep(max_k)) {
      for (std::uint64_t n = 1; n <= max_n; ++n) {
        for (Count i = 0; i <= (n - 1) * sizes.size(); ++i) {
          const auto d = boltzmann_multi(n, sizes, i);
          bool ok = true;
          for (const auto& [tuple, w] : d) {
            Count s = 0;
            for (std::size_t x = 0; x < tuple.size(); ++x) {
              ok = ok && tuple[x].size() == sizes(x);
              s += som(tuple[x]);
            }
            ok = ok && s == i;
          }
          if (sizes.ground()->size() == 1) {
            ok = ok && image(d, [](const MultisetTuple& t) { return t.front(); }) ==
                           boltzmann_on_multisets(EnergyConfig::make(n, sizes.size(), i));
          }
          if (i == 0) {
            MultisetTuple zero;
            const auto levels = GroundSet::levels(n);
            for (Count s : sizes.counts()) zero.push_back(Multiset::singleton(levels, 0, s));
            ok = ok && d == point(zero);
          }
          c.require(ok, [&] { return to_ket(sizes) + " N=" + std::to_string(n) + " i=" + std::to_string(i); });
        }
      }
    }
  });
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options, const CheckObserver& observe) {
  if (options.max_levels < 1 || options.max_size < 1) throw std::invalid_argument("sweep bounds must be >= 1");
  Runner r(observe);
  multiset_checks(r, options);
  nomial_checks(r, options);
  dist_checks(r, options);
  boltzmann_checks(r, options);
  markov_checks(r, options);
  approx_checks(r, options);
  multivariate_checks(r, options);
  return r.take();
}

}  // namespace nomials
