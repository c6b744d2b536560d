#include "nomials/verify.hpp"

#include <doctest.h>

#include <set>

using namespace nomials;

TEST_CASE("the invariant sweep passes and covers every module") {
  VerifyOptions o;
  o.max_levels = 4;
  o.max_size = 5;
  std::size_t seen = 0;
  const auto results = run_verification(o, [&](const CheckResult&) { ++seen; });
  CHECK(seen == results.size());
  std::set<std::string> prefixes;
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
    prefixes.insert(r.name.substr(0, r.name.find('.')));
  }
  CHECK(prefixes == std::set<std::string>{"multiset", "nomial", "dist", "boltzmann", "markov", "approx", "multivariate"});
  o.max_levels = 0;
  CHECK_THROWS(run_verification(o));
}
