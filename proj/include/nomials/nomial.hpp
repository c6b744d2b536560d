#pragma once

// N-nomial coefficients C_N(K, i): the number of length-K sequences over
// {0, ..., N-1} whose entries add up to i. Several independent routes are
// provided so they can be cross-checked against one another.

#include "nomials/multiset.hpp"
#include "nomials/numbers.hpp"

#include <cstdint>
#include <vector>

namespace nomials {

struct NomialParams {
  std::uint64_t levels;  // N >= 1
  std::uint64_t length;  // K >= 0
  std::uint64_t sum;     // 0 <= i <= (N-1)*K

  /// Throws std::invalid_argument / std::out_of_range on invalid parameters.
  static NomialParams make(std::uint64_t levels, std::uint64_t length, std::uint64_t sum);
  std::uint64_t max_sum() const { return (levels - 1) * length; }
};

/// Counts sequences directly. Throws BudgetExceeded when N^K > budget.
Natural nomial_enum_sequences(const NomialParams& p, std::uint64_t budget = kDefaultBudget);

/// Sum of multiset coefficients over M[K,i](N).
Natural nomial_via_multisets(const NomialParams& p);

/// Memoised "collect" recursion over (remaining size, remaining sum).
Natural nomial_recursive(const NomialParams& p);

/// C_N(K,i) = multichoose(K, i); only valid for i < N and K >= 1.
Natural nomial_closed_form(const NomialParams& p);

/// Closed form when it applies, recursive route otherwise.
Natural nomial(const NomialParams& p);

/// C_N(K,i) for any integer i, 0 outside [0, (N-1)K]. Requires N >= 1.
Natural nomial_count(std::uint64_t levels, std::uint64_t length, std::int64_t sum);

/// sum_{i<n} C_N(K,i), checked against (n/K) * multichoose(K,n).
/// Requires K >= 1 and n <= N; throws std::logic_error if the sides differ.
Natural nomial_prefix_sum(std::uint64_t levels, std::uint64_t length, std::uint64_t n);

/// Coefficients of (1 + x + ... + x^{N-1})^K by repeated convolution.
std::vector<Natural> polynomial_expand(std::uint64_t levels, std::uint64_t length);

/// C_N(K1+K2, i) == sum_{i1+i2=i} C_N(K1,i1) C_N(K2,i2).
bool vandermonde_check(std::uint64_t levels, std::uint64_t k1, std::uint64_t k2, std::uint64_t i);

/// Rows C_N(K, 0..(N-1)K) for K = 0..K_max. Immutable after construction.
class NomialTable {
 public:
  NomialTable(std::uint64_t levels, std::uint64_t max_length);

  std::uint64_t levels() const { return levels_; }
  std::uint64_t max_length() const { return rows_.size() - 1; }
  const std::vector<Natural>& row(std::uint64_t length) const { return rows_.at(length); }
  /// 0 when i is outside the row.
  Natural at(std::uint64_t length, std::uint64_t i) const;

 private:
  std::uint64_t levels_;
  std::vector<std::vector<Natural>> rows_;
};

/// The three multichoose summation identities for a given n >= 1 and m:
///   sum_{j<m} ((n,j))       = ((m,n))                             (m >= 1)
///   sum_{j<m} ((n,j)) j     = n ((m-1, n+1))                      (m >= 2)
///   sum_{j<m} ((n,j)) j^2   = n(n+1) ((m-2,n+2)) + n ((m-1,n+1))  (m >= 3)
/// Identities whose bound on m is not met are reported as holding.
struct ChooseSumCheck {
  bool plain;
  bool weighted;
  bool squared;
  bool all() const { return plain && weighted && squared; }
};
ChooseSumCheck check_choose_sums(std::uint64_t n, std::uint64_t m);

}  // namespace nomials
