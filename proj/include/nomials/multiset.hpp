#pragma once

// Natural-number multisets over finite ground sets.
//
// A ground set is either the numeric levels {0, ..., N-1} or an ordered list
// of opaque labels. Multisets keep a dense count vector indexed by ground
// position; a label is in the support iff its count is nonzero.
//
// Canonical order of multisets (used by every enumeration and by the
// ordering of distribution supports) is colexicographic on the count vector:
// the count at the last ground position is the most significant.

#include "nomials/numbers.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace nomials {

using Count = std::uint64_t;
/// Index into a ground set; for numeric grounds this is the level itself.
using Level = std::size_t;
using Sequence = std::vector<Level>;

class GroundSet {
 public:
  /// The numeric levels 0..n-1; n >= 1.
  static std::shared_ptr<const GroundSet> levels(std::size_t n);
  /// Opaque labels, nonempty and pairwise distinct.
  static std::shared_ptr<const GroundSet> named(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  bool numeric() const { return numeric_; }
  const std::string& label(Level index) const { return labels_.at(index); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Position of `label`; throws std::invalid_argument if absent.
  Level index_of(const std::string& label) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.numeric_ == b.numeric_ && a.labels_ == b.labels_;
  }

 private:
  GroundSet(std::vector<std::string> labels, bool numeric);
  std::vector<std::string> labels_;
  bool numeric_;
};

using GroundPtr = std::shared_ptr<const GroundSet>;

bool same_ground(const GroundPtr& a, const GroundPtr& b);

class Multiset {
 public:
  /// The empty multiset over `ground`.
  explicit Multiset(GroundPtr ground);
  /// Counts must have exactly ground->size() entries.
  Multiset(GroundPtr ground, std::vector<Count> counts);

  /// n|x> for a ground position x.
  static Multiset singleton(GroundPtr ground, Level x, Count n = 1);
  /// 1|x> for every x in the ground (the multiset of singletons).
  static Multiset ones(GroundPtr ground);

  const GroundPtr& ground() const { return ground_; }
  std::span<const Count> counts() const { return counts_; }
  Count operator()(Level x) const { return counts_.at(x); }
  Count size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::vector<Level> support() const;

  Multiset plus(Level x, Count n = 1) const;
  /// Throws std::invalid_argument if fewer than n copies of x are present.
  Multiset minus(Level x, Count n = 1) const;
  Multiset operator+(const Multiset& other) const;
  Multiset scaled(Count factor) const;

  friend bool operator==(const Multiset& a, const Multiset& b);
  /// Ground first (by labels), then colexicographic on counts.
  friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b);

 private:
  GroundPtr ground_;
  std::vector<Count> counts_;
  Count size_ = 0;
};

Count size(const Multiset& phi);

/// ||phi||! / prod_x phi(x)!: the number of sequences accumulating to phi.
Natural coefficient(const Multiset& phi);

/// sum_j phi(j) * j; requires a numeric ground.
Count som(const Multiset& phi);

Multiset accumulate(const GroundPtr& ground, std::span<const Level> seq);
/// Label-based form; every label must belong to `ground`.
Multiset accumulate(const GroundPtr& ground, const std::vector<std::string>& seq);

/// (reverse phi)(j) = phi(N-1-j); requires a numeric ground.
Multiset reverse(const Multiset& phi);

/// Pointwise phi <= psi; grounds must agree.
bool leq(const Multiset& phi, const Multiset& psi);

using MultisetVisitor = std::function<void(const Multiset&)>;

/// All multisets of size k over `ground`, in canonical order.
void for_each_multiset(const GroundPtr& ground, Count k, const MultisetVisitor& visit);
std::vector<Multiset> enumerate_multisets(const GroundPtr& ground, Count k);

/// M[K,i](N): size k, som i, over levels 0..n-1, in canonical order.
/// Throws std::out_of_range unless i <= (n-1)*k.
void for_each_multiset_with_sum(std::size_t n, Count k, Count i, const MultisetVisitor& visit);
std::vector<Multiset> enumerate_multisets_with_sum(std::size_t n, Count k, Count i);

/// All phi with phi <= cap and ||phi|| = k (phi <=_k cap), canonical order.
void for_each_bounded_multiset(const Multiset& cap, Count k, const MultisetVisitor& visit);
std::vector<Multiset> enumerate_bounded_multisets(const Multiset& cap, Count k);

/// Ket text form, levels ascending, zero entries omitted: "3|0> + 1|3>".
/// The empty multiset prints as "0".
std::string to_ket(const Multiset& phi);

/// Parses the ket form against a known ground. Repeated labels add up.
Multiset parse_multiset(const std::string& text, const GroundPtr& ground);
/// Parses the ket form and infers the ground: numeric levels 0..max when every
/// label is a natural number (at least `min_levels` of them), otherwise the
/// named labels in order of first appearance.
Multiset parse_multiset(const std::string& text, std::size_t min_levels = 0);

}  // namespace nomials
