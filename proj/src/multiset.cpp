#include "nomials/multiset.hpp"

#include "ket_lexer.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nomials {

GroundSet::GroundSet(std::vector<std::string> labels, bool numeric)
    : labels_(std::move(labels)), numeric_(numeric) {}

std::shared_ptr<const GroundSet> GroundSet::levels(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ground set must be nonempty (N >= 1)");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t j = 0; j < n; ++j) labels.push_back(std::to_string(j));
  return std::shared_ptr<const GroundSet>(new GroundSet(std::move(labels), true));
}

std::shared_ptr<const GroundSet> GroundSet::named(std::vector<std::string> labels) {
  if (labels.empty()) throw std::invalid_argument("ground set must be nonempty");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw std::invalid_argument("ground labels must be nonempty");
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate ground label '" + l + "'");
  }
  return std::shared_ptr<const GroundSet>(new GroundSet(std::move(labels), false));
}

Level GroundSet::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::invalid_argument("label '" + label + "' not in ground set");
  return static_cast<Level>(it - labels_.begin());
}

bool same_ground(const GroundPtr& a, const GroundPtr& b) {
  return a == b || *a == *b;
}

// ---------------------------------------------------------------------------

Multiset::Multiset(GroundPtr ground) : ground_(std::move(ground)) {
  if (!ground_) throw std::invalid_argument("multiset needs a ground set");
  counts_.assign(ground_->size(), 0);
}

Multiset::Multiset(GroundPtr ground, std::vector<Count> counts)
    : ground_(std::move(ground)), counts_(std::move(counts)) {
  if (!ground_) throw std::invalid_argument("multiset needs a ground set");
  if (counts_.size() != ground_->size()) {
    throw std::invalid_argument("count vector length differs from ground set size");
  }
  size_ = std::accumulate(counts_.begin(), counts_.end(), Count{0});
}

Multiset Multiset::singleton(GroundPtr ground, Level x, Count n) {
  return Multiset(std::move(ground)).plus(x, n);
}

Multiset Multiset::ones(GroundPtr ground) {
  std::vector<Count> counts(ground->size(), 1);
  return Multiset(std::move(ground), std::move(counts));
}

std::vector<Level> Multiset::support() const {
  std::vector<Level> out;
  for (Level x = 0; x < counts_.size(); ++x) {
    if (counts_[x] != 0) out.push_back(x);
  }
  return out;
}

Multiset Multiset::plus(Level x, Count n) const {
  Multiset out = *this;
  out.counts_.at(x) += n;
  out.size_ += n;
  return out;
}

Multiset Multiset::minus(Level x, Count n) const {
  if (counts_.at(x) < n) throw std::invalid_argument("multiset subtraction below zero");
  Multiset out = *this;
  out.counts_[x] -= n;
  out.size_ -= n;
  return out;
}

Multiset Multiset::operator+(const Multiset& other) const {
  if (!same_ground(ground_, other.ground_)) throw std::invalid_argument("multisets over different grounds");
  Multiset out = *this;
  for (std::size_t x = 0; x < counts_.size(); ++x) out.counts_[x] += other.counts_[x];
  out.size_ += other.size_;
  return out;
}

Multiset Multiset::scaled(Count factor) const {
  Multiset out = *this;
  for (auto& c : out.counts_) c *= factor;
  out.size_ *= factor;
  return out;
}

bool operator==(const Multiset& a, const Multiset& b) {
  return a.counts_ == b.counts_ && same_ground(a.ground_, b.ground_);
}

std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) {
  if (!same_ground(a.ground_, b.ground_)) {
    if (auto c = a.ground_->size() <=> b.ground_->size(); c != 0) return c;
    if (auto c = a.ground_->numeric() <=> b.ground_->numeric(); c != 0) return c;
    return a.ground_->labels() <=> b.ground_->labels();
  }
  for (std::size_t x = a.counts_.size(); x-- > 0;) {
    if (auto c = a.counts_[x] <=> b.counts_[x]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

Count size(const Multiset& phi) { return phi.size(); }

Natural coefficient(const Multiset& phi) {
  Natural out = factorial(phi.size());
  for (Count c : phi.counts()) {
    if (c > 1) out /= factorial(c);
  }
  return out;
}

namespace {
void require_numeric(const Multiset& phi, const char* what) {
  if (!phi.ground()->numeric()) {
    throw std::invalid_argument(std::string(what) + " requires a numeric ground set");
  }
}
}  // namespace

Count som(const Multiset& phi) {
  require_numeric(phi, "som");
  Count total = 0;
  const auto counts = phi.counts();
  for (Level j = 0; j < counts.size(); ++j) total += counts[j] * j;
  return total;
}

Multiset accumulate(const GroundPtr& ground, std::span<const Level> seq) {
  std::vector<Count> counts(ground->size(), 0);
  for (Level x : seq) {
    if (x >= counts.size()) throw std::invalid_argument("sequence element outside ground set");
    ++counts[x];
  }
  return Multiset(ground, std::move(counts));
}

Multiset accumulate(const GroundPtr& ground, const std::vector<std::string>& seq) {
  std::vector<Count> counts(ground->size(), 0);
  for (const auto& label : seq) ++counts[ground->index_of(label)];
  return Multiset(ground, std::move(counts));
}

Multiset reverse(const Multiset& phi) {
  require_numeric(phi, "reverse");
  std::vector<Count> counts(phi.counts().rbegin(), phi.counts().rend());
  return Multiset(phi.ground(), std::move(counts));
}

bool leq(const Multiset& phi, const Multiset& psi) {
  if (!same_ground(phi.ground(), psi.ground())) throw std::invalid_argument("leq: grounds differ");
  const auto a = phi.counts();
  const auto b = psi.counts();
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] > b[x]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration. All three walkers fill the count vector from the last ground
// position downwards, trying counts in ascending order, which yields the
// colexicographic order.

namespace {

struct BoundedWalker {
  const GroundPtr& ground;
  std::span<const Count> caps;  // empty means unbounded
  const MultisetVisitor& visit;
  std::vector<Count> counts;
  std::vector<Count> cap_suffix;  // sum of caps over positions < x (i.e. what is left below)

  void run(Count k) {
    const std::size_t n = ground->size();
    counts.assign(n, 0);
    if (!caps.empty()) {
      cap_suffix.assign(n + 1, 0);
      for (std::size_t x = 0; x < n; ++x) cap_suffix[x + 1] = cap_suffix[x] + caps[x];
      if (cap_suffix[n] < k) return;
    }
    step(n - 1, k);
  }

  void step(std::size_t x, Count remaining) {
    Count hi = remaining;
    if (!caps.empty()) hi = std::min(hi, caps[x]);
    if (x == 0) {
      if (remaining <= hi) {
        counts[0] = remaining;
        visit(Multiset(ground, counts));
      }
      return;
    }
    Count lo = 0;
    if (!caps.empty() && remaining > cap_suffix[x]) lo = remaining - cap_suffix[x];
    for (Count c = lo; c <= hi; ++c) {
      counts[x] = c;
      step(x - 1, remaining - c);
    }
    counts[x] = 0;
  }
};

struct SumWalker {
  GroundPtr ground;
  const MultisetVisitor& visit;
  std::vector<Count> counts;

  void step(std::size_t level, Count size_left, Count sum_left) {
    if (level == 0) {
      if (sum_left == 0) {
        counts[0] = size_left;
        visit(Multiset(ground, counts));
      }
      return;
    }
    const Count hi = std::min(size_left, sum_left / level);
    for (Count c = 0; c <= hi; ++c) {
      const Count size_after = size_left - c;
      const Count sum_after = sum_left - c * level;
      // Levels below `level` can absorb at most (level-1) per particle.
      if (sum_after > (level - 1) * size_after) continue;
      counts[level] = c;
      step(level - 1, size_after, sum_after);
    }
    counts[level] = 0;
  }
};

}  // namespace

void for_each_multiset(const GroundPtr& ground, Count k, const MultisetVisitor& visit) {
  BoundedWalker walker{ground, {}, visit, {}, {}};
  walker.run(k);
}

std::vector<Multiset> enumerate_multisets(const GroundPtr& ground, Count k) {
  std::vector<Multiset> out;
  for_each_multiset(ground, k, [&](const Multiset& m) { out.push_back(m); });
  return out;
}

void for_each_multiset_with_sum(std::size_t n, Count k, Count i, const MultisetVisitor& visit) {
  if (n == 0) throw std::invalid_argument("ground set must be nonempty (N >= 1)");
  if (i > (n - 1) * k) throw std::out_of_range("total sum i must satisfy 0 <= i <= (N-1)*K");
  SumWalker walker{GroundSet::levels(n), visit, std::vector<Count>(n, 0)};
  walker.step(n - 1, k, i);
}

std::vector<Multiset> enumerate_multisets_with_sum(std::size_t n, Count k, Count i) {
  std::vector<Multiset> out;
  for_each_multiset_with_sum(n, k, i, [&](const Multiset& m) { out.push_back(m); });
  return out;
}

void for_each_bounded_multiset(const Multiset& cap, Count k, const MultisetVisitor& visit) {
  BoundedWalker walker{cap.ground(), cap.counts(), visit, {}, {}};
  walker.run(k);
}

std::vector<Multiset> enumerate_bounded_multisets(const Multiset& cap, Count k) {
  std::vector<Multiset> out;
  for_each_bounded_multiset(cap, k, [&](const Multiset& m) { out.push_back(m); });
  return out;
}

// ---------------------------------------------------------------------------

std::string to_ket(const Multiset& phi) {
  std::string out;
  const auto counts = phi.counts();
  for (Level x = 0; x < counts.size(); ++x) {
    if (counts[x] == 0) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(counts[x]) + "|" + phi.ground()->label(x) + ">";
  }
  return out.empty() ? "0" : out;
}

Multiset parse_multiset(const std::string& text, const GroundPtr& ground) {
  Multiset out(ground);
  for (const auto& term : detail::split_ket_terms(text)) {
    out = out.plus(ground->index_of(term.inner), detail::parse_count(term.weight));
  }
  return out;
}

Multiset parse_multiset(const std::string& text, std::size_t min_levels) {
  const auto terms = detail::split_ket_terms(text);
  bool numeric = true;
  std::size_t max_level = 0;
  std::vector<std::string> labels;
  for (const auto& term : terms) {
    const bool digits = !term.inner.empty() &&
        std::all_of(term.inner.begin(), term.inner.end(),
                    [](unsigned char c) { return std::isdigit(c) != 0; });
    if (digits) {
      max_level = std::max<std::size_t>(max_level, std::stoull(term.inner));
    } else {
      numeric = false;
    }
    if (std::find(labels.begin(), labels.end(), term.inner) == labels.end()) {
      labels.push_back(term.inner);
    }
  }
  GroundPtr ground;
  if (numeric) {
    const std::size_t n = terms.empty() ? std::max<std::size_t>(min_levels, 1)
                                        : std::max(min_levels, max_level + 1);
    ground = GroundSet::levels(n);
  } else {
    ground = GroundSet::named(std::move(labels));
  }
  // Numeric labels may carry leading zeros ("03"); normalise via the level value.
  Multiset out(ground);
  for (const auto& term : terms) {
    const Level x = numeric ? static_cast<Level>(std::stoull(term.inner)) : ground->index_of(term.inner);
    out = out.plus(x, detail::parse_count(term.weight));
  }
  return out;
}

}  // namespace nomials
