#include "nomials/nomial.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace nomials {

NomialParams NomialParams::make(std::uint64_t levels, std::uint64_t length, std::uint64_t sum) {
  if (levels == 0) throw std::invalid_argument("N-nomial requires N >= 1");
  NomialParams p{levels, length, sum};
  if (sum > p.max_sum()) {
    throw std::out_of_range("N-nomial requires 0 <= i <= (N-1)*K, got i=" + std::to_string(sum) +
                            " with N=" + std::to_string(levels) + ", K=" + std::to_string(length));
  }
  return p;
}

Natural nomial_enum_sequences(const NomialParams& p, std::uint64_t budget) {
  // N^K sequences are visited one by one, like an odometer.
  const Natural total = power(p.levels, p.length);
  if (total > Natural(budget)) {
    throw BudgetExceeded("sequence enumeration needs " + total.get_str() + " steps, budget is " +
                         std::to_string(budget));
  }
  std::vector<std::uint64_t> digits(p.length, 0);
  std::uint64_t running = 0;
  std::uint64_t hits = 0;
  while (true) {
    if (running == p.sum) ++hits;
    std::size_t k = 0;
    while (k < digits.size() && digits[k] + 1 == p.levels) {
      running -= digits[k];
      digits[k] = 0;
      ++k;
    }
    if (k == digits.size()) break;
    ++digits[k];
    ++running;
  }
  return Natural(hits);
}

Natural nomial_via_multisets(const NomialParams& p) {
  Natural total = 0;
  for_each_multiset_with_sum(p.levels, p.length, p.sum,
                             [&](const Multiset& phi) { total += coefficient(phi); });
  return total;
}

Natural nomial_recursive(const NomialParams& p) {
  // memo[size][level]; impossible branches count as 0.
  std::vector<std::vector<std::optional<Natural>>> memo(
      p.length + 1, std::vector<std::optional<Natural>>(p.sum + 1));
  auto collect = [&](auto&& self, std::uint64_t size, std::uint64_t level) -> Natural {
    if (size == 0) return Natural(level == 0 ? 1 : 0);
    if (size == 1) return Natural(level < p.levels ? 1 : 0);
    auto& slot = memo[size][level];
    if (slot) return *slot;
    Natural out = 0;
    const std::uint64_t top = std::min(level + 1, p.levels);
    for (std::uint64_t j = 0; j < top; ++j) out += self(self, size - 1, level - j);
    slot = out;
    return out;
  };
  return collect(collect, p.length, p.sum);
}

Natural nomial_closed_form(const NomialParams& p) {
  if (p.sum >= p.levels || p.length == 0) {
    throw std::invalid_argument("closed form requires i < N and K >= 1");
  }
  return multichoose(p.length, p.sum);
}

Natural nomial(const NomialParams& p) {
  if (p.sum < p.levels && p.length >= 1) return nomial_closed_form(p);
  return nomial_recursive(p);
}

Natural nomial_count(std::uint64_t levels, std::uint64_t length, std::int64_t sum) {
  if (levels == 0) throw std::invalid_argument("N-nomial requires N >= 1");
  if (sum < 0 || static_cast<std::uint64_t>(sum) > (levels - 1) * length) return 0;
  return nomial(NomialParams{levels, length, static_cast<std::uint64_t>(sum)});
}

Natural nomial_prefix_sum(std::uint64_t levels, std::uint64_t length, std::uint64_t n) {
  if (length == 0) throw std::invalid_argument("prefix sum requires K >= 1");
  if (n > levels) throw std::invalid_argument("prefix sum requires n <= N");
  Natural lhs = 0;
  for (std::uint64_t i = 0; i < n; ++i) lhs += nomial_count(levels, length, static_cast<std::int64_t>(i));
  const Rational rhs = make_rational(Natural(n) * multichoose(length, n), Natural(length));
  if (rhs != Rational(lhs)) {
    throw std::logic_error("prefix-sum identity violated at N=" + std::to_string(levels) +
                           " K=" + std::to_string(length) + " n=" + std::to_string(n));
  }
  return lhs;
}

std::vector<Natural> polynomial_expand(std::uint64_t levels, std::uint64_t length) {
  if (levels == 0) throw std::invalid_argument("polynomial_expand requires N >= 1");
  std::vector<Natural> poly{Natural(1)};
  for (std::uint64_t k = 0; k < length; ++k) {
    std::vector<Natural> next(poly.size() + levels - 1, Natural(0));
    for (std::size_t a = 0; a < poly.size(); ++a) {
      for (std::uint64_t b = 0; b < levels; ++b) next[a + b] += poly[a];
    }
    poly = std::move(next);
  }
  return poly;
}

bool vandermonde_check(std::uint64_t levels, std::uint64_t k1, std::uint64_t k2, std::uint64_t i) {
  const auto p = NomialParams::make(levels, k1 + k2, i);
  Natural rhs = 0;
  const std::uint64_t max1 = (levels - 1) * k1;
  const std::uint64_t max2 = (levels - 1) * k2;
  for (std::uint64_t i1 = 0; i1 <= std::min(i, max1); ++i1) {
    const std::uint64_t i2 = i - i1;
    if (i2 > max2) continue;
    rhs += nomial(NomialParams{levels, k1, i1}) * nomial(NomialParams{levels, k2, i2});
  }
  return nomial(p) == rhs;
}

NomialTable::NomialTable(std::uint64_t levels, std::uint64_t max_length) : levels_(levels) {
  if (levels == 0) throw std::invalid_argument("NomialTable requires N >= 1");
  rows_.reserve(max_length + 1);
  rows_.push_back({Natural(1)});
  for (std::uint64_t k = 1; k <= max_length; ++k) {
    const auto& prev = rows_.back();
    std::vector<Natural> next(prev.size() + levels - 1, Natural(0));
    // C_N(K,i) = sum_{j<N} C_N(K-1, i-j): one more particle at level j.
    for (std::size_t a = 0; a < prev.size(); ++a) {
      for (std::uint64_t j = 0; j < levels; ++j) next[a + j] += prev[a];
    }
    rows_.push_back(std::move(next));
  }
}

Natural NomialTable::at(std::uint64_t length, std::uint64_t i) const {
  const auto& r = rows_.at(length);
  return i < r.size() ? r[i] : Natural(0);
}

ChooseSumCheck check_choose_sums(std::uint64_t n, std::uint64_t m) {
  if (n == 0 || m == 0) throw std::invalid_argument("choose-sum identities need n >= 1, m >= 1");
  Natural plain = 0;
  Natural weighted = 0;
  Natural squared = 0;
  for (std::uint64_t j = 0; j < m; ++j) {
    const Natural c = multichoose(n, j);
    plain += c;
    weighted += c * j;
    squared += c * j * j;
  }
  ChooseSumCheck out{true, true, true};
  out.plain = plain == multichoose(m, n);
  if (m >= 2) out.weighted = weighted == n * multichoose(m - 1, n + 1);
  if (m >= 3) {
    out.squared = squared == n * (n + 1) * multichoose(m - 2, n + 2) + n * multichoose(m - 1, n + 1);
  }
  return out;
}

}  // namespace nomials
