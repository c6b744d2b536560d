#pragma once

// Splits ket text "w1|x1> + w2|x2> + ..." into (weight, inner) pairs.
// Inner text may itself be ket text ("1/5|3|0> + 1|3>>"); nesting is tracked
// by counting '|' openers against '>' closers.

#include "nomials/multiset.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace nomials::detail {

struct KetTerm {
  std::string weight;
  std::string inner;
};

inline std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::vector<KetTerm> split_ket_terms(const std::string& text) {
  std::vector<KetTerm> out;
  const std::string body = trim(text);
  if (body.empty() || body == "0") return out;
  std::size_t pos = 0;
  while (true) {
    const auto bar = body.find('|', pos);
    if (bar == std::string::npos) throw std::invalid_argument("ket syntax: expected '|' in '" + text + "'");
    KetTerm term;
    term.weight = trim(body.substr(pos, bar - pos));
    int depth = 1;
    std::size_t k = bar + 1;
    for (; k < body.size() && depth > 0; ++k) {
      if (body[k] == '|') ++depth;
      if (body[k] == '>') --depth;
    }
    if (depth != 0) throw std::invalid_argument("ket syntax: unbalanced '|...>' in '" + text + "'");
    term.inner = trim(body.substr(bar + 1, k - 1 - (bar + 1)));
    if (term.weight.empty() || term.inner.empty()) {
      throw std::invalid_argument("ket syntax: empty weight or element in '" + text + "'");
    }
    out.push_back(std::move(term));
    while (k < body.size() && std::isspace(static_cast<unsigned char>(body[k]))) ++k;
    if (k == body.size()) break;
    if (body[k] != '+') throw std::invalid_argument("ket syntax: expected '+' in '" + text + "'");
    pos = k + 1;
  }
  return out;
}

inline Count parse_count(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw std::invalid_argument("ket syntax: multiplicity '" + s + "' is not a natural number");
  }
  return static_cast<Count>(std::stoull(s));
}

}  // namespace nomials::detail
