#include "cpap/pattern.hpp"

#include "cpap/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace cpap {

namespace detail {

Bijection::Bijection(std::vector<int> elems) : elems_(std::move(elems)) {
  if (elems_.empty()) fail(ErrorKind::invalid_input, "empty permutation");
  std::vector<bool> seen(elems_.size() + 1, false);
  for (int v : elems_) {
    if (v < 1 || static_cast<std::size_t>(v) > elems_.size() || seen[static_cast<std::size_t>(v)]) {
      fail(ErrorKind::invalid_input, "not a permutation of 1.." + std::to_string(elems_.size()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

std::vector<int> Bijection::parse_elems(std::string_view text) {
  std::vector<int> out;
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  if (!separated) {
    for (char c : text) {
      if (c < '0' || c > '9') fail(ErrorKind::invalid_input, "bad pattern text: '" + std::string(text) + "'");
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ',' || text[pos] == ' ')) ++pos;
    if (pos == text.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) fail(ErrorKind::invalid_input, "bad pattern text: '" + std::string(text) + "'");
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

std::string Bijection::str() const {
  const bool single_digits = elems_.size() <= 9;
  std::string s;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (!single_digits && i > 0) s += ',';
    s += std::to_string(elems_[i]);
  }
  return s;
}

}  // namespace detail

Pattern::Pattern(std::vector<int> elems) : Bijection(std::move(elems)) {}

namespace {

template <typename T>
Pattern standardize_impl(std::span<const T> word) {
  if (word.empty()) fail(ErrorKind::invalid_input, "cannot standardize an empty word");
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  std::vector<int> ranks(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && word[order[r]] == word[order[r - 1]]) {
      fail(ErrorKind::invalid_input, "duplicate entry in word");
    }
    ranks[order[r]] = static_cast<int>(r + 1);
  }
  return Pattern(std::move(ranks));
}

}  // namespace

Pattern standardize(std::span<const long> word) { return standardize_impl(word); }
Pattern standardize(std::span<const int> word) { return standardize_impl(word); }

bool order_isomorphic(std::span<const int> word, const Pattern& pat) {
  if (word.size() != pat.size()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      if ((word[i] < word[j]) != (pat[i] < pat[j])) return false;
    }
  }
  return true;
}

std::vector<std::size_t> consecutive_starts(std::span<const int> word, const Pattern& pat) {
  std::vector<std::size_t> starts;
  const std::size_t m = pat.size();
  if (m > word.size()) return starts;
  for (std::size_t s = 0; s + m <= word.size(); ++s) {
    if (order_isomorphic(word.subspan(s, m), pat)) starts.push_back(s);
  }
  return starts;
}

Occurrences occurrences(const Permutation& host, const Pattern& pat, OccurrenceMode mode) {
  Occurrences out;
  const std::size_t n = host.size();
  const std::size_t m = pat.size();
  if (m > n) return out;

  if (mode == OccurrenceMode::consecutive) {
    for (std::size_t s : consecutive_starts(host.elems(), pat)) {
      std::vector<std::size_t> idx(m);
      std::iota(idx.begin(), idx.end(), s);
      out.index_sets.push_back(std::move(idx));
    }
  } else {
    // Lexicographic walk over m-subsets of positions.
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> sub(m);
    while (true) {
      for (std::size_t i = 0; i < m; ++i) sub[i] = host[idx[i]];
      if (order_isomorphic(sub, pat)) out.index_sets.push_back(idx);
      std::size_t i = m;
      while (i > 0 && idx[i - 1] == n - m + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  out.count = out.index_sets.size();
  return out;
}

Pattern apply(const Pattern& pat, Symmetry which) {
  std::vector<int> out(pat.elems().begin(), pat.elems().end());
  if (which == Symmetry::reverse) {
    std::reverse(out.begin(), out.end());
  } else {
    const int top = static_cast<int>(out.size()) + 1;
    for (int& v : out) v = top - v;
  }
  return Pattern(std::move(out));
}

}  // namespace cpap
