#include "cbperm/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

namespace cbperm {

namespace {

void check_is_permutation(const std::vector<int>& entries) {
  const auto n = entries.size();
  std::vector<char> seen(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = entries[i];
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw std::invalid_argument("permutation entry " + std::to_string(v) +
                                  " at position " + std::to_string(i + 1) +
                                  " is outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("permutation entry " + std::to_string(v) +
                                  " occurs twice");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

// Extends a partial occurrence: chosen[0..depth) hold the values already
// matched to pattern[0..depth). `stop` bounds the search range in `word`.
bool extend_match(std::span<const int> word, std::span<const int> pattern,
                  std::size_t depth, std::size_t from, std::size_t stop,
                  std::vector<int>& chosen) {
  if (depth == pattern.size()) return true;
  const std::size_t remaining = pattern.size() - depth;
  for (std::size_t i = from; i + remaining <= stop; ++i) {
    const int v = word[i];
    bool consistent = true;
    for (std::size_t t = 0; t < depth; ++t) {
      if ((v < chosen[t]) != (pattern[depth] < pattern[t])) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    chosen[depth] = v;
    if (extend_match(word, pattern, depth + 1, i + 1, stop, chosen)) return true;
  }
  return false;
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  check_is_permutation(entries_);
}

Permutation::Permutation(std::initializer_list<int> entries)
    : Permutation(std::vector<int>(entries)) {}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("identity: negative length");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == ',') {
      ++i;
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data() + i) {
      throw std::invalid_argument("cannot parse permutation near \"" +
                                  std::string(text.substr(i)) + "\"");
    }
    values.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation(std::move(values));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_string();
}

PatternBasis::PatternBasis(std::string name, std::vector<Permutation> patterns)
    : name_(std::move(name)), patterns_(std::move(patterns)) {
  if (patterns_.empty()) throw std::invalid_argument("pattern basis is empty");
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (patterns_[i].empty()) throw std::invalid_argument("empty pattern in basis");
    for (std::size_t j = 0; j < i; ++j) {
      if (patterns_[i] == patterns_[j]) {
        throw std::invalid_argument("duplicate pattern " + patterns_[i].to_string());
      }
    }
  }
}

PatternBasis PatternBasis::t1() {
  return {"t1", {{3, 2, 1, 4}, {3, 2, 4, 1}, {4, 2, 1, 3}, {4, 2, 3, 1}}};
}

PatternBasis PatternBasis::t2() {
  return {"t2", {{3, 1, 2, 4}, {3, 1, 4, 2}, {4, 1, 2, 3}, {4, 1, 3, 2}}};
}

PatternBasis PatternBasis::t1_union_t2() { return t1().with(t2(), "t1t2"); }

PatternBasis PatternBasis::decreasing(int k) {
  if (k < 1) throw std::invalid_argument("decreasing pattern needs k >= 1");
  std::vector<int> e(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = k - i;
  return {"dec" + std::to_string(k), {Permutation(std::move(e))}};
}

PatternBasis PatternBasis::with(const PatternBasis& other, std::string name) const {
  std::vector<Permutation> merged = patterns_;
  for (const auto& p : other.patterns_) {
    if (std::find(merged.begin(), merged.end(), p) == merged.end()) merged.push_back(p);
  }
  return {std::move(name), std::move(merged)};
}

int PatternBasis::max_length() const {
  int m = 0;
  for (const auto& p : patterns_) m = std::max(m, p.size());
  return m;
}

bool contains_pattern(std::span<const int> word, const Permutation& pattern) {
  if (pattern.empty()) throw std::invalid_argument("contains_pattern: empty pattern");
  if (pattern.size() > static_cast<int>(word.size())) return false;
  std::vector<int> chosen(static_cast<std::size_t>(pattern.size()));
  return extend_match(word, pattern.entries(), 0, 0, word.size(), chosen);
}

bool contains_pattern(const Permutation& sigma, const Permutation& pattern) {
  return contains_pattern(sigma.entries(), pattern);
}

bool contains_pattern_ending_at_last(std::span<const int> word,
                                     const Permutation& pattern) {
  if (pattern.empty()) throw std::invalid_argument("contains_pattern: empty pattern");
  if (pattern.size() > static_cast<int>(word.size())) return false;
  const auto p = pattern.entries();
  const std::size_t k = p.size();
  // Fix the last pattern letter on the last entry, then match the rest among
  // the earlier entries.
  std::vector<int> chosen(k);
  chosen[0] = word.back();
  std::vector<int> anchored_pattern;
  anchored_pattern.push_back(p[k - 1]);
  anchored_pattern.insert(anchored_pattern.end(), p.begin(), p.end() - 1);
  std::vector<int> earlier;
  earlier.push_back(word.back());
  earlier.insert(earlier.end(), word.begin(), word.end() - 1);
  return extend_match(earlier, anchored_pattern, 1, 1, earlier.size(), chosen);
}

bool avoids(std::span<const int> word, const PatternBasis& basis) {
  for (const auto& p : basis.patterns()) {
    if (contains_pattern(word, p)) return false;
  }
  return true;
}

bool avoids(const Permutation& sigma, const PatternBasis& basis) {
  return avoids(sigma.entries(), basis);
}

LtrDecomposition ltr_decompose(const Permutation& sigma) {
  if (sigma.empty()) throw std::invalid_argument("ltr_decompose: empty permutation");
  LtrDecomposition d;
  for (int v : sigma.entries()) {
    if (d.blocks.empty() || v > d.blocks.back().max) {
      d.blocks.push_back({v, {}});
    } else {
      d.blocks.back().tail.push_back(v);
    }
  }
  return d;
}

Permutation renormalize(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("renormalize: duplicate entries");
  }
  std::vector<int> ranks;
  ranks.reserve(word.size());
  for (int v : word) {
    ranks.push_back(
        static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  }
  return Permutation(std::move(ranks));
}

int ascents(const Permutation& sigma) {
  int count = 0;
  for (int i = 1; i < sigma.size(); ++i) count += sigma(i) < sigma(i + 1);
  return count;
}

int descents(const Permutation& sigma) {
  int count = 0;
  for (int i = 1; i < sigma.size(); ++i) count += sigma(i) > sigma(i + 1);
  return count;
}

int left_to_right_maxima(const Permutation& sigma) {
  int count = 0;
  int best = 0;
  for (int v : sigma.entries()) {
    if (v > best) {
      best = v;
      ++count;
    }
  }
  return count;
}

int position_of_max(const Permutation& sigma) {
  if (sigma.empty()) throw std::invalid_argument("position_of_max: empty permutation");
  const auto e = sigma.entries();
  return static_cast<int>(std::max_element(e.begin(), e.end()) - e.begin()) + 1;
}

int longest_decreasing_length(std::span<const int> word) {
  // Patience sorting on the negated values: tails[j] is the smallest possible
  // last value, negated, of a decreasing run of length j + 1.
  std::vector<int> tails;
  for (int v : word) {
    auto it = std::lower_bound(tails.begin(), tails.end(), -v);
    if (it == tails.end()) {
      tails.push_back(-v);
    } else {
      *it = -v;
    }
  }
  return static_cast<int>(tails.size());
}

int longest_decreasing_length(const Permutation& sigma) {
  return longest_decreasing_length(sigma.entries());
}

bool is_connected(const Permutation& sigma) {
  if (sigma.size() <= 1) return false;
  int running_max = 0;
  for (int l = 1; l < sigma.size(); ++l) {
    running_max = std::max(running_max, sigma(l));
    if (running_max == l) return false;
  }
  return true;
}

StatRecord stat_record(const Permutation& sigma) {
  if (sigma.empty()) throw std::invalid_argument("stat_record: empty permutation");
  return {ascents(sigma),   left_to_right_maxima(sigma),      position_of_max(sigma),
          sigma(1),         longest_decreasing_length(sigma), is_connected(sigma)};
}

bool is_suffix_min_or_max(std::span<const int> word) {
  // Scan right to left, tracking the extremes of the suffix.
  if (word.empty()) return true;
  int lo = word.back();
  int hi = word.back();
  for (std::size_t i = word.size() - 1; i-- > 0;) {
    const int v = word[i];
    if (v < lo) {
      lo = v;
    } else if (v > hi) {
      hi = v;
    } else {
      return false;
    }
  }
  return true;
}

bool is_suffix_top_two(std::span<const int> word) {
  std::set<int> suffix;
  for (std::size_t i = word.size(); i-- > 0;) {
    suffix.insert(word[i]);
    auto it = suffix.rbegin();
    if (*it == word[i]) continue;
    ++it;
    if (*it != word[i]) return false;
  }
  return true;
}

bool validate_t1_structure(const Permutation& sigma) {
  const auto d = ltr_decompose(sigma);
  const int n = sigma.size();
  if (!is_suffix_min_or_max(d.blocks.back().tail)) return false;
  if (d.k() == 1) return true;

  std::vector<int> juxtaposed;
  std::vector<char> is_max(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i + 1 < d.k(); ++i) {
    const auto& b = d.blocks[static_cast<std::size_t>(i)];
    is_max[static_cast<std::size_t>(b.max)] = 1;
    juxtaposed.insert(juxtaposed.end(), b.tail.begin(), b.tail.end());
  }
  std::size_t next = 0;
  for (int v = 1; v <= n - 1 && next < juxtaposed.size(); ++v) {
    if (is_max[static_cast<std::size_t>(v)]) continue;
    if (juxtaposed[next] != v) return false;
    ++next;
  }
  return next == juxtaposed.size();
}

bool validate_t2_structure(const Permutation& sigma) {
  const auto d = ltr_decompose(sigma);
  const int n = sigma.size();
  if (!is_suffix_top_two(d.blocks.back().tail)) return false;

  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i + 1 < d.k(); ++i) {
    const auto& b = d.blocks[static_cast<std::size_t>(i)];
    used[static_cast<std::size_t>(b.max)] = 1;
    // w_i lists the |w_i| greatest unused symbols below M_i, decreasing.
    int v = b.max - 1;
    for (int x : b.tail) {
      while (v >= 1 && used[static_cast<std::size_t>(v)]) --v;
      if (v < 1 || x != v) return false;
      used[static_cast<std::size_t>(v)] = 1;
      --v;
    }
  }
  return true;
}

}  // namespace cbperm
