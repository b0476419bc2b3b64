#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cbperm {

/// A permutation of {1, ..., n} in one-line notation.
///
/// Positions are 1-indexed through operator(); entries() exposes the
/// underlying 0-indexed storage. The default-constructed value is the empty
/// permutation, which is never a member of any class considered here.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `entries` is a permutation of 1..n.
  explicit Permutation(std::vector<int> entries);
  Permutation(std::initializer_list<int> entries);

  static Permutation identity(int n);
  /// Parses "4 1 2 6 7 3 10 5 9 8". Rejects duplicates, zeros and gaps.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  /// sigma(i), 1 <= i <= n.
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> entries() const { return entries_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// A non-empty set of pairwise distinct patterns.
class PatternBasis {
 public:
  PatternBasis(std::string name, std::vector<Permutation> patterns);

  static PatternBasis t1();
  static PatternBasis t2();
  static PatternBasis t1_union_t2();
  /// The single pattern k k-1 ... 1.
  static PatternBasis decreasing(int k);
  /// `*this` with extra patterns appended (duplicates are dropped).
  PatternBasis with(const PatternBasis& other, std::string name) const;

  const std::string& name() const { return name_; }
  std::span<const Permutation> patterns() const { return patterns_; }
  int max_length() const;

 private:
  std::string name_;
  std::vector<Permutation> patterns_;
};

/// True iff some subsequence of `word` (distinct integers) is order-isomorphic
/// to `pattern`. Plain subsequence scan; patterns here are short.
bool contains_pattern(std::span<const int> word, const Permutation& pattern);
bool contains_pattern(const Permutation& sigma, const Permutation& pattern);

/// Containment restricted to occurrences that use the last entry of `word`.
/// The census generator relies on this to prune incrementally.
bool contains_pattern_ending_at_last(std::span<const int> word,
                                     const Permutation& pattern);

bool avoids(const Permutation& sigma, const PatternBasis& basis);
bool avoids(std::span<const int> word, const PatternBasis& basis);

/// One block M_i w_i of the left-to-right maxima decomposition.
struct LtrBlock {
  int max = 0;
  std::vector<int> tail;

  friend bool operator==(const LtrBlock&, const LtrBlock&) = default;
};

/// sigma = M_1 w_1 M_2 w_2 ... M_k w_k with M_1 < ... < M_k = n.
struct LtrDecomposition {
  std::vector<LtrBlock> blocks;

  int k() const { return static_cast<int>(blocks.size()); }
};

LtrDecomposition ltr_decompose(const Permutation& sigma);

/// The permutation of {1..len} order-isomorphic to `word`.
Permutation renormalize(std::span<const int> word);

int ascents(const Permutation& sigma);  // sigma(i) < sigma(i+1)
int descents(const Permutation& sigma);
int left_to_right_maxima(const Permutation& sigma);
int position_of_max(const Permutation& sigma);
int longest_decreasing_length(std::span<const int> word);
int longest_decreasing_length(const Permutation& sigma);

/// No proper prefix of length l >= 1 is a permutation of {1..l}. The
/// length-1 permutation counts as non-connected.
bool is_connected(const Permutation& sigma);

struct StatRecord {
  int asc = 0;
  int lmax = 0;
  int pos_max = 0;
  int head = 0;
  int lds = 0;
  bool connected = false;

  friend bool operator==(const StatRecord&, const StatRecord&) = default;
};

StatRecord stat_record(const Permutation& sigma);

/// Every entry is the minimum or the maximum of its suffix, i.e. the word
/// avoids 231 and 213.
bool is_suffix_min_or_max(std::span<const int> word);
/// Every entry is the greatest or second greatest of its suffix, i.e. the
/// word avoids 123 and 132.
bool is_suffix_top_two(std::span<const int> word);

/// Structural membership test for Av(3214, 3241, 4213, 4231).
bool validate_t1_structure(const Permutation& sigma);
/// Structural membership test for Av(3124, 3142, 4123, 4132).
bool validate_t2_structure(const Permutation& sigma);

}  // namespace cbperm
