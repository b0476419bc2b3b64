#pragma once

#include <functional>
#include <gmpxx.h>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cbperm {

enum class Step : char { Up = 'U', Down = 'D' };

/// A Dyck prefix: a word over {U, D} whose every initial segment has at
/// least as many U as D. Construction validates the prefix property.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps);

  /// Case-insensitive; throws PathParseError on a bad letter or when the
  /// path dips below the axis (index reported 1-based).
  static LatticePath parse(std::string_view text);

  int length() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }
  /// Step at 1-based position i.
  Step operator[](int i) const { return steps_[static_cast<std::size_t>(i - 1)]; }
  std::span<const Step> steps() const { return steps_; }

  int up_count() const;
  int down_count() const { return length() - up_count(); }
  int final_height() const { return up_count() - down_count(); }

  LatticePath concat(const LatticePath& tail) const;
  std::string to_string() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Step> steps_;
};

std::ostream& operator<<(std::ostream& os, const LatticePath& p);

/// Thrown by LatticePath construction. `index` is the 1-based offending
/// position.
class PathParseError : public std::invalid_argument {
 public:
  PathParseError(const std::string& what, int index)
      : std::invalid_argument(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

enum class PathKind { DyckPath, Floating, Neither };

std::string_view to_string(PathKind kind);

/// Empty path counts as a Dyck path.
PathKind classify(const LatticePath& path);

/// Number of down steps ending at height 0.
int returns(const LatticePath& path);

struct LastReturnSplit {
  LatticePath dyck_part;
  LatticePath floating_part;
};

LastReturnSplit last_return_split(const LatticePath& path);

/// Position of the (n+1)-th up step of a path of length 2n, if any.
std::optional<int> cut_step_index(const LatticePath& path, int n);

struct PathFeatures {
  int peaks = 0;            // UD
  int valleys = 0;          // DU
  int triple_descents = 0;  // DDD, overlapping occurrences
  int returns = 0;
  int endpoint_height = 0;

  // Cut-relative counts; filled only when the half-length n is supplied.
  bool has_cut_counts = false;
  std::optional<int> cut_index;
  int peaks_before_cut = 0;
  int downs_before_cut = 0;
  /// Includes one extra valley for the final down step of a Dyck path.
  int valleys_before_cut = 0;
  int triple_descents_before_cut = 0;
  int downs_after_cut = 0;
};

/// A factor counts as before the cut when all its steps precede the cut
/// index, except that a valley DU whose U is the cut step is also counted.
/// Without a cut (Dyck path) the whole path is before it.
PathFeatures features(const LatticePath& path, std::optional<int> n = std::nullopt);

/// Visits every Dyck prefix of the given length once, lexicographically with
/// D < U.
void for_each_prefix(int length, const std::function<void(const LatticePath&)>& visit);
std::vector<LatticePath> enumerate_prefixes(int length);

/// Dyck prefixes of length 2n-2 ending at height 2h, by the ballot formula
/// C(2n-3, n-1-h) - C(2n-3, n-3-h).
mpz_class count_prefixes_by_height(int n, int h);

/// One-line slash profile, e.g. "//\//\\\" for UUDUUDDD.
std::string height_profile(const LatticePath& path);

}  // namespace cbperm
