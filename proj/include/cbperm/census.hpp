#pragma once

#include <functional>
#include <gmpxx.h>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cbperm/permutation.hpp"

namespace cbperm {

/// Visits S_n(basis) in lexicographic order. Values are placed one at a
/// time; a prefix is abandoned as soon as it contains a basis pattern.
void for_each_in_class(int n, const PatternBasis& basis,
                       const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> generate_class(int n, const PatternBasis& basis);

/// Reference generator: filters all n! permutations. Only sensible for small n.
std::vector<Permutation> filter_class(int n, const PatternBasis& basis);

mpz_class class_count(int n, const PatternBasis& basis);

enum class Statistic { Asc, Lmax, PosMax, Head, Lds, Connected, EndpointHeight };

std::string_view to_string(Statistic s);
/// Throws std::invalid_argument for unknown names.
Statistic parse_statistic(std::string_view name);
/// Comma-separated list, e.g. "pos_max,lmax".
std::vector<Statistic> parse_statistics(std::string_view list);

/// Value of one statistic; booleans are 0/1. EndpointHeight goes through phi
/// and therefore needs sigma in Av(T1) or Av(T2).
int evaluate(Statistic s, const Permutation& sigma);

/// Exact joint counts of a tuple of statistics over a set of permutations.
class DistributionTable {
 public:
  using Key = std::vector<int>;

  DistributionTable(int n, std::string basis, std::vector<Statistic> stats);

  int n() const { return n_; }
  const std::string& basis() const { return basis_; }
  std::span<const Statistic> stats() const { return stats_; }
  const std::map<Key, mpz_class>& counts() const { return counts_; }

  void add(const Key& key, const mpz_class& count = 1);
  void add(const Permutation& sigma);
  /// Zero for absent keys.
  mpz_class at(const Key& key) const;
  mpz_class total() const;
  /// Associative, commutative merge of two tables over the same statistics.
  void merge(const DistributionTable& other);

  /// Header "stat1,...,count"; one row per key in ascending key order.
  std::string to_csv() const;
  /// {"n":..,"basis":..,"stats":[..],"entries":[{"stat":v,..,"count":"c"}]},
  /// counts as decimal strings.
  std::string to_json() const;

  /// Same statistics and counts; n and basis labels are not compared.
  bool same_counts(const DistributionTable& other) const;

 private:
  int n_;
  std::string basis_;
  std::vector<Statistic> stats_;
  std::map<Key, mpz_class> counts_;
};

DistributionTable distribution(int n, const PatternBasis& basis,
                               std::span<const Statistic> stats);

/// Distribution over the members of S_n(basis) accepted by `keep`.
DistributionTable distribution_where(int n, const PatternBasis& basis,
                                     std::span<const Statistic> stats,
                                     const std::function<bool(const Permutation&)>& keep);

/// h[n][k] = #{sigma in S_n(T1) : sigma(1) = k} for 1 <= k <= n <= max_n, from
/// the first-element recurrences. Row 1 is h[1][1] = 1; h[n][0] = 0.
std::vector<std::vector<mpz_class>> head_table(int max_n);

/// |S_n(T1 and k k-1 ... 1)|. For k >= 3 this is C(2n-2, n-1) - C(2n-2, n-k);
/// for k = 2 the class is the identity alone.
mpz_class count_avoiding_long_decreasing(int n, int k);

}  // namespace cbperm
