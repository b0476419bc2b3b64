#include "cbperm/census.hpp"

#include <algorithm>
#include <numeric>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "cbperm/bijection.hpp"
#include "cbperm/binomial.hpp"

namespace cbperm {

void for_each_in_class(int n, const PatternBasis& basis,
                       const std::function<void(const Permutation&)>& visit) {
  if (n < 1) throw std::invalid_argument("for_each_in_class: n must be >= 1");
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(prefix.size()) == n) {
      visit(Permutation(prefix));
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      prefix.push_back(v);
      bool clean = true;
      for (const auto& p : basis.patterns()) {
        if (contains_pattern_ending_at_last(prefix, p)) {
          clean = false;
          break;
        }
      }
      if (clean) {
        used[static_cast<std::size_t>(v)] = 1;
        self(self);
        used[static_cast<std::size_t>(v)] = 0;
      }
      prefix.pop_back();
    }
  };
  rec(rec);
}

std::vector<Permutation> generate_class(int n, const PatternBasis& basis) {
  std::vector<Permutation> out;
  for_each_in_class(n, basis, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::vector<Permutation> filter_class(int n, const PatternBasis& basis) {
  if (n < 1) throw std::invalid_argument("filter_class: n must be >= 1");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  std::vector<Permutation> out;
  do {
    if (avoids(std::span<const int>(e), basis)) out.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

mpz_class class_count(int n, const PatternBasis& basis) {
  mpz_class count = 0;
  for_each_in_class(n, basis, [&](const Permutation&) { ++count; });
  return count;
}

std::string_view to_string(Statistic s) {
  switch (s) {
    case Statistic::Asc:
      return "asc";
    case Statistic::Lmax:
      return "lmax";
    case Statistic::PosMax:
      return "pos_max";
    case Statistic::Head:
      return "head";
    case Statistic::Lds:
      return "lds";
    case Statistic::Connected:
      return "connected";
    case Statistic::EndpointHeight:
      return "endpoint_height";
  }
  return "?";
}

Statistic parse_statistic(std::string_view name) {
  for (Statistic s : {Statistic::Asc, Statistic::Lmax, Statistic::PosMax, Statistic::Head,
                      Statistic::Lds, Statistic::Connected, Statistic::EndpointHeight}) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown statistic \"" + std::string(name) + "\"");
}

std::vector<Statistic> parse_statistics(std::string_view list) {
  std::vector<Statistic> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const auto end = comma == std::string_view::npos ? list.size() : comma;
    out.push_back(parse_statistic(list.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int evaluate(Statistic s, const Permutation& sigma) {
  switch (s) {
    case Statistic::Asc:
      return ascents(sigma);
    case Statistic::Lmax:
      return left_to_right_maxima(sigma);
    case Statistic::PosMax:
      return position_of_max(sigma);
    case Statistic::Head:
      return sigma(1);
    case Statistic::Lds:
      return longest_decreasing_length(sigma);
    case Statistic::Connected:
      return is_connected(sigma) ? 1 : 0;
    case Statistic::EndpointHeight:
      return phi(sigma).final_height();
  }
  throw std::logic_error("unhandled statistic");
}

DistributionTable::DistributionTable(int n, std::string basis, std::vector<Statistic> stats)
    : n_(n), basis_(std::move(basis)), stats_(std::move(stats)) {}

void DistributionTable::add(const Key& key, const mpz_class& count) {
  if (key.size() != stats_.size()) throw std::invalid_argument("distribution key arity mismatch");
  counts_[key] += count;
}

void DistributionTable::add(const Permutation& sigma) {
  Key key;
  key.reserve(stats_.size());
  for (Statistic s : stats_) key.push_back(evaluate(s, sigma));
  add(key);
}

mpz_class DistributionTable::at(const Key& key) const {
  auto it = counts_.find(key);
  return it == counts_.end() ? mpz_class(0) : it->second;
}

mpz_class DistributionTable::total() const {
  mpz_class t = 0;
  for (const auto& [key, c] : counts_) t += c;
  return t;
}

void DistributionTable::merge(const DistributionTable& other) {
  if (other.stats_ != stats_) throw std::invalid_argument("merge: statistics differ");
  for (const auto& [key, c] : other.counts_) counts_[key] += c;
}

std::string DistributionTable::to_csv() const {
  std::ostringstream out;
  for (Statistic s : stats_) out << to_string(s) << ',';
  out << "count\n";
  for (const auto& [key, c] : counts_) {
    for (int v : key) out << v << ',';
    out << c.get_str() << '\n';
  }
  return out.str();
}

std::string DistributionTable::to_json() const {
  // ordered_json keeps stat columns in the declared order.
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["basis"] = basis_;
  j["stats"] = nlohmann::ordered_json::array();
  for (Statistic s : stats_) j["stats"].push_back(std::string(to_string(s)));
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [key, c] : counts_) {
    nlohmann::ordered_json e;
    for (std::size_t i = 0; i < key.size(); ++i) e[std::string(to_string(stats_[i]))] = key[i];
    e["count"] = c.get_str();
    j["entries"].push_back(std::move(e));
  }
  return j.dump();
}

bool DistributionTable::same_counts(const DistributionTable& other) const {
  return stats_ == other.stats_ && counts_ == other.counts_;
}

DistributionTable distribution_where(int n, const PatternBasis& basis,
                                     std::span<const Statistic> stats,
                                     const std::function<bool(const Permutation&)>& keep) {
  DistributionTable table(n, basis.name(), {stats.begin(), stats.end()});
  for_each_in_class(n, basis, [&](const Permutation& sigma) {
    if (keep(sigma)) table.add(sigma);
  });
  return table;
}

DistributionTable distribution(int n, const PatternBasis& basis,
                               std::span<const Statistic> stats) {
  return distribution_where(n, basis, stats, [](const Permutation&) { return true; });
}

std::vector<std::vector<mpz_class>> head_table(int max_n) {
  if (max_n < 1) throw std::invalid_argument("head_table: max_n must be >= 1");
  std::vector<std::vector<mpz_class>> h(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) h[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 0);
  h[1][1] = 1;
  for (int n = 2; n <= max_n; ++n) {
    auto& row = h[static_cast<std::size_t>(n)];
    const auto& prev = h[static_cast<std::size_t>(n - 1)];
    row[1] = binomial(2L * n - 4, n - 2);
    // h_{n,k} = h_{n,k-1} - h_{n-1,k-2} for 1 < k < n, with h_{s,0} = 0.
    for (int k = 2; k <= n - 1; ++k) {
      row[static_cast<std::size_t>(k)] =
          row[static_cast<std::size_t>(k - 1)] - prev[static_cast<std::size_t>(k - 2)];
    }
    row[static_cast<std::size_t>(n)] = pow2(n - 2);
  }
  return h;
}

mpz_class count_avoiding_long_decreasing(int n, int k) {
  if (n < 1 || k < 2) throw std::invalid_argument("count_avoiding_long_decreasing: need n >= 1, k >= 2");
  if (k == 2) return 1;
  return binomial(2L * n - 2, n - 1) - binomial(2L * n - 2, n - k);
}

}  // namespace cbperm
