#include "cbperm/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <json.hpp>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cbperm/bijection.hpp"
#include "cbperm/binomial.hpp"
#include "cbperm/census.hpp"
#include "cbperm/generating_functions.hpp"

namespace cbperm {

namespace {

using Table = std::map<std::vector<int>, mpz_class>;

std::string range_n(int lo, int hi) { return "n=" + std::to_string(lo) + ".." + std::to_string(hi); }
std::string range_len(int lo, int hi) {
  return "length=" + std::to_string(lo) + ".." + std::to_string(hi);
}

// Counts cases and keeps the first failure's description.
class Probe {
 public:
  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++cases_;
    if (!ok && failures_++ == 0) first_ = describe();
  }

  CheckResult result(std::string name, std::string range) const {
    CheckResult r{std::move(name), std::move(range), failures_ == 0, {}};
    if (failures_ == 0) {
      r.detail = std::to_string(cases_) + " cases";
    } else {
      r.detail = std::to_string(failures_) + " of " + std::to_string(cases_) + " cases failed; first: " + first_;
    }
    return r;
  }

 private:
  long cases_ = 0;
  long failures_ = 0;
  std::string first_;
};

std::string str(const Permutation& p) { return "[" + p.to_string() + "]"; }
std::string str(const LatticePath& p) { return "\"" + p.to_string() + "\""; }

std::string str(const Table& t) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [key, c] : t) {
    if (!first) out << ", ";
    first = false;
    out << '(';
    for (std::size_t i = 0; i < key.size(); ++i) out << (i ? "," : "") << key[i];
    out << "):" << c.get_str();
  }
  out << '}';
  return out.str();
}

struct Context {
  int max_n = 0;
  int trunc = 0;
  std::vector<std::vector<Permutation>> t1;  // indexed by n
  std::vector<std::vector<Permutation>> t2;

  const std::vector<Permutation>& members(ClassTag tag, int n) const {
    return (tag == ClassTag::T1 ? t1 : t2)[static_cast<std::size_t>(n)];
  }
};

Table tabulate(const std::vector<Permutation>& perms, const std::vector<Statistic>& stats,
               const std::function<bool(const Permutation&)>& keep = {}) {
  Table t;
  for (const auto& sigma : perms) {
    if (keep && !keep(sigma)) continue;
    std::vector<int> key;
    for (Statistic s : stats) key.push_back(evaluate(s, sigma));
    ++t[key];
  }
  return t;
}

bool ends_with_max(const Permutation& s) { return s(static_cast<int>(s.size())) == static_cast<int>(s.size()); }

// ---------------------------------------------------------------------------
// Structure and generation

CheckResult structure_validator(const Context& ctx, ClassTag tag) {
  const int hi = std::min(ctx.max_n, 8);
  const auto basis = basis_of(tag);
  Probe probe;
  for (int n = 1; n <= hi; ++n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    do {
      Permutation sigma(e);
      const bool structural = tag == ClassTag::T1 ? validate_t1_structure(sigma) : validate_t2_structure(sigma);
      probe.expect(structural == avoids(sigma, basis), [&] {
        return str(sigma) + " structure=" + (structural ? "yes" : "no");
      });
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return probe.result("structure_validator(" + std::string(to_string(tag)) + ")", range_n(1, hi));
}

CheckResult suffix_characterization(const Context& ctx) {
  const int hi = std::min(ctx.max_n, 7);
  const PatternBasis min_max("mm", {Permutation{2, 1, 3}, Permutation{2, 3, 1}});
  const PatternBasis top_two("tt", {Permutation{1, 2, 3}, Permutation{1, 3, 2}});
  Probe probe;
  for (int n = 1; n <= hi; ++n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    do {
      probe.expect(is_suffix_min_or_max(e) == avoids(std::span<const int>(e), min_max),
                   [&] { return "min/max " + str(Permutation(e)); });
      probe.expect(is_suffix_top_two(e) == avoids(std::span<const int>(e), top_two),
                   [&] { return "top-two " + str(Permutation(e)); });
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return probe.result("suffix_characterization", range_n(1, hi));
}

CheckResult generator_vs_filter(const Context& ctx) {
  const int hi = std::min(ctx.max_n, 7);
  Probe probe;
  for (const auto& basis : {PatternBasis::t1(), PatternBasis::t2(), PatternBasis::t1_union_t2()}) {
    for (int n = 1; n <= hi; ++n) {
      probe.expect(generate_class(n, basis) == filter_class(n, basis),
                   [&] { return basis.name() + " n=" + std::to_string(n); });
    }
  }
  return probe.result("generator_vs_filter", range_n(1, hi));
}

// ---------------------------------------------------------------------------
// Counting

CheckResult class_count_check(const Context& ctx, ClassTag tag) {
  Probe probe;
  for (int n = 1; n <= ctx.max_n; ++n) {
    const mpz_class got = ctx.members(tag, n).size();
    const mpz_class want = binomial(2L * n - 2, n - 1);
    probe.expect(got == want, [&] {
      return "n=" + std::to_string(n) + " got " + got.get_str() + " want " + want.get_str();
    });
  }
  return probe.result("class_count(" + std::string(to_string(tag)) + ")", range_n(1, ctx.max_n));
}

CheckResult union_count(const Context& ctx) {
  Probe probe;
  const auto basis = PatternBasis::t1_union_t2();
  std::string note;
  for (int n = 2; n <= ctx.max_n; ++n) {
    mpz_class total = 0;
    mpz_class connected = 0;
    for_each_in_class(n, basis, [&](const Permutation& s) {
      ++total;
      if (is_connected(s)) ++connected;
    });
    const mpz_class want = n * pow2(n - 2);
    probe.expect(total == want, [&] {
      return "n=" + std::to_string(n) + " got " + total.get_str() + " want " + want.get_str();
    });
    probe.expect(connected == pow2(n - 1) - 1, [&] {
      return "connected n=" + std::to_string(n) + " got " + connected.get_str();
    });
    if (n == 5) note = "; n=5 count " + total.get_str();
  }
  auto r = probe.result("union_count", range_n(2, ctx.max_n));
  if (r.passed) r.detail += note;
  return r;
}

CheckResult connected_count(const Context& ctx) {
  Probe probe;
  for (int n = 2; n <= ctx.max_n; ++n) {
    const mpz_class want = binomial(2L * n - 3, n - 2);
    for (ClassTag tag : {ClassTag::T1, ClassTag::T2}) {
      const auto& m = ctx.members(tag, n);
      const mpz_class connected = std::count_if(m.begin(), m.end(), [](const Permutation& s) { return is_connected(s); });
      const mpz_class others = mpz_class(m.size()) - connected;
      probe.expect(connected == want && others == want, [&] {
        return std::string(to_string(tag)) + " n=" + std::to_string(n) + " connected " + connected.get_str() +
               " non-connected " + others.get_str() + " want " + want.get_str();
      });
    }
  }
  return probe.result("connected_count", range_n(2, ctx.max_n));
}

// ---------------------------------------------------------------------------
// The bijection

CheckResult round_trip(const Context& ctx, ClassTag tag) {
  Probe probe;
  for (int n = 1; n <= ctx.max_n; ++n) {
    for (const auto& sigma : ctx.members(tag, n)) {
      const auto path = phi_unchecked(sigma);
      const auto back = phi_inverse(path, tag);
      probe.expect(back == sigma, [&] { return str(sigma) + " -> " + str(path) + " -> " + str(back); });
    }
  }
  return probe.result("round_trip(" + std::string(to_string(tag)) + ")", range_n(1, ctx.max_n));
}

CheckResult inverse_surjective(const Context& ctx, ClassTag tag) {
  const int hi = 2 * ctx.max_n - 2;
  const auto basis = basis_of(tag);
  Probe probe;
  for (int len = 0; len <= hi; len += 2) {
    for_each_prefix(len, [&](const LatticePath& p) {
      std::string error;
      bool ok = false;
      Permutation sigma;
      try {
        sigma = phi_inverse(p, tag);
        const bool valid = tag == ClassTag::T1 ? validate_t1_structure(sigma) : validate_t2_structure(sigma);
        ok = valid && avoids(sigma, basis) && static_cast<int>(sigma.size()) == len / 2 + 1 &&
             phi_unchecked(sigma) == p;
      } catch (const std::exception& e) {
        error = e.what();
      }
      probe.expect(ok, [&] { return str(p) + (error.empty() ? " -> " + str(sigma) : " threw: " + error); });
    });
  }
  return probe.result("inverse_surjective(" + std::string(to_string(tag)) + ")", range_len(0, hi));
}

CheckResult dyck_iff_max_ending(const Context& ctx) {
  Probe probe;
  for (ClassTag tag : {ClassTag::T1, ClassTag::T2}) {
    for (int n = 1; n <= ctx.max_n; ++n) {
      for (const auto& sigma : ctx.members(tag, n)) {
        const bool dyck = phi_unchecked(sigma).final_height() == 0;
        probe.expect(dyck == ends_with_max(sigma), [&] { return str(sigma); });
      }
    }
  }
  return probe.result("dyck_iff_max_ending", range_n(1, ctx.max_n));
}

CheckResult last_return_vs_juxtaposition(const Context& ctx) {
  Probe probe;
  for (ClassTag tag : {ClassTag::T1, ClassTag::T2}) {
    for (int n = 1; n <= ctx.max_n; ++n) {
      for (const auto& sigma : ctx.members(tag, n)) {
        const auto path = phi_unchecked(sigma);
        const auto lr = last_return_split(path);
        const auto split = juxtaposition_split(sigma, tag);
        bool ok = split.has_value() == !lr.dyck_part.empty();
        if (ok && split) {
          ok = lr.dyck_part.length() == 2 * (static_cast<int>(split->tau.size()) - 1) &&
               phi_unchecked(split->tau) == lr.dyck_part && phi_unchecked(split->rho) == lr.floating_part;
        }
        probe.expect(ok, [&] { return std::string(to_string(tag)) + " " + str(sigma); });
      }
    }
  }
  return probe.result("last_return_vs_juxtaposition", range_n(1, ctx.max_n));
}

CheckResult split_lmax_pos(const Context& ctx) {
  Probe probe;
  for (int n = 1; n <= ctx.max_n; ++n) {
    for (const auto& sigma : ctx.members(ClassTag::T1, n)) {
      const auto split = juxtaposition_split(sigma, ClassTag::T1);
      if (!split) continue;
      const auto& [tau, rho] = *split;
      const bool ok = left_to_right_maxima(sigma) == left_to_right_maxima(tau) + left_to_right_maxima(rho) - 1 &&
                      position_of_max(sigma) == static_cast<int>(tau.size()) + position_of_max(rho) - 1;
      probe.expect(ok, [&] { return str(sigma); });
    }
  }
  return probe.result("split_lmax_pos", range_n(1, ctx.max_n));
}

CheckResult split_asc(const Context& ctx) {
  Probe probe;
  for (int n = 1; n <= ctx.max_n; ++n) {
    for (const auto& sigma : ctx.members(ClassTag::T1, n)) {
      const auto split = juxtaposition_split(sigma, ClassTag::T1);
      if (!split) continue;
      probe.expect(ascents(sigma) == ascents(split->tau) + ascents(split->rho), [&] { return str(sigma); });
    }
  }
  return probe.result("split_asc", range_n(1, ctx.max_n));
}

CheckResult ascents_from_cut_features(const Context& ctx) {
  Probe probe;
  for (int n = 1; n <= ctx.max_n; ++n) {
    for (const auto& sigma : ctx.members(ClassTag::T1, n)) {
      const auto path = phi_unchecked(sigma);
      const auto f = features(path, n - 1);
      const int predicted = f.valleys_before_cut + f.triple_descents_before_cut + f.downs_after_cut;
      probe.expect(predicted == ascents(sigma), [&] {
        return str(sigma) + " asc=" + std::to_string(ascents(sigma)) + " features=" + std::to_string(predicted);
      });
    }
  }
  return probe.result("ascents_from_cut_features(t1)", range_n(1, ctx.max_n));
}

CheckResult ascents_equal_peaks(const Context& ctx) {
  Probe probe;
  for (int n = 1; n <= ctx.max_n; ++n) {
    for (const auto& sigma : ctx.members(ClassTag::T2, n)) {
      const int peaks = features(phi_unchecked(sigma)).peaks;
      probe.expect(peaks == ascents(sigma), [&] { return str(sigma); });
    }
  }
  return probe.result("ascents_equal_peaks(t2)", range_n(1, ctx.max_n));
}

CheckResult endpoint_height_census(const Context& ctx) {
  Probe probe;
  for (ClassTag tag : {ClassTag::T1, ClassTag::T2}) {
    for (int n = 2; n <= ctx.max_n; ++n) {
      std::map<int, mpz_class> by_height;
      for (const auto& sigma : ctx.members(tag, n)) ++by_height[phi_unchecked(sigma).final_height()];
      for (int h = 0; h <= n - 1; ++h) {
        const mpz_class got = by_height.contains(2 * h) ? by_height[2 * h] : mpz_class(0);
        const mpz_class want = count_prefixes_by_height(n, h);
        probe.expect(got == want, [&] {
          return std::string(to_string(tag)) + " n=" + std::to_string(n) + " height " + std::to_string(2 * h) +
                 " got " + got.get_str() + " want " + want.get_str();
        });
      }
    }
  }
  return probe.result("endpoint_height_census", range_n(2, ctx.max_n));
}

CheckResult endpoint_height_lds(const Context& ctx) {
  Probe probe;
  for (int n = 1; n <= ctx.max_n; ++n) {
    for (const auto& sigma : ctx.members(ClassTag::T1, n)) {
      if (ends_with_max(sigma)) continue;
      const int h = phi_unchecked(sigma).final_height();
      probe.expect(h == 2 * longest_decreasing_length(sigma) - 2, [&] { return str(sigma); });
    }
  }
  return probe.result("endpoint_height_lds", range_n(1, ctx.max_n));
}

CheckResult long_decreasing_count(const Context& ctx) {
  Probe probe;
  for (int k = 2; k <= 6; ++k) {
    const auto basis = PatternBasis::t1().with(PatternBasis::decreasing(k), "t1+dec");
    for (int n = 1; n <= ctx.max_n; ++n) {
      const mpz_class got = class_count(n, basis);
      const mpz_class want = count_avoiding_long_decreasing(n, k);
      probe.expect(got == want, [&] {
        return "k=" + std::to_string(k) + " n=" + std::to_string(n) + " census " + got.get_str() + " formula " +
               want.get_str();
      });
    }
  }
  auto r = probe.result("long_decreasing_count", range_n(1, ctx.max_n) + ", k=2..6");
  if (r.passed) r.detail += "; binomial closed form for k>=3, count 1 for k=2";
  return r;
}

CheckResult equidistribution(const Context& ctx, const std::vector<Statistic>& stats) {
  Probe probe;
  for (int n = 1; n <= ctx.max_n; ++n) {
    const Table a = tabulate(ctx.members(ClassTag::T1, n), stats);
    const Table b = tabulate(ctx.members(ClassTag::T2, n), stats);
    probe.expect(a == b, [&] { return "n=" + std::to_string(n) + " t1 " + str(a) + " t2 " + str(b); });
  }
  std::string name = "equidistribution(";
  for (std::size_t i = 0; i < stats.size(); ++i) name += (i ? "," : "") + std::string(to_string(stats[i]));
  return probe.result(name + ")", range_n(1, ctx.max_n));
}

CheckResult path_side_statistics(const Context& ctx) {
  Probe probe;
  for (int n = 2; n <= ctx.max_n; ++n) {
    for_each_prefix(2 * n - 2, [&](const LatticePath& p) {
      int q = 0;
      while (q < p.length() && p[q + 1] == Step::Up) ++q;
      const int head = q >= n ? n : q;
      const auto f = features(p, n - 1);
      for (ClassTag tag : {ClassTag::T1, ClassTag::T2}) {
        const auto sigma = phi_inverse(p, tag);
        const bool ok = sigma(1) == head && position_of_max(sigma) == f.downs_before_cut + 1 &&
                        left_to_right_maxima(sigma) == f.peaks_before_cut + 1;
        probe.expect(ok, [&] { return std::string(to_string(tag)) + " " + str(p) + " -> " + str(sigma); });
      }
    });
  }
  return probe.result("path_side_statistics", range_n(2, ctx.max_n));
}

CheckResult max_ending_fiber(const Context& ctx) {
  Probe probe;
  const std::pair<ClassTag, Permutation> cases[] = {{ClassTag::T1, Permutation{3, 2, 1}},
                                                    {ClassTag::T2, Permutation{3, 1, 2}}};
  for (const auto& [tag, pattern] : cases) {
    const PatternBasis small("single", {pattern});
    for (int n = 2; n <= ctx.max_n; ++n) {
      std::set<Permutation> images;
      long fiber = 0;
      for (const auto& sigma : ctx.members(tag, n)) {
        if (!ends_with_max(sigma)) continue;
        ++fiber;
        images.insert(psi_delete_last(sigma));
      }
      const auto target = generate_class(n - 1, small);
      const bool ok = mpz_class(fiber) == catalan(n - 1) && images.size() == static_cast<std::size_t>(fiber) &&
                      std::equal(images.begin(), images.end(), target.begin(), target.end());
      probe.expect(ok, [&] {
        return std::string(to_string(tag)) + " n=" + std::to_string(n) + " fiber " + std::to_string(fiber);
      });
    }
  }
  return probe.result("max_ending_fiber", range_n(2, ctx.max_n));
}

// ---------------------------------------------------------------------------
// Paths only

CheckResult prefix_counts(const Context& ctx) {
  const int hi = 2 * ctx.max_n - 2;
  Probe probe;
  for (int m = 0; 2 * m <= hi; ++m) {
    std::map<int, mpz_class> by_height;
    mpz_class total = 0;
    for_each_prefix(2 * m, [&](const LatticePath& p) {
      ++total;
      ++by_height[p.final_height()];
    });
    probe.expect(total == binomial(2L * m, m), [&] { return "length " + std::to_string(2 * m); });
    if (m == 0) continue;
    for (int h = 0; h <= m; ++h) {
      const mpz_class want = count_prefixes_by_height(m + 1, h);
      probe.expect(by_height[2 * h] == want, [&] {
        return "length " + std::to_string(2 * m) + " height " + std::to_string(2 * h) + " got " +
               by_height[2 * h].get_str() + " want " + want.get_str();
      });
    }
  }
  return probe.result("prefix_counts", range_len(0, hi));
}

CheckResult last_return_round_trip(const Context& ctx) {
  const int hi = 2 * ctx.max_n - 4;
  Probe probe;
  for (int len = 0; len <= hi; ++len) {
    for_each_prefix(len, [&](const LatticePath& p) {
      const auto [dyck, floating] = last_return_split(p);
      const bool ok = dyck.concat(floating) == p && classify(dyck) == PathKind::DyckPath &&
                      (floating.empty() || classify(floating) == PathKind::Floating);
      probe.expect(ok, [&] { return str(p); });
    });
  }
  return probe.result("last_return_round_trip", range_len(0, hi));
}

CheckResult peak_preserving_swap(const Context& ctx) {
  const int hi = 2 * ctx.max_n - 6;
  Probe probe;
  for (int len = 1; len <= hi; ++len) {
    std::set<LatticePath> images;
    std::set<LatticePath> ending_in_up;
    for_each_prefix(len, [&](const LatticePath& p) {
      if (p[len] == Step::Up) ending_in_up.insert(p);
      if (classify(p) != PathKind::Floating) return;
      const auto steps = p.steps();
      std::vector<Step> swapped(steps.begin() + 1, steps.end());
      swapped.push_back(Step::Up);
      const LatticePath image(swapped);
      probe.expect(features(image).peaks == features(p).peaks, [&] { return str(p); });
      images.insert(image);
    });
    probe.expect(images == ending_in_up, [&] { return "not a bijection at length " + std::to_string(len); });
  }
  return probe.result("peak_preserving_swap", range_len(1, hi));
}

CheckResult appenders(const Context& ctx) {
  const int hi = 2 * ctx.max_n - 6;
  Probe probe;
  for (int len = 0; len <= hi; len += 2) {
    for_each_prefix(len, [&](const LatticePath& p) {
      const auto sigma = phi1_inverse(p);
      std::vector<Step> up{Step::Up};
      up.insert(up.end(), p.steps().begin(), p.steps().end());
      auto down = up;
      up.push_back(Step::Up);
      down.push_back(Step::Down);
      const auto su = phi1_inverse(LatticePath(up));
      const bool same_u = position_of_max(su) == position_of_max(sigma) &&
                          left_to_right_maxima(su) == left_to_right_maxima(sigma);
      if (classify(p) == PathKind::Floating) {
        const auto sd = phi1_inverse(LatticePath(down));
        const bool ok = same_u && position_of_max(sd) == position_of_max(sigma) &&
                        left_to_right_maxima(sd) == left_to_right_maxima(sigma) &&
                        ascents(su) == ascents(sigma) && ascents(sd) == ascents(sigma) + 1;
        probe.expect(ok, [&] { return str(p) + " sigma_U " + str(su) + " sigma_D " + str(sd); });
      } else {
        probe.expect(same_u, [&] { return str(p) + " sigma_U " + str(su); });
      }
    });
  }
  return probe.result("appenders", range_len(0, hi));
}

CheckResult krattenthaler(const Context& ctx) {
  const int hi = ctx.max_n - 1;
  const PatternBasis avoid321("321", {Permutation{3, 2, 1}});
  Probe probe;
  for (int n = 1; n <= hi; ++n) {
    std::set<LatticePath> seen;
    for_each_in_class(n, avoid321, [&](const Permutation& sigma) {
      const auto k = krattenthaler_extend(sigma);
      const bool fresh = seen.insert(k).second;
      probe.expect(fresh && k.length() == 2 * n && classify(k) == PathKind::DyckPath,
                   [&] { return str(sigma) + " -> " + str(k); });
    });
  }
  return probe.result("krattenthaler_extend", range_n(1, hi));
}

// ---------------------------------------------------------------------------
// Head recurrence

CheckResult head_table_check(const Context& ctx) {
  Probe probe;
  const auto h = head_table(ctx.max_n);
  auto at = [&](int n, int k) -> mpz_class {
    if (k < 1 || k > n) return 0;
    return h[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  };
  for (int n = 1; n <= ctx.max_n; ++n) {
    const Table census = tabulate(ctx.members(ClassTag::T1, n), {Statistic::Head});
    for (int k = 1; k <= n; ++k) {
      const auto it = census.find({k});
      const mpz_class got = it == census.end() ? mpz_class(0) : it->second;
      probe.expect(at(n, k) == got, [&] {
        return "h(" + std::to_string(n) + "," + std::to_string(k) + ") table " + at(n, k).get_str() + " census " +
               got.get_str();
      });
      if (n >= 2 && k < n) {
        mpz_class sum = 0;
        for (int j = k - 1; j <= n - 1; ++j) sum += at(n - 1, j);
        probe.expect(sum == at(n, k), [&] { return "summation form at (" + std::to_string(n) + "," + std::to_string(k) + ")"; });
      }
    }
    if (n >= 2) {
      probe.expect(at(n, 1) == binomial(2L * n - 4, n - 2), [&] { return "h(n,1) at n=" + std::to_string(n); });
      probe.expect(at(n, n) == pow2(n - 2), [&] { return "h(n,n) at n=" + std::to_string(n); });
    }
    if (n >= 3) probe.expect(at(n, n - 1) == pow2(n - 2), [&] { return "h(n,n-1) at n=" + std::to_string(n); });
  }
  return probe.result("head_table", range_n(1, ctx.max_n));
}

// ---------------------------------------------------------------------------
// Series

// Compares the x^n slice of `s` with a table keyed by the remaining exponents.
void compare_slice(Probe& probe, const std::string& label, const TruncatedSeries& s, int n, const Table& want) {
  const int vars = s.num_vars();
  std::vector<int> rest(static_cast<std::size_t>(vars - 1), 0);
  std::function<void(int)> walk = [&](int i) {
    if (i == vars - 1) {
      std::vector<int> exps{n};
      exps.insert(exps.end(), rest.begin(), rest.end());
      const auto it = want.find(rest);
      const mpq_class expected = it == want.end() ? mpq_class(0) : mpq_class(it->second);
      const mpq_class& got = s.coefficient(exps);
      probe.expect(got == expected, [&] {
        std::string e;
        for (int v : exps) e += std::to_string(v) + " ";
        return label + " coefficient at [" + e + "] is " + got.get_str() + ", census " + expected.get_str();
      });
      return;
    }
    for (int v = 0; v <= s.caps()[static_cast<std::size_t>(i + 1)]; ++v) {
      rest[static_cast<std::size_t>(i)] = v;
      walk(i + 1);
    }
  };
  walk(0);
}

CheckResult series_vs_permutations(const Context& ctx, gf::SeriesName name, const std::vector<Statistic>& stats,
                                   const std::function<bool(const Permutation&)>& keep, ClassTag tag) {
  Probe probe;
  const auto s = gf::build(name, ctx.trunc);
  for (int n = 1; n <= ctx.max_n; ++n) {
    compare_slice(probe, std::string(gf::to_string(name)), s, n, tabulate(ctx.members(tag, n), stats, keep));
  }
  return probe.result("series_vs_census(" + std::string(gf::to_string(name)) + ")", range_n(1, ctx.max_n));
}

CheckResult series_vs_paths(const Context& ctx, gf::SeriesName name) {
  Probe probe;
  const auto s = gf::build(name, ctx.trunc);
  const int hi = name == gf::SeriesName::S ? ctx.max_n - 1 : ctx.max_n;
  for (int m = 0; m <= hi; ++m) {
    Table t;
    for_each_prefix(2 * m, [&](const LatticePath& p) {
      const auto f = features(p);
      switch (name) {
        case gf::SeriesName::S:
          ++t[{f.peaks}];
          break;
        case gf::SeriesName::Narayana:
          if (f.endpoint_height == 0) ++t[{f.peaks}];
          break;
        default:  // A
          if (f.endpoint_height == 0) ++t[{f.valleys, f.triple_descents}];
          break;
      }
    });
    compare_slice(probe, std::string(gf::to_string(name)), s, m, t);
  }
  const std::string what = name == gf::SeriesName::S ? "prefix " : "semi";
  return probe.result("series_vs_census(" + std::string(gf::to_string(name)) + ")",
                      what + range_len(0, name == gf::SeriesName::S ? 2 * hi : hi));
}

CheckResult identity(const Context& ctx, const std::string& name,
                     const std::function<TruncatedSeries(int)>& lhs,
                     const std::function<TruncatedSeries(int)>& rhs) {
  Probe probe;
  const auto a = lhs(ctx.trunc);
  const auto b = rhs(ctx.trunc);
  probe.expect(a == b, [&] {
    const auto diff = a - b;
    std::string where;
    diff.for_each_nonzero([&](const TruncatedSeries::Exponents& e, const mpq_class&) {
      if (!where.empty()) return;
      for (int v : e) where += std::to_string(v) + " ";
    });
    return "first difference at [" + where + "]";
  });
  return probe.result("identity(" + name + ")", "x-degree<=" + std::to_string(ctx.trunc));
}

CheckResult series_integrality(const Context& ctx) {
  Probe probe;
  for (auto name : gf::all_series()) {
    probe.expect(gf::build(name, ctx.trunc).all_nonnegative_integers(),
                 [&] { return std::string(gf::to_string(name)); });
  }
  return probe.result("series_integrality", "x-degree<=" + std::to_string(ctx.trunc));
}

CheckResult ascent_non_equidistribution(const Context& ctx, std::optional<int>& first) {
  for (int n = 1; n <= ctx.max_n; ++n) {
    const Table a = tabulate(ctx.members(ClassTag::T1, n), {Statistic::Asc});
    const Table b = tabulate(ctx.members(ClassTag::T2, n), {Statistic::Asc});
    if (a != b) {
      first = n;
      return {"ascent_non_equidistribution", range_n(1, ctx.max_n), true,
              "smallest n = " + std::to_string(n) + ": t1 " + str(a) + " t2 " + str(b)};
    }
  }
  return {"ascent_non_equidistribution", range_n(1, ctx.max_n), false,
          "asc tables agree for every n <= " + std::to_string(ctx.max_n)};
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.range << "] " << c.detail << '\n';
  }
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; });
  out << checks.size() - static_cast<std::size_t>(failed) << '/' << checks.size() << " checks passed (max_n="
      << max_n << ", truncation=" << truncation << ")\n";
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["max_n"] = max_n;
  j["truncation"] = truncation;
  j["passed"] = all_passed();
  j["first_ascent_difference"] = first_ascent_difference ? nlohmann::ordered_json(*first_ascent_difference) : nullptr;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"range", c.range}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return j.dump(2);
}

VerifyReport verify_suite(int max_n, int truncation) {
  if (max_n < 4) throw std::invalid_argument("verify_suite: max_n must be at least 4");
  Context ctx;
  ctx.max_n = max_n;
  ctx.trunc = std::max(truncation, max_n);
  ctx.t1.resize(static_cast<std::size_t>(max_n) + 1);
  ctx.t2.resize(static_cast<std::size_t>(max_n) + 1);
  {
    std::vector<std::future<void>> jobs;
    for (int n = 1; n <= max_n; ++n) {
      jobs.push_back(std::async(std::launch::async, [&ctx, n] {
        ctx.t1[static_cast<std::size_t>(n)] = generate_class(n, PatternBasis::t1());
        ctx.t2[static_cast<std::size_t>(n)] = generate_class(n, PatternBasis::t2());
      }));
    }
    for (auto& j : jobs) j.get();
  }

  VerifyReport report;
  report.max_n = max_n;
  report.truncation = ctx.trunc;
  const Context& c = ctx;
  using gf::SeriesName;
  auto all = [](const Permutation&) { return true; };
  auto max_ending = [](const Permutation& s) { return ends_with_max(s); };
  auto connected = [](const Permutation& s) { return is_connected(s); };
  const std::vector<Statistic> pos_lmax{Statistic::PosMax, Statistic::Lmax};
  const std::vector<Statistic> asc{Statistic::Asc};

  std::vector<std::function<CheckResult()>> checks = {
      [&] { return structure_validator(c, ClassTag::T1); },
      [&] { return structure_validator(c, ClassTag::T2); },
      [&] { return suffix_characterization(c); },
      [&] { return generator_vs_filter(c); },
      [&] { return class_count_check(c, ClassTag::T1); },
      [&] { return class_count_check(c, ClassTag::T2); },
      [&] { return union_count(c); },
      [&] { return connected_count(c); },
      [&] { return round_trip(c, ClassTag::T1); },
      [&] { return round_trip(c, ClassTag::T2); },
      [&] { return inverse_surjective(c, ClassTag::T1); },
      [&] { return inverse_surjective(c, ClassTag::T2); },
      [&] { return dyck_iff_max_ending(c); },
      [&] { return last_return_vs_juxtaposition(c); },
      [&] { return split_lmax_pos(c); },
      [&] { return split_asc(c); },
      [&] { return ascents_from_cut_features(c); },
      [&] { return ascents_equal_peaks(c); },
      [&] { return endpoint_height_census(c); },
      [&] { return endpoint_height_lds(c); },
      [&] { return long_decreasing_count(c); },
      [&] { return equidistribution(c, {Statistic::Head}); },
      [&] { return equidistribution(c, pos_lmax); },
      [&] { return path_side_statistics(c); },
      [&] { return max_ending_fiber(c); },
      [&] { return prefix_counts(c); },
      [&] { return last_return_round_trip(c); },
      [&] { return peak_preserving_swap(c); },
      [&] { return appenders(c); },
      [&] { return krattenthaler(c); },
      [&] { return head_table_check(c); },
      [&] { return series_vs_paths(c, SeriesName::Narayana); },
      [&] { return series_vs_permutations(c, SeriesName::B, pos_lmax, max_ending, ClassTag::T1); },
      [&] { return series_vs_permutations(c, SeriesName::C, pos_lmax, connected, ClassTag::T1); },
      [&] { return series_vs_permutations(c, SeriesName::J, pos_lmax, all, ClassTag::T1); },
      [&] { return series_vs_permutations(c, SeriesName::H, {Statistic::Head}, all, ClassTag::T1); },
      [&] { return series_vs_permutations(c, SeriesName::E, asc, max_ending, ClassTag::T1); },
      [&] { return series_vs_permutations(c, SeriesName::V, asc, connected, ClassTag::T1); },
      [&] { return series_vs_permutations(c, SeriesName::F, asc, all, ClassTag::T1); },
      [&] { return series_vs_permutations(c, SeriesName::M, asc, all, ClassTag::T2); },
      [&] { return series_vs_paths(c, SeriesName::S); },
      [&] { return series_vs_paths(c, SeriesName::A); },
      [&] { return identity(c, "B", gf::b_closed_form, gf::b_from_narayana); },
      [&] { return identity(c, "J", gf::j_from_b, gf::j_from_b_and_c); },
      [&] { return identity(c, "H", gf::h_from_g, gf::h_closed_form); },
      [&] { return identity(c, "E", gf::e_closed_form, gf::e_from_a); },
      [&] { return identity(c, "F", gf::f_from_e, gf::f_from_e_and_v); },
      [&] { return identity(c, "S", gf::s_closed_form, gf::s_from_n_and_r); },
      [&] { return series_integrality(c); },
      [&] { return ascent_non_equidistribution(c, report.first_ascent_difference); },
  };

  std::vector<std::future<CheckResult>> running;
  running.reserve(checks.size());
  for (auto& check : checks) running.push_back(std::async(std::launch::async, check));
  for (auto& r : running) report.checks.push_back(r.get());
  return report;
}

}  // namespace cbperm
