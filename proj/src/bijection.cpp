#include "cbperm/bijection.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbperm {

namespace {

struct Run {
  int ups = 0;
  int downs = 0;
};

// P = U^{h_1} D^{s_1} ... U^{h_r} D^{s_r}, with s_r = 0 allowed.
std::vector<Run> run_decomposition(const LatticePath& path) {
  std::vector<Run> runs;
  for (Step s : path.steps()) {
    if (s == Step::Up) {
      if (runs.empty() || runs.back().downs > 0) runs.push_back({});
      ++runs.back().ups;
    } else {
      runs.back().downs++;
    }
  }
  return runs;
}

// Partial permutation under construction; positions and symbols 1-based.
class Filling {
 public:
  explicit Filling(int size)
      : value_(static_cast<std::size_t>(size) + 1, 0),
        used_(static_cast<std::size_t>(size) + 1, 0) {}

  int size() const { return static_cast<int>(value_.size()) - 1; }
  bool assigned(int pos) const { return value_[static_cast<std::size_t>(pos)] != 0; }
  int at(int pos) const { return value_[static_cast<std::size_t>(pos)]; }

  void assign(int pos, int symbol) {
    assert(!assigned(pos) && !used_[static_cast<std::size_t>(symbol)]);
    value_[static_cast<std::size_t>(pos)] = symbol;
    used_[static_cast<std::size_t>(symbol)] = 1;
  }

  int smallest_unused() const {
    for (int v = 1; v <= size(); ++v) {
      if (!used_[static_cast<std::size_t>(v)]) return v;
    }
    throw std::logic_error("no unused symbol left");
  }

  // The rank-th greatest unused symbol below `bound` (rank 1 = greatest).
  int greatest_unused_below(int bound, int rank = 1) const {
    for (int v = bound - 1; v >= 1; --v) {
      if (!used_[static_cast<std::size_t>(v)] && --rank == 0) return v;
    }
    throw std::logic_error("not enough unused symbols below " + std::to_string(bound));
  }

  Permutation finish() const {
    return Permutation(std::vector<int>(value_.begin() + 1, value_.end()));
  }

 private:
  std::vector<int> value_;
  std::vector<char> used_;
};

enum class GapRule { SmallestAscending, GreatestBelowPrecedingMax };

void fill_gaps(Filling& f, int before, GapRule rule) {
  int preceding_max = 0;
  for (int pos = 1; pos < before; ++pos) {
    if (f.assigned(pos)) {
      preceding_max = std::max(preceding_max, f.at(pos));
      continue;
    }
    if (rule == GapRule::SmallestAscending) {
      f.assign(pos, f.smallest_unused());
    } else {
      // Position 1 always carries a maximum, so a preceding one exists.
      assert(preceding_max > 0);
      f.assign(pos, f.greatest_unused_below(preceding_max));
    }
  }
}

Permutation invert(const LatticePath& path, ClassTag tag) {
  if (path.length() % 2 != 0) {
    throw std::invalid_argument("inverse map needs an even-length prefix, got length " +
                                std::to_string(path.length()));
  }
  const int n = path.length() / 2;
  if (n == 0) return Permutation{1};

  const auto runs = run_decomposition(path);
  const GapRule gaps =
      tag == ClassTag::T1 ? GapRule::SmallestAscending : GapRule::GreatestBelowPrecedingMax;
  Filling f(n + 1);

  if (path.final_height() == 0) {
    int pos = 1;
    int height = 0;
    for (const Run& r : runs) {
      height += r.ups;
      f.assign(pos, height);
      pos += r.downs;
    }
    f.assign(n + 1, n + 1);
    fill_gaps(f, n + 1, gaps);
    return f.finish();
  }

  // Locate the run t holding the cut step, the (n+1)-th up step.
  std::size_t t = 0;
  int ups_before = 0;
  int pos = 1;
  int steps_before_run = 0;
  while (ups_before + runs[t].ups < n + 1) {
    ups_before += runs[t].ups;
    f.assign(pos, ups_before);
    pos += runs[t].downs;
    steps_before_run += runs[t].ups + runs[t].downs;
    ++t;
  }
  const int i = pos;
  f.assign(i, n + 1);
  const int cut = steps_before_run + (n + 1 - ups_before);
  fill_gaps(f, i, gaps);

  // Q is everything after the cut step; it drives positions i+1 .. n.
  const int q_len = path.length() - cut;
  if (q_len != n - i) throw std::logic_error("inverse map: inconsistent tail length");
  for (int j = 1; j <= q_len; ++j) {
    const bool up = path[cut + j] == Step::Up;
    int symbol = 0;
    if (tag == ClassTag::T1) {
      symbol = up ? f.greatest_unused_below(n + 2) : f.smallest_unused();
    } else {
      symbol = f.greatest_unused_below(n + 2, up ? 1 : 2);
    }
    f.assign(i + j, symbol);
  }
  if (i < n + 1) f.assign(n + 1, f.smallest_unused());
  return f.finish();
}

}  // namespace

std::string_view to_string(ClassTag tag) { return tag == ClassTag::T1 ? "t1" : "t2"; }

ClassTag parse_class_tag(std::string_view text) {
  if (text == "t1" || text == "T1") return ClassTag::T1;
  if (text == "t2" || text == "T2") return ClassTag::T2;
  throw std::invalid_argument("unknown class \"" + std::string(text) + "\" (expected t1 or t2)");
}

PatternBasis basis_of(ClassTag tag) {
  return tag == ClassTag::T1 ? PatternBasis::t1() : PatternBasis::t2();
}

LatticePath phi_unchecked(const Permutation& sigma) {
  if (sigma.empty()) throw std::invalid_argument("phi: empty permutation");
  const auto d = ltr_decompose(sigma);
  std::vector<Step> steps;
  int previous_max = 0;
  for (int b = 0; b + 1 < d.k(); ++b) {
    const auto& block = d.blocks[static_cast<std::size_t>(b)];
    steps.insert(steps.end(), static_cast<std::size_t>(block.max - previous_max), Step::Up);
    steps.insert(steps.end(), block.tail.size() + 1, Step::Down);
    previous_max = block.max;
  }
  const auto& last = d.blocks.back();
  if (!last.tail.empty()) {
    steps.insert(steps.end(), static_cast<std::size_t>(last.max - previous_max), Step::Up);
    const auto& x = last.tail;
    // Q_j = U iff x_j is the maximum of x_j .. x_l; x_l itself is not read.
    std::vector<Step> q(x.size() - 1);
    int suffix_max = x.back();
    for (std::size_t j = x.size() - 1; j-- > 0;) {
      q[j] = x[j] > suffix_max ? Step::Up : Step::Down;
      suffix_max = std::max(suffix_max, x[j]);
    }
    steps.insert(steps.end(), q.begin(), q.end());
  }
  return LatticePath(std::move(steps));
}

LatticePath phi(const Permutation& sigma) {
  if (!avoids(sigma, PatternBasis::t1()) && !avoids(sigma, PatternBasis::t2())) {
    throw std::invalid_argument("phi: " + sigma.to_string() +
                                " belongs to neither Av(T1) nor Av(T2)");
  }
  return phi_unchecked(sigma);
}

Permutation phi1_inverse(const LatticePath& path) { return invert(path, ClassTag::T1); }
Permutation phi2_inverse(const LatticePath& path) { return invert(path, ClassTag::T2); }
Permutation phi_inverse(const LatticePath& path, ClassTag tag) { return invert(path, tag); }

Permutation psi_delete_last(const Permutation& sigma) {
  const int n = sigma.size();
  if (n == 0 || sigma(n) != n) {
    throw std::invalid_argument("psi: " + sigma.to_string() + " does not end with its maximum");
  }
  const auto e = sigma.entries();
  return Permutation(std::vector<int>(e.begin(), e.end() - 1));
}

std::optional<JuxtapositionSplit> juxtaposition_split(const Permutation& sigma, ClassTag tag) {
  if (sigma.empty() || !avoids(sigma, basis_of(tag))) {
    throw std::invalid_argument("juxtaposition_split: " + sigma.to_string() + " is not in Av(" +
                                std::string(to_string(tag)) + ")");
  }
  const int n = sigma.size();
  int split = 0;
  int running_max = 0;
  for (int l = 1; l < n; ++l) {
    running_max = std::max(running_max, sigma(l));
    if (running_max == l) split = l;
  }
  if (split == 0) return std::nullopt;
  const auto e = sigma.entries();
  std::vector<int> head(e.begin(), e.begin() + split);
  head.push_back(split + 1);
  return JuxtapositionSplit{Permutation(std::move(head)),
                            renormalize(e.subspan(static_cast<std::size_t>(split)))};
}

LatticePath krattenthaler_extend(const Permutation& sigma) {
  if (sigma.empty() || contains_pattern(sigma, Permutation{3, 2, 1})) {
    throw std::invalid_argument("krattenthaler_extend: " + sigma.to_string() +
                                " does not avoid 321");
  }
  const LatticePath p = phi_unchecked(sigma);
  const int h = p.final_height();
  if (h == 0) return p.concat(LatticePath::parse("UD"));
  if (h == 2) {
    std::vector<Step> s(p.steps().begin(), p.steps().end());
    s.push_back(Step::Down);
    s.push_back(Step::Down);
    return LatticePath(std::move(s));
  }
  throw std::logic_error("krattenthaler_extend: 321-avoider mapped to height " +
                         std::to_string(h));
}

}  // namespace cbperm
