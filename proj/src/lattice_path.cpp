#include "cbperm/lattice_path.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "cbperm/binomial.hpp"

namespace cbperm {

namespace {

void check_prefix_property(const std::vector<Step>& steps) {
  int height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height += steps[i] == Step::Up ? 1 : -1;
    if (height < 0) {
      throw PathParseError("path goes below the axis at step " + std::to_string(i + 1),
                           static_cast<int>(i + 1));
    }
  }
}

}  // namespace

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
  check_prefix_property(steps_);
}

LatticePath LatticePath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U':
      case 'u':
        steps.push_back(Step::Up);
        break;
      case 'D':
      case 'd':
        steps.push_back(Step::Down);
        break;
      default:
        throw PathParseError(std::string("illegal character '") + text[i] + "' at step " +
                                 std::to_string(i + 1),
                             static_cast<int>(i + 1));
    }
  }
  return LatticePath(std::move(steps));
}

int LatticePath::up_count() const {
  return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::Up));
}

LatticePath LatticePath::concat(const LatticePath& tail) const {
  std::vector<Step> s = steps_;
  s.insert(s.end(), tail.steps_.begin(), tail.steps_.end());
  return LatticePath(std::move(s));
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += static_cast<char>(s);
  return out;
}

std::ostream& operator<<(std::ostream& os, const LatticePath& p) {
  return os << p.to_string();
}

std::string_view to_string(PathKind kind) {
  switch (kind) {
    case PathKind::DyckPath:
      return "dyck_path";
    case PathKind::Floating:
      return "floating";
    case PathKind::Neither:
      return "neither";
  }
  return "neither";
}

int returns(const LatticePath& path) {
  int height = 0;
  int count = 0;
  for (Step s : path.steps()) {
    height += s == Step::Up ? 1 : -1;
    count += s == Step::Down && height == 0;
  }
  return count;
}

PathKind classify(const LatticePath& path) {
  if (path.final_height() == 0) return PathKind::DyckPath;
  if (returns(path) == 0) return PathKind::Floating;
  return PathKind::Neither;
}

LastReturnSplit last_return_split(const LatticePath& path) {
  int height = 0;
  std::size_t split = 0;
  const auto steps = path.steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height += steps[i] == Step::Up ? 1 : -1;
    if (height == 0) split = i + 1;
  }
  return {LatticePath({steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(split)}),
          LatticePath({steps.begin() + static_cast<std::ptrdiff_t>(split), steps.end()})};
}

std::optional<int> cut_step_index(const LatticePath& path, int n) {
  if (path.length() != 2 * n) {
    throw std::invalid_argument("cut_step_index: path length " +
                                std::to_string(path.length()) + " is not 2n = " +
                                std::to_string(2 * n));
  }
  int ups = 0;
  for (int i = 1; i <= path.length(); ++i) {
    if (path[i] == Step::Up && ++ups == n + 1) return i;
  }
  return std::nullopt;
}

PathFeatures features(const LatticePath& path, std::optional<int> n) {
  PathFeatures f;
  const int m = path.length();
  for (int i = 1; i < m; ++i) {
    f.peaks += path[i] == Step::Up && path[i + 1] == Step::Down;
    f.valleys += path[i] == Step::Down && path[i + 1] == Step::Up;
  }
  for (int i = 1; i + 2 <= m; ++i) {
    f.triple_descents +=
        path[i] == Step::Down && path[i + 1] == Step::Down && path[i + 2] == Step::Down;
  }
  f.returns = returns(path);
  f.endpoint_height = path.final_height();

  if (!n) return f;
  f.has_cut_counts = true;
  f.cut_index = cut_step_index(path, *n);
  // Steps strictly before `limit` are "before the cut".
  const int limit = f.cut_index ? *f.cut_index : m + 1;
  for (int i = 1; i + 1 < limit; ++i) f.peaks_before_cut += path[i] == Step::Up && path[i + 1] == Step::Down;
  // A valley whose up step is the cut step itself still counts.
  for (int i = 1; i < limit && i < m; ++i) {
    f.valleys_before_cut += path[i] == Step::Down && path[i + 1] == Step::Up;
  }
  for (int i = 1; i + 2 < limit; ++i) {
    f.triple_descents_before_cut +=
        path[i] == Step::Down && path[i + 1] == Step::Down && path[i + 2] == Step::Down;
  }
  for (int i = 1; i < limit; ++i) f.downs_before_cut += path[i] == Step::Down;
  for (int i = limit + 1; i <= m; ++i) f.downs_after_cut += path[i] == Step::Down;
  if (!f.cut_index && m > 0) ++f.valleys_before_cut;
  return f;
}

void for_each_prefix(int length, const std::function<void(const LatticePath&)>& visit) {
  if (length < 0) throw std::invalid_argument("for_each_prefix: negative length");
  std::vector<Step> steps(static_cast<std::size_t>(length));
  // Depth-first, trying D before U.
  auto rec = [&](auto&& self, int pos, int height) -> void {
    if (pos == length) {
      visit(LatticePath(steps));
      return;
    }
    if (height > 0) {
      steps[static_cast<std::size_t>(pos)] = Step::Down;
      self(self, pos + 1, height - 1);
    }
    steps[static_cast<std::size_t>(pos)] = Step::Up;
    self(self, pos + 1, height + 1);
  };
  rec(rec, 0, 0);
}

std::vector<LatticePath> enumerate_prefixes(int length) {
  std::vector<LatticePath> out;
  for_each_prefix(length, [&](const LatticePath& p) { out.push_back(p); });
  return out;
}

mpz_class count_prefixes_by_height(int n, int h) {
  if (n < 2 || h < 0) throw std::invalid_argument("count_prefixes_by_height: need n >= 2, h >= 0");
  return binomial(2L * n - 3, n - 1L - h) - binomial(2L * n - 3, n - 3L - h);
}

std::string height_profile(const LatticePath& path) {
  std::string out;
  for (Step s : path.steps()) out += s == Step::Up ? '/' : '\\';
  return out;
}

}  // namespace cbperm
