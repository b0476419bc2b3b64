#include <doctest.h>

#include <set>

#include "cbperm/binomial.hpp"
#include "cbperm/lattice_path.hpp"

using namespace cbperm;

namespace {

// Oracle: all 2^m step words, kept when they never dip below zero.
std::set<std::string> brute_prefixes(int m) {
  std::set<std::string> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::string w;
    int h = 0;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      const bool up = mask >> i & 1u;
      w += up ? 'U' : 'D';
      h += up ? 1 : -1;
      ok = h >= 0;
    }
    if (ok) out.insert(w);
  }
  return out;
}

int count_factor(const std::string& w, const std::string& f) {
  int c = 0;
  for (std::size_t i = 0; i + f.size() <= w.size(); ++i) c += w.compare(i, f.size(), f) == 0;
  return c;
}

}  // namespace

TEST_CASE("parsing") {
  const auto p = LatticePath::parse("UUDUUDDDUUUDDUUD");
  CHECK(p.length() == 16);
  CHECK(LatticePath::parse("uudd") == LatticePath::parse("UUDD"));
  CHECK(LatticePath::parse("").empty());
  try {
    LatticePath::parse("UDD");
    FAIL("expected an error");
  } catch (const PathParseError& e) {
    CHECK(e.index() == 3);
  }
  CHECK_THROWS_AS(LatticePath::parse("UXD"), PathParseError);
  CHECK(p.up_count() == 9);
  CHECK(p.final_height() == 2);
  CHECK(p[1] == Step::Up);
  CHECK(p[3] == Step::Down);
}

TEST_CASE("classification and last return") {
  CHECK(classify(LatticePath::parse("UUDUUDDD")) == PathKind::DyckPath);
  CHECK(classify(LatticePath::parse("UUUDDUUD")) == PathKind::Floating);
  CHECK(classify(LatticePath::parse("UDUU")) == PathKind::Neither);
  CHECK(classify(LatticePath::parse("")) == PathKind::DyckPath);
  CHECK(to_string(PathKind::Floating) == "floating");

  const auto split = last_return_split(LatticePath::parse("UUDUUDDDUUUDDUUD"));
  CHECK(split.dyck_part.to_string() == "UUDUUDDD");
  CHECK(split.floating_part.to_string() == "UUUDDUUD");
  const auto dyck = LatticePath::parse("UDUUDD");
  CHECK(last_return_split(dyck).dyck_part == dyck);
  CHECK(last_return_split(dyck).floating_part.empty());
  const auto floating = LatticePath::parse("UUDU");
  CHECK(last_return_split(floating).dyck_part.empty());
  CHECK(returns(LatticePath::parse("UDUDUD")) == 3);
}

TEST_CASE("last return split reassembles every prefix up to length 12") {
  for (int m = 0; m <= 12; ++m) {
    for_each_prefix(m, [&](const LatticePath& p) {
      const auto [d, f] = last_return_split(p);
      CHECK(d.concat(f) == p);
      CHECK(classify(d) == PathKind::DyckPath);
      if (!f.empty()) CHECK(classify(f) == PathKind::Floating);
    });
  }
}

TEST_CASE("cut step") {
  CHECK(cut_step_index(LatticePath::parse("UUUDDUUD"), 4) == 7);
  CHECK_FALSE(cut_step_index(LatticePath::parse("UUDUUDDD"), 4).has_value());
  CHECK(cut_step_index(LatticePath::parse("UUUU"), 2) == 3);
  CHECK(cut_step_index(LatticePath::parse("UUDUUDDDUUUDDUUD"), 8) == 15);
  CHECK_THROWS(cut_step_index(LatticePath::parse("UU"), 2));
}

TEST_CASE("features") {
  const auto f = features(LatticePath::parse("UUDUUDDDUUUDDUUD"), 8);
  CHECK(f.peaks == 4);
  CHECK(f.valleys == 3);
  CHECK(f.triple_descents == 1);
  CHECK(f.cut_index == 15);
  CHECK(f.valleys_before_cut == 3);
  CHECK(f.triple_descents_before_cut == 1);
  CHECK(f.downs_after_cut == 1);
  CHECK(f.peaks_before_cut == 3);

  const auto g = features(LatticePath::parse("UDUDUD"), 3);
  CHECK(g.valleys == 2);
  CHECK(g.valleys_before_cut == 3);
  CHECK_FALSE(g.cut_index.has_value());

  const auto h = features(LatticePath::parse("UUUU"));
  CHECK(h.peaks == 0);
  CHECK(h.valleys == 0);
  CHECK(h.triple_descents == 0);
  CHECK_FALSE(h.has_cut_counts);

  // The valley finishing at the cut step counts as preceding it.
  const auto v = features(LatticePath::parse("UUDU"), 2);
  CHECK(v.cut_index == 4);
  CHECK(v.valleys_before_cut == 1);
}

TEST_CASE("factor counts match a string scan") {
  for (int m = 0; m <= 12; ++m) {
    for_each_prefix(m, [&](const LatticePath& p) {
      const auto w = p.to_string();
      const auto f = features(p);
      CHECK(f.peaks == count_factor(w, "UD"));
      CHECK(f.valleys == count_factor(w, "DU"));
      CHECK(f.triple_descents == count_factor(w, "DDD"));
    });
  }
}

TEST_CASE("prefix enumeration agrees with the brute-force oracle") {
  CHECK(enumerate_prefixes(2).size() == 2);
  CHECK(enumerate_prefixes(4).size() == 6);
  CHECK(enumerate_prefixes(6).size() == 20);
  for (int m = 0; m <= 14; ++m) {
    std::set<std::string> got;
    for (const auto& p : enumerate_prefixes(m)) got.insert(p.to_string());
    CHECK(got == brute_prefixes(m));
  }
  CHECK_THROWS(enumerate_prefixes(-1));
}

TEST_CASE("ballot counts") {
  CHECK(count_prefixes_by_height(4, 0) == 5);
  CHECK(count_prefixes_by_height(4, 1) == 9);
  CHECK(count_prefixes_by_height(4, 3) == 1);
  for (int n = 2; n <= 8; ++n) {
    mpz_class total = 0;
    for (int h = 0; h <= n - 1; ++h) {
      mpz_class brute = 0;
      for_each_prefix(2 * n - 2, [&](const LatticePath& p) { brute += p.final_height() == 2 * h; });
      CHECK(count_prefixes_by_height(n, h) == brute);
      total += brute;
    }
    CHECK(total == binomial(2L * n - 2, n - 1));
  }
}

TEST_CASE("height profile") {
  CHECK(height_profile(LatticePath::parse("UUDUUDDD")) == "//\\//\\\\\\");
}
