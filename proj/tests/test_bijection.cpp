#include <doctest.h>

#include <set>

#include "cbperm/bijection.hpp"
#include "cbperm/binomial.hpp"
#include "cbperm/census.hpp"

using namespace cbperm;

namespace {

// Oracle for phi, written directly from the definition with strings.
std::string phi_oracle(const Permutation& s) {
  const auto d = ltr_decompose(s);
  std::string out;
  int prev = 0;
  for (int i = 0; i < d.k(); ++i) {
    const auto& b = d.blocks[static_cast<std::size_t>(i)];
    const bool last = i + 1 == d.k();
    if (last && b.tail.empty()) break;
    out += std::string(static_cast<std::size_t>(b.max - prev), 'U');
    prev = b.max;
    if (!last) {
      out += std::string(b.tail.size() + 1, 'D');
      continue;
    }
    const auto& x = b.tail;
    for (std::size_t j = 0; j + 1 < x.size(); ++j) {
      const bool is_max = *std::max_element(x.begin() + static_cast<std::ptrdiff_t>(j), x.end()) == x[j];
      out += is_max ? 'U' : 'D';
    }
  }
  return out;
}

}  // namespace

TEST_CASE("phi examples") {
  CHECK(phi(Permutation::parse("6 1 2 9 3 4 5 11 12 7 10 8")).to_string() == "UUUUUUDDDUUUDDDDUUDUDU");
  CHECK(phi(Permutation::parse("2 4 1 3 7 5 9 6 8")).to_string() == "UUDUUDDDUUUDDUUD");
  CHECK(phi(Permutation{1, 2, 3, 4}).to_string() == "UDUDUD");
  CHECK(phi(Permutation{1}).empty());
  CHECK(phi(Permutation::parse("4 1 2 6 7 3 10 5 9 8")).to_string() == "UUUUDDDUUDUDDUUUDU");
  CHECK(phi(Permutation::parse("4 3 2 6 7 5 10 8 9 1")).to_string() == "UUUUDDDUUDUDDUUUDU");
  CHECK_THROWS_AS(phi(Permutation{4, 2, 3, 1, 5, 6}), std::invalid_argument);
}

TEST_CASE("phi agrees with the definition oracle") {
  for (int n = 1; n <= 8; ++n) {
    for (ClassTag tag : {ClassTag::T1, ClassTag::T2}) {
      for_each_in_class(n, basis_of(tag), [&](const Permutation& s) {
        INFO(s);
        CHECK(phi(s).to_string() == phi_oracle(s));
      });
    }
  }
}

TEST_CASE("inverse examples") {
  CHECK(phi1_inverse(LatticePath::parse("UUDUUDDD")).to_string() == "2 4 1 3 5");
  CHECK(phi1_inverse(LatticePath::parse("UUUDDUUD")).to_string() == "3 1 5 2 4");
  CHECK(phi1_inverse(LatticePath::parse("UUUUDDUUDU")).to_string() == "4 1 6 2 5 3");
  CHECK(phi1_inverse(LatticePath::parse("UUUUDDUUDD")).to_string() == "4 1 6 2 3 5");
  CHECK(phi1_inverse(LatticePath::parse("")).to_string() == "1");
  CHECK(phi2_inverse(LatticePath::parse("UUUUDDDUUDUDDUUUDU")).to_string() == "4 3 2 6 7 5 10 8 9 1");
  CHECK(phi1_inverse(LatticePath::parse("UUUUDDDUUDUDDUUUDU")).to_string() == "4 1 2 6 7 3 10 5 9 8");
  CHECK(phi2_inverse(LatticePath::parse("")).to_string() == "1");
  CHECK(phi2_inverse(LatticePath::parse("UU")).to_string() == "2 1");
  CHECK(phi_inverse(LatticePath::parse("UD"), ClassTag::T2).to_string() == "1 2");
  CHECK_THROWS(phi1_inverse(LatticePath::parse("UUD")));
}

TEST_CASE("round trips and surjectivity up to n=8") {
  for (int n = 1; n <= 8; ++n) {
    for (ClassTag tag : {ClassTag::T1, ClassTag::T2}) {
      std::set<LatticePath> images;
      for_each_in_class(n, basis_of(tag), [&](const Permutation& s) {
        const auto p = phi(s);
        CHECK(phi_inverse(p, tag) == s);
        images.insert(p);
      });
      CHECK(mpz_class(images.size()) == binomial(2L * n - 2, n - 1));
      for_each_prefix(2 * n - 2, [&](const LatticePath& p) {
        const auto s = phi_inverse(p, tag);
        CHECK(avoids(s, basis_of(tag)));
        CHECK(phi(s) == p);
      });
    }
  }
}

TEST_CASE("class tags") {
  CHECK(parse_class_tag("T1") == ClassTag::T1);
  CHECK(parse_class_tag("t2") == ClassTag::T2);
  CHECK_THROWS(parse_class_tag("t3"));
  CHECK(to_string(ClassTag::T2) == "t2");
}

TEST_CASE("psi deletes the trailing maximum") {
  CHECK(psi_delete_last(Permutation{2, 4, 1, 3, 5}) == Permutation{2, 4, 1, 3});
  CHECK(psi_delete_last(Permutation{1, 2, 3}) == Permutation{1, 2});
  CHECK(psi_delete_last(Permutation{2, 1, 3}) == Permutation{2, 1});
  CHECK_THROWS(psi_delete_last(Permutation{2, 3, 1}));
}

TEST_CASE("juxtaposition split") {
  const auto split = juxtaposition_split(Permutation::parse("2 4 1 3 7 5 9 6 8"), ClassTag::T1);
  REQUIRE(split.has_value());
  CHECK(split->tau.to_string() == "2 4 1 3 5");
  CHECK(split->rho.to_string() == "3 1 5 2 4");
  CHECK_FALSE(juxtaposition_split(Permutation{3, 1, 5, 2, 4}, ClassTag::T1).has_value());
  const auto small = juxtaposition_split(Permutation{1, 2}, ClassTag::T1);
  REQUIRE(small.has_value());
  CHECK(small->tau == Permutation{1, 2});
  CHECK(small->rho == Permutation{1});
  CHECK_THROWS(juxtaposition_split(Permutation{3, 2, 4, 1}, ClassTag::T1));
}

TEST_CASE("krattenthaler extension") {
  CHECK(krattenthaler_extend(Permutation{1, 2, 3}).to_string() == "UDUDUD");
  CHECK(krattenthaler_extend(Permutation{2, 4, 1, 3, 5}).to_string() == "UUDUUDDDUD");
  CHECK(krattenthaler_extend(Permutation{3, 1, 2}).to_string() == "UUUDDD");
  CHECK_THROWS(krattenthaler_extend(Permutation{3, 2, 1}));
  const PatternBasis avoid321("321", {Permutation{3, 2, 1}});
  for (int n = 1; n <= 8; ++n) {
    std::set<LatticePath> seen;
    for_each_in_class(n, avoid321, [&](const Permutation& s) {
      const auto k = krattenthaler_extend(s);
      CHECK(classify(k) == PathKind::DyckPath);
      CHECK(k.length() == 2 * n);
      seen.insert(k);
    });
    CHECK(mpz_class(seen.size()) == catalan(n));
  }
}
