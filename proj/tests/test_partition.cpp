#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <random>

#include "schurlc/enumerate.hpp"
#include "schurlc/errors.hpp"
#include "schurlc/partition.hpp"

using namespace schurlc;

TEST_CASE("partition construction and normalization") {
  CHECK(Partition({3, 2, 0, 0}) == Partition({3, 2}));
  CHECK(Partition().size() == 0);
  CHECK(Partition().length() == 0);
  CHECK(Partition({4, 2, 1}).size() == 7);
  CHECK_FALSE(Partition::make({2, 3}).has_value());
  CHECK_FALSE(Partition::make({1, -1}).has_value());
  CHECK_FALSE(Partition::make({0, 1}).has_value());
  CHECK_THROWS_AS(Partition({1, 2}), degenerate_shape_error);
}

TEST_CASE("exponent-notation builder rejects degenerate runs") {
  CHECK(*Partition::from_runs({{3, 1}, {1, 2}}) == Partition({3, 1, 1}));
  CHECK(*Partition::from_runs({{2, 0}, {1, 3}}) == Partition({1, 1, 1}));
  // zero parts act as padding
  CHECK(*Partition::from_runs({{3, 1}, {0, 4}}) == Partition({3}));
  CHECK_FALSE(Partition::from_runs({{1, -1}}).has_value());
  CHECK_FALSE(Partition::from_runs({{3, 1}, {-2, 1}}).has_value());
  CHECK_FALSE(Partition::from_runs({{2, 1}, {3, 1}}).has_value());
}

TEST_CASE("conjugate") {
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition().conjugate() == Partition());
  CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
  for (const Partition& p : partitions_up_to(8)) {
    CHECK(p.conjugate().conjugate() == p);
    CHECK(p.conjugate().size() == p.size());
  }
}

TEST_CASE("hook lengths and n statistic") {
  CHECK(Partition({2, 1}).hook_lengths() == std::vector<int>{3, 1, 1});
  CHECK(Partition({4}).hook_lengths() == std::vector<int>{4, 3, 2, 1});
  CHECK(Partition({2, 2}).hook_lengths() == std::vector<int>{3, 2, 2, 1});
  CHECK(Partition({2}).n_stat() == 0);
  CHECK(Partition({1, 1}).n_stat() == 1);
  CHECK(Partition({2, 1}).n_stat() == 1);
  for (const Partition& p : partitions_up_to(7))
    CHECK(static_cast<int>(p.hook_lengths().size()) == p.size());
}

TEST_CASE("text round trip") {
  CHECK(Partition({6, 5, 4}).to_string() == "6,5,4");
  CHECK(Partition().to_string() == "-");
  CHECK(*Partition::parse("6,5,4") == Partition({6, 5, 4}));
  CHECK(*Partition::parse("-") == Partition());
  CHECK_FALSE(Partition::parse("7,9").has_value());
  CHECK_FALSE(Partition::parse("a,b").has_value());
  CHECK(*SkewShape::parse("6,5,4/3,2") ==
        SkewShape(Partition({6, 5, 4}), Partition({3, 2})));
  CHECK(*SkewShape::parse("3/-") == SkewShape(Partition({3}), Partition()));
  CHECK(*SkewShape::parse("3") == SkewShape(Partition({3}), Partition()));
  CHECK_FALSE(SkewShape::parse("2/3").has_value());
  CHECK(SkewShape(Partition({3}), Partition()).to_string() == "3/-");
}

TEST_CASE("skew shape validity") {
  CHECK_THROWS_AS(SkewShape(Partition({2}), Partition({3})),
                  degenerate_shape_error);
  CHECK(SkewShape(Partition({4, 2}), Partition({2, 1})).size() == 3);
}

TEST_CASE("rotate180 matches the displayed instances") {
  CHECK(SkewShape(Partition({6, 5, 4}), Partition({3, 2})).rotate180() ==
        SkewShape(Partition({6, 4, 3}), Partition({2, 1})));
  CHECK(SkewShape(Partition({5}), Partition()).rotate180() ==
        SkewShape(Partition({5}), Partition()));
  CHECK(SkewShape(Partition({6, 3}), Partition({2})).rotate180() ==
        SkewShape(Partition({6, 4}), Partition({3})));
}

TEST_CASE("rotate180 preserves size and is an involution on tight shapes") {
  for (const SkewShape& s : skew_shapes_up_to(8)) {
    const SkewShape r = s.rotate180();
    CHECK(r.size() == s.size());
    const bool tight_row = s.inner().part_at(0) < s.outer().part_at(0);
    const bool tight_col = s.inner().length() < s.outer().length();
    if (s.outer().empty() || (tight_row && tight_col))
      CHECK(r.rotate180() == s);
  }
}

TEST_CASE("sort_split") {
  auto [a1, a2] = sort_split(Partition({3, 1}), Partition({2, 2}));
  CHECK(a1 == Partition({3, 2}));
  CHECK(a2 == Partition({2, 1}));
  auto [b1, b2] = sort_split(Partition(), Partition());
  CHECK(b1 == Partition());
  CHECK(b2 == Partition());
  // The inverse-KL proof instance at m=1, d=5, i=1.
  auto [c1, c2] = sort_split(Partition({2, 1, 1, 1, 1}), Partition({2, 2, 2}));
  CHECK(c1 == Partition({2, 2, 1, 1}));
  CHECK(c2 == Partition({2, 2, 1, 1}));
  auto [d1, d2] = sort_split(Partition({2, 1, 1, 1}), Partition({2, 2, 2}));
  CHECK(d1 == Partition({2, 2, 1, 1}));
  CHECK(d2 == Partition({2, 2, 1}));
}

TEST_CASE("midpoint_pair") {
  auto [a1, a2] = midpoint_pair(Partition({5}), Partition({1}));
  CHECK(a1 == Partition({3}));
  CHECK(a2 == Partition({3}));
  auto [b1, b2] = midpoint_pair(Partition({4, 2}), Partition({4, 2}));
  CHECK(b1 == Partition({4, 2}));
  CHECK(b2 == Partition({4, 2}));
  auto [c1, c2] = midpoint_pair(Partition({3}), Partition({2, 1}));
  CHECK(c1 == Partition({3, 1}));
  CHECK(c2 == Partition({2}));
}

TEST_CASE("star_pair instances") {
  auto [a1, a2] = star_pair(Partition({2}), Partition({2, 1, 1}));
  CHECK(a1 == Partition({2, 1}));
  CHECK(a2 == Partition({2, 1}));
  auto [b1, b2] = star_pair(Partition({3}), Partition({2, 1}));
  CHECK(b1 == Partition({2}));
  CHECK(b2 == Partition({3, 1}));
  auto [c1, c2] = star_pair(Partition({3}), Partition({3}));
  CHECK(c1 == Partition({3}));
  CHECK(c2 == Partition({3}));
}

TEST_CASE("star_pair on hook pairs matches the four-case table") {
  auto hook = [](int head, int leg) {
    return *Partition::from_runs({{head, 1}, {1, leg}});
  };
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
          auto [lam, rho] = star_pair(hook(m, i), hook(n, j));
          Partition lam_exp, rho_exp;
          if (m <= n && i < j) {
            lam_exp = hook(m, j - 1);
            rho_exp = hook(n, i + 1);
          } else if (m <= n) {
            lam_exp = hook(m, j);
            rho_exp = hook(n, i);
          } else if (i < j) {
            lam_exp = hook(m - 1, j - 1);
            rho_exp = hook(n + 1, i + 1);
          } else {
            lam_exp = hook(m - 1, j);
            rho_exp = hook(n + 1, i);
          }
          CHECK(lam == lam_exp);
          CHECK(rho == rho_exp);
        }
}

TEST_CASE("pair operations preserve total size") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> len(0, 5), part(1, 6);
  auto random_partition = [&]() {
    std::vector<int> parts(static_cast<std::size_t>(len(rng)));
    for (int& p : parts) p = part(rng);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
  };
  for (int trial = 0; trial < 500; ++trial) {
    const Partition a = random_partition(), b = random_partition();
    const int total = a.size() + b.size();
    auto [s1, s2] = sort_split(a, b);
    CHECK(s1.size() + s2.size() == total);
    auto [m1, m2] = midpoint_pair(a, b);
    CHECK(m1.size() + m2.size() == total);
    CHECK(m1.contains(m2));
    auto [t1, t2] = star_pair(a, b);
    CHECK(t1.size() + t2.size() == total);
  }
}
