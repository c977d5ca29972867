#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <random>

#include "schurlc/enumerate.hpp"
#include "schurlc/intpoly.hpp"
#include "schurlc/product_cache.hpp"
#include "schurlc/schur.hpp"

using namespace schurlc;

namespace {

SchurVector vec(std::initializer_list<std::pair<Partition, int>> terms) {
  SchurVector v;
  for (const auto& [p, c] : terms) v.add_term(p, c);
  return v;
}

Partition hook(int head, int leg) {
  return *Partition::from_runs({{head, 1}, {1, leg}});
}

}  // namespace

TEST_CASE("Littlewood-Richardson coefficients") {
  CHECK(lr_coefficient(Partition({4, 2}), Partition({2, 1}), Partition({2, 1})) == 1);
  CHECK(lr_coefficient(Partition({4, 4}), Partition({2}), Partition({3, 3})) == 0);
  CHECK(lr_coefficient(Partition({3, 1}), Partition({3, 1}), Partition()) == 1);
  CHECK(lr_coefficient(Partition({2}), Partition({1}), Partition({1})) == 1);
  // size mismatch and non-containment count zero, not error
  CHECK(lr_coefficient(Partition({3}), Partition({1}), Partition({1})) == 0);
  CHECK(lr_coefficient(Partition({2, 2}), Partition({3}), Partition({1})) == 0);
}

TEST_CASE("schur_product basis expansions") {
  const Partition p21({2, 1});
  CHECK(schur_product(p21, p21) ==
        vec({{Partition({4, 2}), 1},
             {Partition({4, 1, 1}), 1},
             {Partition({3, 3}), 1},
             {Partition({3, 2, 1}), 2},
             {Partition({3, 1, 1, 1}), 1},
             {Partition({2, 2, 2}), 1},
             {Partition({2, 2, 1, 1}), 1}}));
  // identity element
  const SchurVector f = schur_product(Partition({3, 2}), Partition({1, 1}));
  CHECK(schur_product(f, SchurVector::unit()) == f);
}

TEST_CASE("the displayed virtual-difference expansion") {
  const SchurVector s2 = SchurVector::basis(Partition({2}));
  const SchurVector s11 = SchurVector::basis(Partition({1, 1}));
  const SchurVector lhs = schur_product(Int(2) * s2 + Int(4) * s11, s2 + Int(4) * s11) -
                          Int(16) * schur_product(s2, s11);
  CHECK(lhs == vec({{Partition({1, 1, 1, 1}), 16},
                    {Partition({2, 1, 1}), 12},
                    {Partition({2, 2}), 18},
                    {Partition({3, 1}), -2},
                    {Partition({4}), 2}}));
  CHECK_FALSE(lhs.is_schur_positive());
}

TEST_CASE("pieri rule") {
  CHECK(pieri_multiply(SchurVector::basis(Partition({3})), 1) ==
        vec({{Partition({4}), 1}, {Partition({3, 1}), 1}}));
  const SchurVector lhs = pieri_multiply(SchurVector::basis(Partition({3})), 2);
  CHECK(lhs == vec({{Partition({5}), 1},
                    {Partition({4, 1}), 1},
                    {Partition({3, 2}), 1}}));
  const SchurVector rhs = pieri_multiply(SchurVector::basis(Partition({4})), 1);
  CHECK(lhs - rhs == vec({{Partition({3, 2}), 1}}));
  CHECK(pieri_multiply(SchurVector::unit(), 3) ==
        vec({{Partition({3}), 1}}));
  CHECK(pieri_multiply(SchurVector::basis(Partition({2})), 0) ==
        vec({{Partition({2}), 1}}));
}

TEST_CASE("skew expansion and Jacobi-Trudi oracle") {
  CHECK(skew_expand(SkewShape(Partition({4, 4}), Partition({2}))) ==
        vec({{Partition({4, 2}), 1}}));
  CHECK(skew_expand(SkewShape(Partition({3}), Partition())) ==
        vec({{Partition({3}), 1}}));
  CHECK(skew_expand(SkewShape(Partition({2, 2}), Partition())) ==
        vec({{Partition({2, 2}), 1}}));
  CHECK(jacobi_trudi_expand(SkewShape(Partition({4, 4}), Partition({2}))) ==
        vec({{Partition({4, 2}), 1}}));
  CHECK(jacobi_trudi_expand(SkewShape(Partition({2, 1}), Partition())) ==
        vec({{Partition({2, 1}), 1}}));
  CHECK(jacobi_trudi_expand(SkewShape(Partition({6, 5, 4}), Partition({3, 2}))) ==
        jacobi_trudi_expand(SkewShape(Partition({6, 4, 3}), Partition({2, 1}))));
  CHECK(skew_expand(SkewShape()) == SchurVector::unit());
  CHECK(jacobi_trudi_expand(SkewShape()) == SchurVector::unit());
}

TEST_CASE("the two expansion oracles agree on all shapes up to size 6") {
  for (const SkewShape& s : skew_shapes_up_to(6)) {
    CAPTURE(s.to_string());
    CHECK(skew_expand(s) == jacobi_trudi_expand(s));
    CHECK(skew_expand(s) == skew_expand(s.rotate180()));
    CHECK(skew_expand(s).is_schur_positive());
    const auto deg = skew_expand(s).homogeneous_degree();
    CHECK(deg.has_value());
    if (!skew_expand(s).is_zero()) CHECK(*deg == s.size());
  }
}

TEST_CASE("skew expansions are rotation invariant up to size 8") {
  for (const SkewShape& s : skew_shapes_up_to(8))
    CHECK(skew_expand(s) == skew_expand(s.rotate180()));
}

TEST_CASE("hook product closed form") {
  CHECK(hook_product_closed_form(2, 1, 2, 1) ==
        schur_product(Partition({2, 1}), Partition({2, 1})));
  CHECK(hook_product_closed_form(2, 1, 1, 0) ==
        vec({{Partition({3, 1}), 1},
             {Partition({2, 2}), 1},
             {Partition({2, 1, 1}), 1}}));
  CHECK(hook_product_closed_form(1, 1, 1, 1) ==
        vec({{Partition({2, 2}), 1},
             {Partition({2, 1, 1}), 1},
             {Partition({1, 1, 1, 1}), 1}}));
  CHECK_THROWS_WITH_AS(hook_product_closed_form(2, 0, 3, 0), "use Pieri",
                       std::invalid_argument);
  CHECK_THROWS_AS(hook_product_closed_form(0, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("hook closed form equals the product on a spot grid") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
          if (a + b < 1) continue;
          CAPTURE(m);
          CAPTURE(a);
          CAPTURE(n);
          CAPTURE(b);
          CHECK(hook_product_closed_form(m, a, n, b) ==
                schur_product(hook(m, a), hook(n, b)));
        }
}

TEST_CASE("positivity and dimension") {
  CHECK(vec({{Partition({1, 1, 1, 1}), 16},
             {Partition({2, 1, 1}), 16},
             {Partition({2, 2}), 16}})
            .is_schur_positive());
  CHECK(SchurVector().is_schur_positive());
  CHECK(dimension(SchurVector::basis(Partition({2, 1}))) == 2);
  CHECK(dimension(SchurVector::basis(Partition({9}))) == 1);
  CHECK(dimension(vec({{Partition({4}), 1}, {Partition({2, 2}), 1}})) == 3);
  CHECK(syt_count(Partition()) == 1);
  CHECK(syt_count(Partition({5, 4, 3, 2, 1})) == 292864);
}

TEST_CASE("LR symmetry and conjugation symmetry up to size 6") {
  for (const Partition& lam : partitions_up_to(6)) {
    const Partition lam_c = lam.conjugate();
    for (const Partition& mu : subpartitions_of(lam))
      for (const Partition& nu : partitions_of(lam.size() - mu.size())) {
        const Int c = lr_coefficient(lam, mu, nu);
        CHECK(c == lr_coefficient(lam, nu, mu));
        CHECK(c == lr_coefficient(lam_c, mu.conjugate(), nu.conjugate()));
      }
  }
}

TEST_CASE("products agree with the determinantal oracle coefficient-by-coefficient") {
  // The multiplicity of s_nu in s_lam * s_mu equals the coefficient of
  // s_mu in the expansion of nu/lam, which the Jacobi-Trudi route computes
  // without any tableau enumeration.
  for (int p = 0; p <= 7; ++p)
    for (const Partition& lam : partitions_of(p))
      for (int r = 0; p + r <= 7; ++r)
        for (const Partition& mu : partitions_of(r)) {
          const SchurVector prod = schur_product(lam, mu);
          for (const auto& [nu, c] : prod.terms()) {
            auto shape = SkewShape::make(nu, lam);
            REQUIRE(shape.has_value());
            CHECK(c == jacobi_trudi_expand(*shape).coefficient(mu));
          }
        }
}

TEST_CASE("lr_coefficient agrees with the product expansion") {
  const Partition mu({3, 1}), nu({2, 2});
  const SchurVector prod = schur_product(mu, nu);
  for (const Partition& lam : partitions_of(mu.size() + nu.size()))
    CHECK(prod.coefficient(lam) == lr_coefficient(lam, mu, nu));
}

TEST_CASE("pieri agrees with the general product") {
  for (const SkewShape& s : skew_shapes_up_to(5)) {
    const SchurVector f = skew_expand(s);
    for (int n = 1; n <= 4; ++n)
      CHECK(pieri_multiply(f, n) ==
            schur_product(f, SchurVector::basis(Partition({n}))));
  }
}

namespace {

SchurVector random_vector(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 4), coeff(-3, 3), nterms(1, 3);
  SchurVector v;
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    auto parts = partitions_of(deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    v.add_term(parts[pick(rng)], coeff(rng));
  }
  return v;
}

}  // namespace

TEST_CASE("product ring laws on random vectors") {
  std::mt19937 rng(987654321);
  for (int trial = 0; trial < 60; ++trial) {
    const SchurVector f = random_vector(rng), g = random_vector(rng),
                      h = random_vector(rng);
    CHECK(schur_product(f, g) == schur_product(g, f));
    CHECK(schur_product(schur_product(f, g), h) ==
          schur_product(f, schur_product(g, h)));
    CHECK(schur_product(f + g, h) ==
          schur_product(f, h) + schur_product(g, h));
  }
}

TEST_CASE("induction-product dimension identity on random homogeneous vectors") {
  std::mt19937 rng(13579);
  std::uniform_int_distribution<int> deg(0, 5), coeff(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const int p = deg(rng), r = deg(rng);
    SchurVector f, g;
    for (const Partition& lam : partitions_of(p)) f.add_term(lam, coeff(rng));
    for (const Partition& mu : partitions_of(r)) g.add_term(mu, coeff(rng));
    CHECK(dimension(schur_product(f, g)) ==
          binomial(p + r, p) * dimension(f) * dimension(g));
  }
}

TEST_CASE("generic degrees") {
  CHECK(generic_degree(Partition({1, 1})) == QPoly::monomial(1, 1));
  CHECK(generic_degree(Partition({2})) == QPoly::constant(1));
  CHECK(generic_degree(Partition({2, 1})) ==
        QPoly(std::vector<Int>{0, 1, 1}));
  CHECK(generic_degree(Partition({2, 2})).evaluate(2) == 20);
  for (const Partition& p : partitions_up_to(8)) {
    const QPoly gd = generic_degree(p);
    CHECK(gd.evaluate(1) == syt_count(p));
    CHECK(gd.coefficient_sum() == gd.evaluate(1));
  }
}

TEST_CASE("homogeneity predicate") {
  CHECK(*SchurVector().homogeneous_degree() == 0);
  CHECK(*vec({{Partition({3, 1}), 2}, {Partition({2, 2}), 5}}).homogeneous_degree() == 4);
  CHECK_FALSE(vec({{Partition({3}), 1}, {Partition({2}), 1}}).homogeneous_degree());
}

TEST_CASE("product cache is observationally pure") {
  ProductCache& cache = ProductCache::instance();
  const Partition a({3, 2, 1}), b({2, 2});
  cache.set_enabled(false);
  const SchurVector uncached = schur_product(a, b);
  cache.set_enabled(true);
  const SchurVector first = schur_product(a, b);
  const SchurVector second = schur_product(a, b);
  CHECK(uncached == first);
  CHECK(first == second);
  CHECK(cache.size() > 0);
}

TEST_CASE("product cache persistence round trip") {
  ProductCache& cache = ProductCache::instance();
  schur_product(Partition({4, 1}), Partition({3, 3}));
  const std::string path = "product_cache_test.json";
  REQUIRE(cache.save_file(path));
  const std::size_t before = cache.size();
  cache.clear();
  CHECK(cache.size() == 0);
  REQUIRE(cache.load_file(path));
  CHECK(cache.size() == before);
  CHECK(schur_product(Partition({4, 1}), Partition({3, 3})).is_schur_positive());
  std::remove(path.c_str());
}
