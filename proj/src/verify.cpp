#include "schurlc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "schurlc/enumerate.hpp"
#include "schurlc/intpoly.hpp"
#include "schurlc/logconcave.hpp"
#include "schurlc/matroid.hpp"

namespace schurlc {

SchurVector remark_strong_witness_reference() {
  SchurVector v;
  v.add_term(Partition({1, 1, 1, 1}), 16);
  v.add_term(Partition({2, 1, 1}), 12);
  v.add_term(Partition({2, 2}), 18);
  v.add_term(Partition({3, 1}), -2);
  v.add_term(Partition({4}), 2);
  return v;
}

SchurVector braid_b7_ilc_difference_reference() {
  struct Term {
    std::initializer_list<int> parts;
    int c;
  };
  static const Term kTerms[] = {
      {{11, 1, 1, 1}, 4},  {{5, 5, 4}, 3},      {{7, 5, 1, 1}, 12},
      {{7, 3, 3, 1}, 8},   {{6, 6, 2}, 12},     {{6, 5, 3}, 15},
      {{6, 4, 4}, 8},      {{6, 6, 1, 1}, 6},   {{6, 5, 2, 1}, 10},
      {{6, 4, 3, 1}, 11},  {{6, 4, 2, 2}, 4},   {{6, 3, 3, 2}, 3},
      {{5, 5, 3, 1}, 4},   {{5, 4, 4, 1}, 3},   {{5, 5, 2, 2}, 2},
      {{5, 4, 3, 2}, 4},   {{5, 3, 3, 3}, 1},   {{4, 4, 4, 2}, 1},
      {{4, 4, 3, 3}, 1},   {{8, 2, 2, 1, 1}, -1}, {{7, 2, 2, 2, 1}, -1},
      {{10, 2, 1, 1}, 6},  {{9, 3, 1, 1}, 11},  {{8, 4, 1, 1}, 13},
      {{7, 4, 2, 1}, 13},  {{9, 2, 2, 1}, 1},   {{8, 3, 2, 1}, 9},
      {{8, 2, 2, 2}, -1},  {{7, 3, 2, 2}, 2},   {{12, 1, 1}, 10},
      {{7, 6, 1}, 24},     {{11, 2, 1}, 18},    {{10, 2, 2}, 8},
      {{8, 5, 1}, 35},     {{7, 5, 2}, 27},     {{10, 3, 1}, 29},
      {{9, 4, 1}, 36},     {{9, 3, 2}, 21},     {{8, 4, 2}, 30},
      {{8, 3, 3}, 14},     {{7, 4, 3}, 22},     {{14}, 2},
      {{13, 1}, 8},        {{12, 2}, 14},       {{11, 3}, 20},
      {{10, 4}, 25},       {{9, 5}, 25},        {{8, 6}, 20},
      {{7, 7}, 8},
  };
  SchurVector v;
  for (const Term& t : kTerms) v.add_term(Partition(t.parts), t.c);
  return v;
}

namespace {

struct Checker {
  bool ok = true;
  long count = 0;
  std::string first_failure;

  void expect(bool condition, const std::function<std::string()>& describe) {
    ++count;
    if (!condition && ok) {
      ok = false;
      first_failure = describe();
    } else if (!condition) {
      ok = false;
    }
  }
};

std::string cell_name(int m, int d) {
  return "(m,d)=(" + std::to_string(m) + "," + std::to_string(d) + ")";
}

// --- criterion bodies -------------------------------------------------------

void criterion_remark_example(Checker& c) {
  const SchurPoly j = remark_example_poly();
  const CheckReport ilc = check_ilc(j);
  c.expect(ilc.verdict, [] { return std::string("check_ilc should hold"); });
  const CheckReport strong = check_strong_ilc(j);
  c.expect(!strong.verdict,
           [] { return std::string("check_strong_ilc should fail"); });
  c.expect(strong.witnesses.size() == 1, [&] {
    return "expected exactly one witness, got " +
           std::to_string(strong.witnesses.size());
  });
  if (!strong.witnesses.empty()) {
    const Witness& w = strong.witnesses.front();
    c.expect(w.i == 1 && w.j == 2, [&] {
      return "witness at (" + std::to_string(w.i) + "," + std::to_string(w.j) +
             "), expected (1,2)";
    });
    c.expect(w.difference == remark_strong_witness_reference(),
             [] { return std::string("witness difference mismatch"); });
  }
  // The two inductive differences displayed alongside the example.
  SchurVector d1 = schur_product(j.coeff(1), j.coeff(1)) -
                   schur_product(j.coeff(0), j.coeff(2));
  SchurVector d1_expected;
  d1_expected.add_term(Partition({1, 1, 1, 1}), 16);
  d1_expected.add_term(Partition({2, 1, 1}), 16);
  d1_expected.add_term(Partition({2, 2}), 16);
  c.expect(d1 == d1_expected,
           [] { return std::string("i=1 inductive difference mismatch"); });
  SchurVector d2 = schur_product(j.coeff(2), j.coeff(2)) -
                   schur_product(j.coeff(1), j.coeff(3));
  SchurVector d2_expected;
  d2_expected.add_term(Partition({2, 2}), 1);
  d2_expected.add_term(Partition({3, 1}), 1);
  d2_expected.add_term(Partition({4}), 1);
  c.expect(d2 == d2_expected,
           [] { return std::string("i=2 inductive difference mismatch"); });
}

void criterion_remark_braid(Checker& c) {
  const SchurPoly p = braid_b7_chP();
  SchurVector diff = schur_product(p.coeff(1), p.coeff(1)) -
                     schur_product(p.coeff(0), p.coeff(2));
  c.expect(diff == braid_b7_ilc_difference_reference(),
           [] { return std::string("braid i=1 difference mismatch"); });
  c.expect(!diff.is_schur_positive(),
           [] { return std::string("braid difference should not be positive"); });
  const CheckReport ilc = check_ilc(p);
  c.expect(!ilc.verdict && ilc.witnesses.size() == 1 &&
               ilc.witnesses.front().i == 1,
           [] { return std::string("check_ilc should fail exactly at i=1"); });
}

void criterion_oracles(Checker& c) {
  for (const SkewShape& shape : skew_shapes_up_to(8)) {
    c.expect(skew_expand(shape) == jacobi_trudi_expand(shape),
             [&] { return "oracle mismatch at " + shape.to_string(); });
  }
}

void criterion_hooks(Checker& c) {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
          if (a + b < 1) continue;
          const Partition h1 = *Partition::from_runs({{m, 1}, {1, a}});
          const Partition h2 = *Partition::from_runs({{n, 1}, {1, b}});
          c.expect(hook_product_closed_form(m, a, n, b) == schur_product(h1, h2),
                   [&] {
                     return "closed form mismatch at (m,a,n,b)=(" +
                            std::to_string(m) + "," + std::to_string(a) + "," +
                            std::to_string(n) + "," + std::to_string(b) + ")";
                   });
        }
}

void criterion_charpoly(Checker& c) {
  for (int m = 1; m <= 10; ++m)
    for (int d = 1; d <= 10; ++d) {
      c.expect(check_strong_ilc(reduced_char_poly(m, d).unsigned_poly()).verdict,
               [&] { return "reduced characteristic strong ILC " + cell_name(m, d); });
      c.expect(check_strong_ilc(char_poly(m, d).unsigned_poly()).verdict,
               [&] { return "characteristic strong ILC " + cell_name(m, d); });
      c.expect(char_poly(m, d).evaluate_signed_at_one().is_zero(),
               [&] { return "signed t=1 evaluation nonzero " + cell_name(m, d); });
    }
}

void criterion_kl(Checker& c) {
  for (int m = 0; m + 1 <= 12; ++m)
    for (int d = 1; m + d <= 12; ++d) {
      const SchurPoly p = kl_poly(m, d);
      c.expect(check_ilc(p).verdict,
               [&] { return "KL ILC fails " + cell_name(m, d); });
      c.expect(check_strong_ilc(p).verdict,
               [&] { return "KL strong ILC fails " + cell_name(m, d); });
    }
}

void criterion_invkl(Checker& c) {
  for (int m = 0; m + 1 <= 12; ++m)
    for (int d = 1; m + d <= 12; ++d) {
      const SchurPoly q = inverse_kl_poly(m, d);
      c.expect(check_ilc(q).verdict,
               [&] { return "inverse KL ILC fails " + cell_name(m, d); });
      c.expect(check_strong_ilc(q).verdict,
               [&] { return "inverse KL strong ILC fails " + cell_name(m, d); });
    }
}

void criterion_recursions(Checker& c) {
  for (int m = 0; m + 1 <= 10; ++m)
    for (int d = 1; m + d <= 10; ++d) {
      c.expect(kl_defining_recursion_check(m, d).verdict,
               [&] { return "KL defining recursion fails " + cell_name(m, d); });
      c.expect(inverse_kl_recursion_check(m, d).verdict,
               [&] { return "inverse KL recursion fails " + cell_name(m, d); });
    }
}

std::string criterion_z(Checker& c) {
  for (int m = 0; m + 1 <= 12; ++m)
    for (int d = 1; m + d <= 12; ++d) {
      const SchurPoly z = z_poly(m, d);
      c.expect(z == z_poly_from_definition(m, d),
               [&] { return "Z coefficient formulas disagree " + cell_name(m, d); });
      bool palindromic = true;
      for (int i = 0; i <= d; ++i)
        palindromic = palindromic && z.coeff(i) == z.coeff(d - i);
      c.expect(palindromic, [&] { return "Z not palindromic " + cell_name(m, d); });
    }
  for (int d = 1; d <= 10; ++d)
    c.expect(check_strong_ilc(z_poly(0, d)).verdict,
             [&] { return "Boolean Z strong ILC fails " + cell_name(0, d); });
  for (int m = 1; m <= 10; ++m)
    for (int d = 1; d <= 5; ++d)
      c.expect(check_strong_ilc(z_poly(m, d)).verdict,
               [&] { return "Z strong ILC (d<=5) fails " + cell_name(m, d); });
  for (int m = 1; m <= 8; ++m)
    for (int d = 2; d <= 8; ++d) {
      const SchurPoly z = z_poly(m, d);
      SchurVector head = schur_product(z.coeff(1), z.coeff(1)) -
                         schur_product(z.coeff(0), z.coeff(2));
      SchurVector tail = schur_product(z.coeff(d - 1), z.coeff(d - 1)) -
                         schur_product(z.coeff(d), z.coeff(d - 2));
      c.expect(head.is_schur_positive(),
               [&] { return "Z leading inequality fails " + cell_name(m, d); });
      c.expect(tail.is_schur_positive(),
               [&] { return "Z trailing inequality fails " + cell_name(m, d); });
    }
  // The general strong conjecture is reported, never asserted.
  long conj_total = 0, conj_pass = 0;
  for (int m = 0; m + 1 <= 12; ++m)
    for (int d = 1; m + d <= 12; ++d) {
      ++conj_total;
      if (check_strong_ilc(z_poly(m, d)).verdict) ++conj_pass;
    }
  return "; strong-ILC conjecture sweep (reported only): " +
         std::to_string(conj_pass) + "/" + std::to_string(conj_total) +
         " cells positive";
}

void criterion_preservation(Checker& c) {
  for (int m = 1; m <= 6; ++m)
    for (int d = 1; d <= 6; ++d) {
      const SchurPoly h = reduced_char_poly(m, d).unsigned_poly();
      c.expect(check_strong_ilc(h).verdict,
               [&] { return "base strong ILC fails " + cell_name(m, d); });
      c.expect(check_strong_ilc(times_t_plus_one(h)).verdict,
               [&] { return "(t+1) preservation fails " + cell_name(m, d); });
      c.expect(check_strong_ilc(substitute_t_plus_one(h)).verdict,
               [&] { return "t->t+1 preservation fails " + cell_name(m, d); });
    }
}

void criterion_dims(Checker& c) {
  const int qs[] = {2, 3, 5};
  for (int m = 0; m + 1 <= 12; ++m)
    for (int d = 1; m + d <= 12; ++d) {
      for (const char* family : {"kl", "invkl"}) {
        const SchurPoly p = std::string(family) == "kl" ? kl_poly(m, d)
                                                        : inverse_kl_poly(m, d);
        c.expect(is_log_concave(dimension_poly(p)), [&] {
          return std::string(family) + " dimension poly not log-concave " +
                 cell_name(m, d);
        });
        for (int q : qs)
          c.expect(is_log_concave(q_dimension_poly(p, q)), [&] {
            return std::string(family) + " q=" + std::to_string(q) +
                   " dimension poly not log-concave " + cell_name(m, d);
          });
      }
    }
  for (const Partition& lambda : partitions_up_to(10))
    c.expect(generic_degree(lambda).evaluate(1) == syt_count(lambda), [&] {
      return "generic degree at q=1 mismatch for " + lambda.to_string();
    });
}

void criterion_lr(Checker& c) {
  for (const Partition& lam : partitions_up_to(8)) {
    const Partition lam_conj = lam.conjugate();
    for (const Partition& mu : subpartitions_of(lam)) {
      const Partition mu_conj = mu.conjugate();
      for (const Partition& nu : partitions_of(lam.size() - mu.size())) {
        const Int lr = lr_coefficient(lam, mu, nu);
        c.expect(lr == lr_coefficient(lam, nu, mu), [&] {
          return "LR symmetry fails at " + lam.to_string() + "/" +
                 mu.to_string() + ", " + nu.to_string();
        });
        c.expect(lr == lr_coefficient(lam_conj, mu_conj, nu.conjugate()), [&] {
          return "LR conjugation symmetry fails at " + lam.to_string() + "/" +
                 mu.to_string() + ", " + nu.to_string();
        });
      }
    }
  }
  // Pieri consistency on skew expansions and on the plain basis.
  for (const SkewShape& shape : skew_shapes_up_to(6)) {
    const SchurVector f = skew_expand(shape);
    for (int n = 1; n <= 4; ++n)
      c.expect(pieri_multiply(f, n) ==
                   schur_product(f, SchurVector::basis(Partition({n}))),
               [&] {
                 return "Pieri consistency fails at " + shape.to_string() +
                        " * h_" + std::to_string(n);
               });
  }
  for (const Partition& lam : partitions_up_to(8)) {
    const SchurVector f = SchurVector::basis(lam);
    for (int n = 1; n <= 4; ++n)
      c.expect(pieri_multiply(f, n) ==
                   schur_product(f, SchurVector::basis(Partition({n}))),
               [&] {
                 return "Pieri consistency fails at s(" + lam.to_string() +
                        ") * h_" + std::to_string(n);
               });
  }
  // Induction-product dimension identity on basis pairs.
  for (int p = 0; p <= 8; ++p)
    for (int r = 0; p + r <= 8; ++r)
      for (const Partition& lam : partitions_of(p))
        for (const Partition& mu : partitions_of(r)) {
          const SchurVector f = SchurVector::basis(lam);
          const SchurVector g = SchurVector::basis(mu);
          c.expect(dimension(schur_product(f, g)) ==
                       binomial(p + r, p) * dimension(f) * dimension(g),
                   [&] {
                     return "dimension identity fails at " + lam.to_string() +
                            " * " + mu.to_string();
                   });
        }
}

}  // namespace

std::vector<CriterionResult> run_verification(
    const std::vector<std::string>& only) {
  struct Entry {
    int id;
    const char* suite;
    const char* name;
    std::function<std::string(Checker&)> body;
  };
  auto plain = [](void (*fn)(Checker&)) {
    return [fn](Checker& c) {
      fn(c);
      return std::string();
    };
  };
  const std::vector<Entry> entries = {
      {1, "remarks", "remark-example", plain(criterion_remark_example)},
      {2, "remarks", "remark-braid", plain(criterion_remark_braid)},
      {3, "oracles", "oracle-equivalence", plain(criterion_oracles)},
      {4, "hooks", "hook-closed-form", plain(criterion_hooks)},
      {5, "charpoly", "characteristic-strong-ilc", plain(criterion_charpoly)},
      {6, "kl", "kl-ilc-and-strong-sweep", plain(criterion_kl)},
      {7, "invkl", "inverse-kl-ilc-and-strong-sweep", plain(criterion_invkl)},
      {8, "recursions", "recursion-oracles", plain(criterion_recursions)},
      {9, "z", "z-polynomial", criterion_z},
      {10, "preservation", "ilc-preservation", plain(criterion_preservation)},
      {11, "dims", "dimension-log-concavity", plain(criterion_dims)},
      {12, "lr", "lr-property-suite", plain(criterion_lr)},
  };

  std::vector<CriterionResult> results;
  for (const Entry& entry : entries) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), entry.suite) == only.end())
      continue;
    const auto start = std::chrono::steady_clock::now();
    Checker checker;
    std::string extra = entry.body(checker);
    CriterionResult result;
    result.id = entry.id;
    result.suite = entry.suite;
    result.name = entry.name;
    result.pass = checker.ok;
    result.detail = (checker.ok ? std::to_string(checker.count) + " checks"
                                : checker.first_failure) +
                    extra;
    result.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    results.push_back(std::move(result));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace schurlc
