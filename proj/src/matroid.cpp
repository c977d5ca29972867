#include "schurlc/matroid.hpp"

#include <algorithm>
#include <stdexcept>

#include "schurlc/errors.hpp"

namespace schurlc {

namespace {

void require_params(int m, int d) {
  if (!UniformParams{m, d}.valid())
    throw std::invalid_argument("uniform matroid parameters need m >= 0, d >= 1");
}

SchurVector hook_vector(int head, int leg) {
  auto p = Partition::from_runs({{head, 1}, {1, leg}});
  return p ? SchurVector::basis(*p) : SchurVector();
}

// The skew carrier of the Kazhdan-Lusztig coefficient of U_{m,rank} at t^i.
SchurVector kl_coefficient_vector(int m, int rank, int i) {
  auto outer =
      Partition::from_runs({{m + rank - 2 * i, 1}, {rank - 2 * i + 1, i}});
  auto inner = Partition::from_runs({{rank - 2 * i - 1, i}});
  if (!outer || !inner) return SchurVector();
  auto shape = SkewShape::make(std::move(*outer), std::move(*inner));
  if (!shape) return SchurVector();
  return skew_expand(*shape);
}

}  // namespace

int SignedSchurPoly::sign_at(int k) const {
  if (k < 0 || k > degree()) return 1;
  return signs_[static_cast<std::size_t>(k)];
}

const SchurVector& SignedSchurPoly::magnitude_at(int k) const {
  static const SchurVector zero;
  if (k < 0 || k > degree()) return zero;
  return vecs_[static_cast<std::size_t>(k)];
}

void SignedSchurPoly::set_coeff(int k, int sign, SchurVector magnitude) {
  if (k < 0) throw std::invalid_argument("SignedSchurPoly: negative exponent");
  if (k >= static_cast<int>(vecs_.size())) {
    vecs_.resize(static_cast<std::size_t>(k + 1));
    signs_.resize(static_cast<std::size_t>(k + 1), 1);
  }
  signs_[static_cast<std::size_t>(k)] = sign >= 0 ? 1 : -1;
  vecs_[static_cast<std::size_t>(k)] = std::move(magnitude);
}

SchurPoly SignedSchurPoly::signed_poly() const {
  std::vector<SchurVector> out(vecs_.size());
  for (std::size_t k = 0; k < vecs_.size(); ++k) {
    out[k] = vecs_[k];
    if (signs_[k] < 0) out[k] = -out[k];
  }
  return SchurPoly(std::move(out));
}

SchurPoly SignedSchurPoly::unsigned_poly() const {
  return SchurPoly(std::vector<SchurVector>(vecs_));
}

SchurVector SignedSchurPoly::evaluate_signed_at_one() const {
  return signed_poly().evaluate_at_one();
}

SignedSchurPoly char_poly(int m, int d) {
  require_params(m, d);
  SignedSchurPoly h;
  for (int i = 0; i <= d - 1; ++i) {
    SchurVector v = hook_vector(m + d - i, i);
    if (i >= 1) v += hook_vector(m + d - i + 1, i - 1);
    h.set_coeff(d - i, (i % 2 == 0) ? 1 : -1, std::move(v));
  }
  h.set_coeff(0, (d % 2 == 0) ? 1 : -1, hook_vector(m + 1, d - 1));
  return h;
}

SignedSchurPoly reduced_char_poly(int m, int d) {
  require_params(m, d);
  SignedSchurPoly h;
  for (int i = 1; i <= d; ++i)
    h.set_coeff(d - i, (i % 2 == 1) ? 1 : -1, hook_vector(m + d - i + 1, i - 1));
  return h;
}

SchurPoly kl_poly(int m, int d) {
  require_params(m, d);
  SchurPoly p;
  for (int i = 0; i <= (d - 1) / 2; ++i)
    p.set_coeff(i, kl_coefficient_vector(m, d, i));
  return p;
}

SchurPoly kl_poly_hook_form(int m, int d) {
  require_params(m, d);
  SchurPoly p;
  p.set_coeff(0, SchurVector::basis(Partition({m + d})));
  for (int i = 1; i <= (d - 1) / 2; ++i) {
    SchurVector v;
    for (int b = 1; b <= std::min(m, d - 2 * i); ++b) {
      auto lambda = Partition::from_runs(
          {{m + d - 2 * i - b + 1, 1}, {b + 1, 1}, {2, i - 1}});
      if (lambda) v.add_term(*lambda, 1);
    }
    p.set_coeff(i, std::move(v));
  }
  return p;
}

SchurPoly inverse_kl_poly(int m, int d) {
  require_params(m, d);
  SchurPoly q;
  for (int i = 0; i <= (d - 1) / 2; ++i) {
    auto lambda =
        Partition::from_runs({{m + 1, 1}, {2, i}, {1, d - 2 * i - 1}});
    if (lambda) q.set_coeff(i, SchurVector::basis(*lambda));
  }
  return q;
}

namespace {

CheckReport compare_polys(const SchurPoly& lhs, const SchurPoly& rhs) {
  CheckReport report;
  const int deg = std::max(lhs.degree(), rhs.degree());
  for (int k = 0; k <= deg; ++k) {
    ++report.cells_checked;
    SchurVector diff = lhs.coeff(k) - rhs.coeff(k);
    if (!diff.is_zero()) report.witnesses.push_back({k, k, std::move(diff)});
  }
  report.verdict = report.witnesses.empty();
  return report;
}

}  // namespace

CheckReport kl_defining_recursion_check(int m, int d) {
  require_params(m, d);
  const SchurPoly lhs = kl_poly(m, d).reversed(d);
  SchurPoly rhs;
  for (int k = 0; k <= d - 1; ++k) {
    // Rank-k flats: Boolean localization B_k, contraction U_{m,d-k}. The
    // empty flat's characteristic polynomial is the constant unit.
    SchurPoly h = k == 0 ? SchurPoly({SchurVector::unit()})
                         : char_poly(0, k).signed_poly();
    rhs += h * kl_poly(m, d - k);
  }
  rhs += char_poly(m, d).signed_poly();
  return compare_polys(lhs, rhs);
}

CheckReport inverse_kl_recursion_check(int m, int d) {
  require_params(m, d);
  const SchurPoly lhs = inverse_kl_poly(m, d);
  SchurPoly rhs;
  for (int k = 1; k <= d - 1; ++k) {
    // Proper rank-k flats carry weight -(-1)^k.
    const SchurPoly term = kl_poly(0, k) * inverse_kl_poly(m, d - k);
    if (k % 2 == 0)
      rhs -= term;
    else
      rhs += term;
  }
  // The rank-d flat carries weight -(-1)^d on the Kazhdan-Lusztig
  // polynomial itself; the sign depends on the parity of d.
  const SchurPoly top = kl_poly(m, d);
  if (d % 2 == 0)
    rhs -= top;
  else
    rhs += top;
  return compare_polys(lhs, rhs);
}

SchurPoly z_poly(int m, int d) {
  require_params(m, d);
  SchurPoly z;
  z.set_coeff(0, SchurVector::basis(Partition({m + d})));
  z.set_coeff(d, SchurVector::basis(Partition({m + d})));
  for (int i = 1; i <= d / 2; ++i) {
    SchurVector v;
    for (int k = d - 2 * i + 1; k <= d - i; ++k) {
      // Skew Kazhdan-Lusztig carrier of U_{m,d-k} at degree d-i-k, times s_(k).
      SchurVector skew = kl_coefficient_vector(m, d - k, d - i - k);
      v += pieri_multiply(skew, k);
    }
    z.set_coeff(i, v);
    z.set_coeff(d - i, v);
  }
  return z;
}

SchurPoly z_poly_from_definition(int m, int d) {
  require_params(m, d);
  SchurPoly z;
  for (int k = 0; k <= d - 1; ++k) {
    const SchurVector sk = SchurVector::basis(Partition({k}));
    for (int j = 0; j <= (d - k - 1) / 2; ++j) {
      SchurVector term = schur_product(kl_coefficient_vector(m, d - k, j), sk);
      z.add_to_coeff(k + j, term);
    }
  }
  z.add_to_coeff(d, SchurVector::basis(Partition({m + d})));
  return z;
}

SchurPoly remark_example_poly() {
  const SchurVector s2 = SchurVector::basis(Partition({2}));
  const SchurVector s11 = SchurVector::basis(Partition({1, 1}));
  SchurPoly j;
  j.set_coeff(0, Int(4) * s2);
  j.set_coeff(1, Int(2) * s2 + Int(4) * s11);
  j.set_coeff(2, s2 + Int(4) * s11);
  j.set_coeff(3, Int(4) * s11);
  return j;
}

SchurPoly braid_b7_chP() {
  SchurVector c0, c1, c2;
  c0.add_term(Partition({7}), 1);

  c1.add_term(Partition({7}), 2);
  c1.add_term(Partition({6, 1}), 2);
  c1.add_term(Partition({5, 2}), 1);
  c1.add_term(Partition({4, 3}), 1);

  c2.add_term(Partition({7}), 2);
  c2.add_term(Partition({6, 1}), 2);
  c2.add_term(Partition({5, 2}), 2);
  c2.add_term(Partition({4, 3}), 2);
  c2.add_term(Partition({4, 2, 1}), 2);
  c2.add_term(Partition({3, 2, 2}), 1);
  c2.add_term(Partition({2, 2, 2, 1}), 1);

  SchurPoly p;
  p.set_coeff(0, std::move(c0));
  p.set_coeff(1, std::move(c1));
  p.set_coeff(2, std::move(c2));
  return p;
}

}  // namespace schurlc
