#pragma once

#include <vector>

#include "schurlc/logconcave.hpp"
#include "schurlc/schur.hpp"

namespace schurlc {

/// Parameters of the uniform matroid of rank d on m + d elements; m = 0 is
/// the Boolean matroid. The closed formulas below are shared verbatim by
/// the q-analogue family: the partition-indexed data is identical, q
/// entering only through generic-degree evaluation.
struct UniformParams {
  int m = 0;
  int d = 1;
  bool valid() const { return m >= 0 && d >= 1; }
};

/// Polynomial whose coefficients are stored as an explicit sign together
/// with a Schur-positive magnitude, as the alternating characteristic
/// polynomials are displayed. signed_poly() applies the signs; unsigned_poly()
/// drops them.
class SignedSchurPoly {
 public:
  SignedSchurPoly() = default;

  int degree() const { return static_cast<int>(vecs_.size()) - 1; }
  int sign_at(int k) const;
  const SchurVector& magnitude_at(int k) const;
  void set_coeff(int k, int sign, SchurVector magnitude);

  SchurPoly signed_poly() const;
  SchurPoly unsigned_poly() const;
  /// Signed evaluation at t = 1 (sum of signed coefficients).
  SchurVector evaluate_signed_at_one() const;

 private:
  std::vector<int> signs_;
  std::vector<SchurVector> vecs_;
};

/// Frobenius image of the equivariant characteristic polynomial of the
/// uniform matroid: coefficient of t^{d-i} carries, with sign (-1)^i, the
/// hooks (m+d-i, 1^i) and (m+d-i+1, 1^{i-1}); the degenerate second hook at
/// i = 0 is omitted, and the constant term is (-1)^d (m+1, 1^{d-1}).
/// The signed coefficients sum to zero at t = 1.
SignedSchurPoly char_poly(int m, int d);

/// Frobenius image of the equivariant reduced characteristic polynomial:
/// coefficient of t^{d-i} is (-1)^{i-1} times the hook (m+d-i+1, 1^{i-1})
/// for i = 1..d. Satisfies (t - 1) * reduced = characteristic.
SignedSchurPoly reduced_char_poly(int m, int d);

/// Frobenius image of the equivariant Kazhdan-Lusztig polynomial: the t^i
/// coefficient is the skew expansion of
/// (m+d-2i, (d-2i+1)^i) / ((d-2i-1)^i); invalid shapes (the Boolean case
/// for i >= 1) contribute zero. Degree at most floor((d-1)/2).
SchurPoly kl_poly(int m, int d);

/// Same polynomial from the hook-shaped display: the t^i coefficient for
/// i >= 1 is the sum over b = 1..min(m, d-2i) of s_(m+d-2i-b+1, b+1, 2^{i-1});
/// the constant coefficient is s_(m+d).
SchurPoly kl_poly_hook_form(int m, int d);

/// Frobenius image of the equivariant inverse Kazhdan-Lusztig polynomial:
/// the t^i coefficient is s_(m+1, 2^i, 1^{d-2i-1}).
SchurPoly inverse_kl_poly(int m, int d);

/// Checks the defining recursion of the Kazhdan-Lusztig polynomial
/// specialized to uniform matroids:
///   reverse(P, d) = sum_{k=0}^{d-1} H_{B_k} * P_{U_{m,d-k}} + H_{U_{m,d}}
/// at the Frobenius-image level, with H_{B_0} the constant unit.
CheckReport kl_defining_recursion_check(int m, int d);

/// Checks the closed form of the inverse polynomial against the recursion
///   Q_{m,d} = -sum_{k=1}^{d-1} (-1)^k P_{B_k} * Q_{m,d-k} - (-1)^d P_{m,d}.
/// (The sign of the final term depends on the parity of d: it comes from
/// the rank-d flat's (-1)^{rk} weight.)
CheckReport inverse_kl_recursion_check(int m, int d);

/// Frobenius image of the equivariant Z-polynomial, built from the
/// palindromic coefficient formulas: Z^0 = Z^d = s_(m+d) and, for
/// 1 <= i <= floor(d/2), Z^i = Z^{d-i} is a sum of skew expansions times
/// s_(k) over a short window of k.
SchurPoly z_poly(int m, int d);

/// The same polynomial from its definition as a double sum over flats'
/// ranks k and Kazhdan-Lusztig degrees j, plus the top term s_(m+d) t^d.
SchurPoly z_poly_from_definition(int m, int d);

/// Ingested reference value: the Frobenius image of the degree-2 equivariant
/// Kazhdan-Lusztig polynomial of the rank-6 braid matroid (partitions of 7).
/// Shipped as data, not computed here.
SchurPoly braid_b7_chP();

/// Ingested reference value: the cubic with coefficients
/// 4 s_(2), 2 s_(2) + 4 s_(1,1), s_(2) + 4 s_(1,1), 4 s_(1,1) that is
/// inductively log-concave but not strongly so.
SchurPoly remark_example_poly();

}  // namespace schurlc
