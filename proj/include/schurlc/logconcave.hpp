#pragma once

#include <string>
#include <vector>

#include "schurlc/intpoly.hpp"
#include "schurlc/partition.hpp"
#include "schurlc/schur.hpp"

namespace schurlc {

/// Polynomial in the formal variable t with SchurVector coefficients: the
/// Frobenius image of a graded virtual representation. Trailing zero
/// coefficients are trimmed.
class SchurPoly {
 public:
  SchurPoly() = default;
  explicit SchurPoly(std::vector<SchurVector> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^k; zero vector beyond the degree.
  const SchurVector& coeff(int k) const;
  const std::vector<SchurVector>& coeffs() const { return coeffs_; }
  void set_coeff(int k, SchurVector v);
  void add_to_coeff(int k, const SchurVector& v);

  /// True iff every coefficient is Schur positive.
  bool positive() const;

  SchurPoly& operator+=(const SchurPoly& rhs);
  SchurPoly& operator-=(const SchurPoly& rhs);
  friend SchurPoly operator+(SchurPoly lhs, const SchurPoly& rhs) {
    return lhs += rhs;
  }
  friend SchurPoly operator-(SchurPoly lhs, const SchurPoly& rhs) {
    return lhs -= rhs;
  }
  /// Ring product; coefficient convolution through schur_product.
  friend SchurPoly operator*(const SchurPoly& lhs, const SchurPoly& rhs);
  friend bool operator==(const SchurPoly&, const SchurPoly&) = default;

  /// Sum of all coefficients (evaluation at t = 1).
  SchurVector evaluate_at_one() const;
  /// Coefficients reversed within a frame of the given degree:
  /// result coeff k = coeff(frame_degree - k). Requires degree <= frame.
  SchurPoly reversed(int frame_degree) const;

  std::string to_text() const;

 private:
  void trim();
  std::vector<SchurVector> coeffs_;
};

/// One failed cell of a positivity check: the index pair and the difference
/// vector that failed to be Schur positive.
struct Witness {
  int i = 0;
  int j = 0;
  SchurVector difference;
};

/// Result of a positivity check: verdict is true iff no witnesses were
/// collected; cells_checked counts every index pair examined, including the
/// boundary pairs that are positive for trivial reasons.
struct CheckReport {
  bool verdict = true;
  std::vector<Witness> witnesses;
  long cells_checked = 0;
};

/// Induced log-concavity at the Frobenius-image level: verdict true iff for
/// every interior index i the difference c_i^2 - c_{i-1} c_{i+1} is Schur
/// positive. Coefficients must be honest (Schur positive); otherwise throws
/// std::invalid_argument("coefficients must be honest").
CheckReport check_ilc(const SchurPoly& p);

/// Strong variant, over all pairs 1 <= i <= j.
CheckReport check_strong_ilc(const SchurPoly& p);

/// Multiplication by (t + 1) at the coefficient level: coefficient k of the
/// result is c_{k-1} + c_k.
SchurPoly times_t_plus_one(const SchurPoly& p);

/// Substitution t -> t + 1: coefficient i of the result is
/// sum_{j >= i} binom(j, i) c_j.
SchurPoly substitute_t_plus_one(const SchurPoly& p);

/// Checks s^2 at index i against the product at i-1, i+1 for the skew family
/// (n+k i, (a+k i)^(c i+d)) / ((b+k i)^(c i+d)); throws inapplicable_error
/// when any of the three shapes is not a valid skew shape.
CheckReport verify_skew_family(int n, int k, int a, int b, int c, int d, int i);

/// Checks s_(q,1^a) s_(p,1^b) >= s_(q+1,1^{a-1}) s_(p-1,1^{b+1}) for
/// 1 <= a <= b, 1 <= p <= q; other parameters throw inapplicable_error.
CheckReport verify_hook_corollary(int a, int b, int p, int q);

/// Checks the coordinate-wise midpoint product against the original product.
CheckReport verify_lpp_midpoint(const SkewShape& x, const SkewShape& y);

/// Checks the sorted-pair product against the original product.
CheckReport verify_lpp_sort(const SkewShape& x, const SkewShape& y);

/// Coefficient-wise dimension of each SchurVector coefficient.
IntPoly dimension_poly(const SchurPoly& p);

/// Coefficient-wise generic-degree evaluation at the integer q.
IntPoly q_dimension_poly(const SchurPoly& p, int q);

/// a_i^2 >= a_{i-1} a_{i+1} for every interior coefficient.
bool is_log_concave(const IntPoly& p);

}  // namespace schurlc
