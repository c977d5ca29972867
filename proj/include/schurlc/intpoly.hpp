#pragma once

#include <string>
#include <vector>

#include "schurlc/ints.hpp"
#include "schurlc/partition.hpp"

namespace schurlc {

/// Dense univariate polynomial with exact integer coefficients. Used both
/// for polynomials in q (generic degrees) and in t (ordinary matroid
/// invariants); trailing zero coefficients are trimmed.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  static IntPoly constant(Int c);
  static IntPoly monomial(Int c, int k);

  /// Degree of the polynomial; the zero polynomial has degree -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Int coeff(int k) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Exact division by a monic divisor; throws std::invalid_argument if the
  /// division leaves a remainder.
  IntPoly divide_exact(const IntPoly& divisor) const;

  Int evaluate(const Int& x) const;
  Int coefficient_sum() const { return evaluate(1); }

  /// Coefficient-wise absolute values (for log-concavity of signed
  /// characteristic polynomials).
  IntPoly abs() const;

  /// "1 + 2t + t^2"; the zero polynomial prints as "0".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

/// Univariate integer polynomial in the formal variable q.
using QPoly = IntPoly;

/// The Gaussian integer [k]_q = 1 + q + ... + q^{k-1}.
QPoly gauss_number(int k);

/// Generic degree of the irreducible unipotent representation indexed by p:
/// q^{n(p)} [n]_q! / prod_cells [hook]_q, computed exactly as a polynomial.
/// Evaluates at q = 1 to the number of standard Young tableaux of shape p.
QPoly generic_degree(const Partition& p);

}  // namespace schurlc
