#pragma once

#include <map>
#include <optional>
#include <string>

#include "schurlc/ints.hpp"
#include "schurlc/partition.hpp"

namespace schurlc {

/// An integer linear combination of Schur basis elements, stored as a map
/// from partition to nonzero coefficient. This is the Frobenius image of a
/// virtual representation; addition, subtraction and scalar multiplication
/// are coefficient-wise, and the ring product is `schur_product`.
class SchurVector {
 public:
  SchurVector() = default;

  /// The basis vector s_lambda.
  static SchurVector basis(Partition lambda);
  /// The multiplicative unit s_() = 1.
  static SchurVector unit() { return basis(Partition()); }

  const std::map<Partition, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  Int coefficient(const Partition& lambda) const;

  /// Adds c * s_lambda, erasing the term if the coefficient cancels.
  void add_term(const Partition& lambda, const Int& c);

  bool is_schur_positive() const;
  /// The common size of all stored partitions, or nullopt if the vector
  /// mixes degrees. The zero vector reports degree 0.
  std::optional<int> homogeneous_degree() const;

  SchurVector& operator+=(const SchurVector& rhs);
  SchurVector& operator-=(const SchurVector& rhs);
  SchurVector& operator*=(const Int& scalar);
  friend SchurVector operator+(SchurVector lhs, const SchurVector& rhs) {
    return lhs += rhs;
  }
  friend SchurVector operator-(SchurVector lhs, const SchurVector& rhs) {
    return lhs -= rhs;
  }
  friend SchurVector operator*(const Int& scalar, SchurVector v) {
    return v *= scalar;
  }
  SchurVector operator-() const;
  friend bool operator==(const SchurVector&, const SchurVector&) = default;

  /// Human-readable form like "16 s(2,2) - 2 s(3,1)", descending
  /// lexicographic partition order; the zero vector prints as "0".
  std::string to_text() const;

 private:
  std::map<Partition, Int> terms_;
};

/// Number of standard Young tableaux of shape lambda (the dimension of the
/// corresponding irreducible), by the hook length formula.
Int syt_count(const Partition& lambda);

/// Dimension of the virtual representation with Frobenius image f.
Int dimension(const SchurVector& f);

bool is_schur_positive(const SchurVector& f);

/// The Littlewood-Richardson coefficient c^lam_{mu,nu}: the number of
/// semistandard fillings of lam/mu with content nu whose reverse reading
/// word is a lattice permutation. Size mismatch or non-containment yields 0.
Int lr_coefficient(const Partition& lam, const Partition& mu,
                   const Partition& nu);

/// Expansion of s_lambda * s_mu in the Schur basis, by depth-first
/// enumeration of Littlewood-Richardson tableaux grown on lambda. Results
/// are memoized process-wide (see ProductCache); the cache never changes
/// observable values.
SchurVector schur_product(const Partition& lambda, const Partition& mu);

/// Bilinear extension of the basis product.
SchurVector schur_product(const SchurVector& f, const SchurVector& g);

/// Multiplication by the complete homogeneous symmetric function h_n = s_(n)
/// via horizontal strips. Independent of the Littlewood-Richardson
/// enumeration; n = 0 is the identity.
SchurVector pieri_multiply(const SchurVector& f, int n);

/// Schur expansion of the skew function s_{outer/inner} by enumeration of
/// lattice semistandard fillings of the skew diagram.
SchurVector skew_expand(const SkewShape& shape);

/// Schur expansion of s_{outer/inner} via the determinant
/// det(h_{lambda_i - mu_j - i + j}), each h-monomial converted to the Schur
/// basis by iterated Pieri steps only. Serves as an independent oracle for
/// skew_expand: the two share no enumeration code.
SchurVector jacobi_trudi_expand(const SkewShape& shape);

/// Closed-form expansion of s_(m,1^a) * s_(n,1^b) as six explicit
/// summations over shapes (c1, j+1, 2^r, 1^e); degenerate summands are
/// skipped. Requires m, n >= 1, a, b >= 0 and a + b >= 1 (the a + b = 0
/// case is plain Pieri and is rejected with "use Pieri").
SchurVector hook_product_closed_form(int m, int a, int n, int b);

}  // namespace schurlc
