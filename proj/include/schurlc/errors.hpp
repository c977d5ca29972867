#pragma once

#include <stdexcept>
#include <string>

namespace schurlc {

/// Thrown when a shape construction is degenerate: a negative repetition
/// count in exponent notation, parts that fail to be weakly decreasing, or a
/// skew pair whose inner partition is not contained in the outer one.
class degenerate_shape_error : public std::invalid_argument {
 public:
  explicit degenerate_shape_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Thrown by theorem verifiers when the parameters fall outside the
/// hypotheses of the statement being checked.
class inapplicable_error : public std::invalid_argument {
 public:
  explicit inapplicable_error(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace schurlc
