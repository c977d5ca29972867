#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schurlc {

/// Exact integer type used for all coefficients, dimensions and polynomial
/// values. No floating point appears anywhere in the library.
using Int = boost::multiprecision::cpp_int;

Int factorial(int n);
Int binomial(int n, int k);

}  // namespace schurlc
