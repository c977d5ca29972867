#include "schurlc/ints.hpp"

#include <algorithm>

namespace schurlc {

Int factorial(int n) {
  Int acc = 1;
  for (int k = 2; k <= n; ++k) acc *= k;
  return acc;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int acc = 1;
  // product of k consecutive integers stays divisible at every step
  for (int i = 1; i <= k; ++i) {
    acc *= (n - k + i);
    acc /= i;
  }
  return acc;
}

}  // namespace schurlc
