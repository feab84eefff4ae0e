#pragma once

#include "tin/error.hpp"
#include "tin/rational.hpp"

namespace tin {

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Upper bound C(p+k, k) + l - 2 on the (tw, omega)-binding function
/// R(p+1, k+1) + l - 2 of graphs with l-refined tree-independence number at
/// most k and clique number p, via R(a, b) <= C(a+b-2, b-1).
/// This bounds the binding function; it is not the Ramsey number itself.
inline BigInt ramsey_binding_bound(int p, int k, int l) {
  if (p < 0 || k < 1 || l < 0) throw InvalidInput("ramsey_binding_bound needs p >= 0, k >= 1, l >= 0");
  return binomial(static_cast<unsigned>(p + k), static_cast<unsigned>(k)) + l - 2;
}

} // namespace tin
