#pragma once

#include <span>
#include <vector>

namespace schurhr {

/// e_0..e_n of the values `xs`, computed from prod_i (1 + x_i t) in any
/// commutative ring T. `zero` and `one` fix the ring's identities (graded
/// types need them because e_k lives in a different grade for each k).
template <typename T, typename ZeroFn>
std::vector<T> elementary_symmetric(std::span<const T> xs, ZeroFn&& zero_of_degree, const T& one) {
  std::vector<T> e;
  e.reserve(xs.size() + 1);
  e.push_back(one);
  for (std::size_t n = 0; n < xs.size(); ++n) {
    e.push_back(zero_of_degree(n + 1));
    for (std::size_t k = n + 1; k >= 1; --k) e[k] = e[k] + e[k - 1] * xs[n];
  }
  return e;
}

}  // namespace schurhr
