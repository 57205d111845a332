#include "schurhr/random.hpp"

#include "schurhr/errors.hpp"

namespace schurhr {

std::uint64_t Rng::derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finaliser over the combined state
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

long Rng::range(long lo, long hi) {
  if (hi < lo) throw InvalidArgument("Rng::range: empty range");
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Rng::rational(long lo, long hi, long max_den) {
  Rational q(range(lo, hi), range(1, max_den));
  q.canonicalize();
  return q;
}

Rational Rng::positive_rational(long hi, long max_den) {
  Rational q(range(1, hi), range(1, max_den));
  q.canonicalize();
  return q;
}

}  // namespace schurhr
