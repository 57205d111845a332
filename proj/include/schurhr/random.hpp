#pragma once

#include <cstdint>
#include <random>

#include "schurhr/rational.hpp"

namespace schurhr {

/// Seeded generator for reproducible instance families. Draws are built
/// from raw mt19937_64 output only, so sequences are identical across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Seed for the index-th instance of a family with the given master seed.
  static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long range(long lo, long hi);
  bool coin() { return (next() & 1U) != 0; }
  /// p/q with p in [lo, hi] and q in [1, max_den].
  Rational rational(long lo, long hi, long max_den);
  /// Strictly positive p/q with p in [1, hi] and q in [1, max_den].
  Rational positive_rational(long hi, long max_den);

 private:
  std::mt19937_64 engine_;
};

}  // namespace schurhr
