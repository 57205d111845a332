#pragma once

#include <cstddef>
#include <string>

#include "schurhr/matrix.hpp"
#include "schurhr/rational.hpp"

namespace schurhr {

/// Counts (n+, n0, n-) of a real symmetric form.
struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;

  std::size_t dimension() const { return positive + zero + negative; }
  /// Sign of the determinant implied by Sylvester's law.
  int determinant_sign() const;
  /// "(p,z,m)".
  std::string to_string() const;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact inertia by symmetric congruence: Schur complements on nonzero
/// diagonal pivots, and a hyperbolic 2x2 block (one +, one -) whenever the
/// live diagonal is zero but an off-diagonal entry is not.
Inertia inertia(const RationalMatrix& m);

/// Signature of a Gram matrix together with the Hodge-Riemann and hard
/// Lefschetz flags it implies.
struct InertiaReport {
  Inertia signature;
  int det_sign = 0;
  /// The top-degree number whose positivity the HR property also demands.
  Rational positivity;
  bool hl = false;
  bool hr = false;
};

/// hl := no kernel; hr := positivity > 0 and signature (1, 0, n-1).
InertiaReport hodge_riemann_report(const RationalMatrix& gram, const Rational& positivity);

}  // namespace schurhr
