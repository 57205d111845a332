#pragma once

#include <functional>
#include <string>
#include <vector>

#include "schurhr/chern_poly.hpp"
#include "schurhr/partition.hpp"
#include "schurhr/ring_model.hpp"

namespace schurhr {

/// Inputs that the fixed-example suite lets callers perturb, so that a
/// corrupted table can be shown to break the examples that depend on it.
struct ReproOptions {
  AbelianIntegrals abelian;
};

struct ReproCase {
  std::string id;
  std::string description;
  /// Empty string on success, otherwise what went wrong.
  std::function<std::string(const ReproOptions&)> run;
};

struct ReproOutcome {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

/// The fixed worked examples, in a stable order.
const std::vector<ReproCase>& repro_cases();

/// Runs every case; exceptions count as failures.
std::vector<ReproOutcome> run_repro(const ReproOptions& options = {});

struct DerivedSchurIdentity {
  Partition mu;
  int order;
  ChernPoly expected;
};

/// Closed forms of s_mu^{(i)} for |mu| <= 3 at rank e >= 3 (twenty entries,
/// including the trivial i = 0 rows).
std::vector<DerivedSchurIdentity> low_degree_derived_table(int rank);

}  // namespace schurhr
