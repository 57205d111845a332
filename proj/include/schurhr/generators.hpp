#pragma once

#include "schurhr/forms.hpp"
#include "schurhr/partition.hpp"
#include "schurhr/random.hpp"
#include "schurhr/ring_model.hpp"

namespace schurhr::gen {

/// proj(n_1,...,n_k) with sum n_i = dimension, factors drawn at random.
ModelPtr proj_model(Rng& rng, int dimension);

/// Degree-1 class with every coefficient a positive rational.
GradedClass ample_class(Rng& rng, const ModelPtr& model);

/// Split bundle whose shifted roots all have strictly positive coefficients.
/// Roots have integer coefficients in [0, 3]; about half the draws add a
/// positive rational twist, the rest nudge zero coefficients up to 1.
SplitBundle ample_split_bundle(Rng& rng, const ModelPtr& model, int rank);

/// Uniformly chosen partition of n with parts at most max_part.
Partition partition(Rng& rng, int n, int max_part);

/// A^*A + c I with A a random Gaussian-rational d x d matrix and c > 0.
HermitianOneOne kahler_form(Rng& rng, int d);

}  // namespace schurhr::gen
