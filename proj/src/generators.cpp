#include "schurhr/generators.hpp"

namespace schurhr::gen {

ModelPtr proj_model(Rng& rng, int dimension) {
  if (dimension < 1) throw InvalidArgument("proj_model: dimension must be positive");
  std::vector<int> dims;
  int left = dimension;
  while (left > 0) {
    int n = static_cast<int>(rng.range(1, left));
    dims.push_back(n);
    left -= n;
  }
  return RingModel::proj_product(std::move(dims));
}

GradedClass ample_class(Rng& rng, const ModelPtr& model) {
  RationalVector coeffs;
  for (int i = 0; i < model->generator_count(); ++i) coeffs.push_back(rng.positive_rational(4, 3));
  return GradedClass::linear(model, coeffs);
}

SplitBundle ample_split_bundle(Rng& rng, const ModelPtr& model, int rank) {
  const int k = model->generator_count();
  const bool twisted = rng.coin();
  std::vector<RationalVector> roots;
  for (int r = 0; r < rank; ++r) {
    RationalVector root;
    for (int i = 0; i < k; ++i) {
      long c = rng.range(0, 3);
      if (!twisted && c == 0) c = 1;
      root.emplace_back(c);
    }
    roots.push_back(std::move(root));
  }
  RationalVector twist;
  if (twisted) {
    for (int i = 0; i < k; ++i) twist.push_back(rng.positive_rational(3, 4));
  }
  return SplitBundle::from_coefficients(model, roots, twist);
}

Partition partition(Rng& rng, int n, int max_part) {
  auto all = partitions_of(n, max_part, n);
  if (all.empty()) throw InvalidArgument("no partition of " + std::to_string(n) + " with that part bound");
  return all[rng.below(all.size())];
}

HermitianOneOne kahler_form(Rng& rng, int d) {
  const auto n = static_cast<std::size_t>(d);
  Matrix<GaussianRational> a(n, n, GaussianRational());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) a(j, k) = {rng.rational(-2, 2, 2), rng.rational(-2, 2, 2)};
  Matrix<GaussianRational> h(n, n, GaussianRational());
  const Rational shift = rng.positive_rational(2, 3);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      GaussianRational sum = j == k ? GaussianRational(shift) : GaussianRational();
      for (std::size_t r = 0; r < n; ++r) sum += a(r, j).conj() * a(r, k);
      h(j, k) = sum;
    }
  return HermitianOneOne(std::move(h));
}

}  // namespace schurhr::gen
