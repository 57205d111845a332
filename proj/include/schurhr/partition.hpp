#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace schurhr {

/// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// dropped on construction, so (2,1,0) and (2,1) compare equal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Comma-separated integers, e.g. "2,1,0". "0" is the empty partition.
  static Partition parse(std::string_view text);
  /// (1,1,...,1) with k parts.
  static Partition column(int k);
  /// (k).
  static Partition row(int k);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  bool fits_rank(int rank) const { return largest() <= rank; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;

  /// "2,1"; the empty partition prints as "0".
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n with at most `max_parts` parts, each part at most
/// `max_part`, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n, int max_part, int max_parts);

}  // namespace schurhr
