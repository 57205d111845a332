#include "schurhr/partition.hpp"

#include <charconv>
#include <algorithm>
#include <functional>

#include "schurhr/errors.hpp"

namespace schurhr {

Partition::Partition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw InvalidArgument("partition parts must be nonnegative");
    if (i > 0 && parts[i] > parts[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  parts_ = std::move(parts);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidArgument("bad partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::column(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); }

Partition Partition::row(int k) { return Partition(std::vector<int>{k}); }

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

Partition Partition::conjugate() const {
  std::vector<int> conj(static_cast<std::size_t>(largest()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> partitions_of(int n, int max_part, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_parts) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

}  // namespace schurhr
