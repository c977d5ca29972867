#include "schurlc/enumerate.hpp"

#include <algorithm>

namespace schurlc {

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

void subpartitions_rec(const Partition& outer, int row, int max_part,
                       std::vector<int>& prefix, std::vector<Partition>& out) {
  out.push_back(Partition(prefix));
  if (row >= outer.length()) return;
  for (int p = 1; p <= std::min(outer.part_at(row), max_part); ++p) {
    prefix.push_back(p);
    subpartitions_rec(outer, row + 1, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  if (n >= 0) partitions_rec(n, n == 0 ? 1 : n, prefix, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto part = partitions_of(k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Partition> subpartitions_of(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  subpartitions_rec(outer, 0, outer.part_at(0), prefix, out);
  return out;
}

std::vector<SkewShape> skew_shapes_up_to(int max_outer_size) {
  std::vector<SkewShape> out;
  for (const Partition& outer : partitions_up_to(max_outer_size))
    for (const Partition& inner : subpartitions_of(outer))
      out.push_back(SkewShape(outer, inner));
  return out;
}

}  // namespace schurlc
