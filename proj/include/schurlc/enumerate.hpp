#pragma once

#include <vector>

#include "schurlc/partition.hpp"

namespace schurlc {

/// All partitions of n, in the order produced by first-part descent.
std::vector<Partition> partitions_of(int n);

/// All partitions of every size 0..n.
std::vector<Partition> partitions_up_to(int n);

/// All partitions contained in the diagram of outer (the inner shapes of
/// valid skew pairs with this outer partition).
std::vector<Partition> subpartitions_of(const Partition& outer);

/// All valid skew shapes with |outer| <= max_outer_size.
std::vector<SkewShape> skew_shapes_up_to(int max_outer_size);

}  // namespace schurlc
