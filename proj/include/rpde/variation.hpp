#pragma once

#include <cstddef>

#include "rpde/control.hpp"
#include "rpde/two_index.hpp"

namespace rpde {

/// 1/alpha-variation of a 2-index map over the grid window [lo, hi]:
/// sup over grid partitions of (sum |g_{t_i t_{i+1}}|^p)^(1/p), computed
/// exactly by dynamic programming over right endpoints. Entries of
/// dimension > 1 are measured in the Euclidean norm.
double p_variation(const TwoIndexMap& g, double p, std::size_t lo, std::size_t hi);

/// p-variation over the whole grid.
double p_variation(const TwoIndexMap& g, double p);

/// p-variation^p on every grid pair (superadditive by construction); the
/// interval DP costs O(n^3) overall.
ControlGrid p_variation_control(const TwoIndexMap& g, double p);

}  // namespace rpde
