#pragma once

#include <functional>
#include <vector>

#include "nclab/partition.hpp"

namespace nclab {

/// Visits every element of NC(n) exactly once, in increasing lexicographic
/// order of the restricted growth string (the block number of 1, 2, ..., n
/// with blocks numbered by their minima). Cat_n calls in total.
void for_each_nc(int n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_nc(int n);

/// Visits {alpha in NC(n) : alpha << b}. Built block by block: a block W
/// with |W| = m >= 2 contributes one gamma in NC(m-1) on the first m-1
/// elements of W, with max(W) joined to the part holding min(W).
void for_each_below_ll(const Partition& b, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_below_ll(const Partition& b);

struct AboveLL {
  Partition beta;
  /// Indices (into a.blocks()) of the beta-special blocks of a.
  std::vector<std::size_t> special;
};

/// Visits {beta in NC(n) : a << beta}, one per set of special blocks of a
/// containing all outer blocks. Each non-special block is merged into the
/// beta-block of its nearest enclosing special block. Order: the bitmask
/// over inner blocks (bit i = i-th inner block is special) increases.
void for_each_above_ll(const Partition& a, const std::function<void(const AboveLL&)>& visit);
std::vector<AboveLL> enumerate_above_ll(const Partition& a);

}  // namespace nclab
