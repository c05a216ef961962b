#pragma once

#include <functional>
#include <vector>

#include "nclab/linked_partition.hpp"
#include "nclab/permutation.hpp"

namespace nclab {

struct PartitionPair {
  Partition alpha;
  Partition beta;

  friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
};

/// pi-circle = P_{pi-hat}^{-1} . pi-check. Always satisfies pi-circle << pi-hat.
Partition cycled_unlink(const LinkedPartition& p);

/// (cycled_unlink(p), generated(p)).
PartitionPair to_pair(const LinkedPartition& p);

/// Inverse of to_pair. Requires ll(alpha, beta) (PreconditionError otherwise).
///
/// The unlinking is recovered as c = P_beta . alpha. Inside every block W of
/// beta, a block V of c with min(V) != min(W) came from a block whose
/// doubly covered minimum was dropped; that minimum is the element of W
/// immediately before min(V), so it is put back. Blocks of c starting at
/// min(W) are kept as they are.
LinkedPartition from_pair(const Partition& alpha, const Partition& beta);

/// Every element of NCL(n) once: beta runs over NC(n) in for_each_nc order
/// and, for each beta, alpha over for_each_below_ll(beta).
void for_each_ncl(int n, const std::function<void(const LinkedPartition&)>& visit);
std::vector<LinkedPartition> enumerate_ncl(int n);

/// sum over beta in NC(n) of prod_{W in beta} Cat_{|W|-1}; no NCL enumeration.
Integer ncl_count(int n);

/// sum over alpha in NC(n) of 2^(inner blocks of alpha): red/blue colourings
/// of the blocks with every outer block red.
Integer coloured_count(int n);

/// Large Schroeder number r_k (1, 2, 6, 22, 90, ...), by the three-term
/// recurrence (k+1) r_k = 3(2k-1) r_{k-1} - (k-2) r_{k-2}.
Integer schroeder(unsigned k);

}  // namespace nclab
