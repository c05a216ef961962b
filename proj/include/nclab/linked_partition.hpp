#pragma once

#include <compare>
#include <functional>
#include <span>
#include <vector>

#include "nclab/partition.hpp"

namespace nclab {

class LinkedPartitionError : public Error {
 public:
  enum class Kind {
    EmptyBlock,
    OutOfRange,
    RepeatedInBlock,
    MissingElement,
    TripleCoverage,
    LargeOverlap,       // two blocks share two or more elements
    SingletonOverlap,   // a one-element block meets another block
    EqualMinima,        // overlapping blocks with the same minimum
    SharedNotMinimum,   // shared element is the minimum of neither block
    Crossing,
  };

  LinkedPartitionError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A non-crossing linked partition: a family of blocks covering the ground
/// set where two distinct blocks are either disjoint or share exactly one
/// element, that element being the minimum of exactly one of them (and both
/// blocks having at least two elements). Blocks are ordered by (min, max).
class LinkedPartition {
 public:
  /// Validates everything above; throws LinkedPartitionError.
  LinkedPartition(std::vector<int> ground, std::vector<Block> raw_blocks);

  std::size_t size() const noexcept { return ground_.size(); }
  std::span<const int> ground() const noexcept { return ground_; }
  bool standard_ground() const noexcept;
  std::size_t position(int label) const;

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const Block& block(std::size_t i) const { return blocks_.at(i); }

  friend bool operator==(const LinkedPartition& a, const LinkedPartition& b) {
    return a.ground_ == b.ground_ && a.blocks_ == b.blocks_;
  }
  friend std::strong_ordering operator<=>(const LinkedPartition& a, const LinkedPartition& b) {
    if (auto c = a.ground_ <=> b.ground_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

 private:
  std::vector<int> ground_;
  std::vector<Block> blocks_;
};

LinkedPartition make_linked(int n, std::vector<Block> raw_blocks);
/// A plain partition viewed as a linked partition (must be non-crossing).
LinkedPartition as_linked(const Partition& p);

/// For each ground element (by position), the indices of the blocks that
/// contain it: one entry if singly covered, two if doubly covered.
struct CoverMap {
  std::vector<int> ground;
  std::vector<std::vector<std::size_t>> incidence;

  const std::vector<std::size_t>& blocks_containing(int label) const;
  bool doubly_covered(int label) const { return blocks_containing(label).size() == 2; }
  std::vector<int> doubly_covered_elements() const;
};

CoverMap cover(const LinkedPartition& p);

/// pi-hat: the finest partition with every block of p inside one of its
/// blocks (connected components of the overlap relation).
Partition generated(const LinkedPartition& p);

/// pi-check: min(A) is removed from A exactly when it is doubly covered.
Partition unlink(const LinkedPartition& p);

/// Restriction to a saturated subset `e` (every block meeting e lies in e).
/// Labels are kept. Throws PreconditionError for non-saturated `e`.
LinkedPartition restrict(const LinkedPartition& p, std::span<const int> e);

LinkedPartition normalized(const LinkedPartition& p);

/// Independent generator for NCL(n): processes 1..n in order, letting each
/// element open a block, join an earlier block, or both, with incremental
/// crossing checks. Used to cross-check the bijective generator.
void for_each_ncl_direct(int n, const std::function<void(const LinkedPartition&)>& visit);
std::vector<LinkedPartition> enumerate_ncl_direct(int n);

}  // namespace nclab

template <>
struct std::hash<nclab::LinkedPartition> {
  std::size_t operator()(const nclab::LinkedPartition& p) const noexcept;
};
