#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nclab/error.hpp"
#include "nclab/numeric.hpp"

namespace nclab {

/// Strictly increasing list of labels.
using Block = std::vector<int>;

class PartitionError : public Error {
 public:
  enum class Kind { EmptyBlock, OutOfRange, RepeatedElement, MissingElement };

  PartitionError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A set partition of a finite, increasing ground set of labels, normally
/// {1..n}. Blocks are kept in canonical form: each block increasing, blocks
/// ordered by their minimum. Two partitions compare equal iff they have the
/// same ground set and the same blocks.
class Partition {
 public:
  /// Validates and canonicalizes. Throws PartitionError.
  Partition(std::vector<int> ground, std::vector<Block> raw_blocks);

  std::size_t size() const noexcept { return ground_.size(); }
  std::span<const int> ground() const noexcept { return ground_; }
  bool standard_ground() const noexcept;

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const Block& block(std::size_t i) const { return blocks_.at(i); }

  /// Index into ground() of a label; throws ShapeError for foreign labels.
  std::size_t position(int label) const;
  bool contains(int label) const noexcept;
  /// Index of the block containing `label`.
  std::size_t block_of(int label) const { return owner_[position(label)]; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.ground_ == b.ground_ && a.blocks_ == b.blocks_;
  }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.ground_ <=> b.ground_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

 private:
  std::vector<int> ground_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> owner_;  // block index, by ground position
};

/// Builds a partition of {1..n}; rejects overlap, gaps, out-of-range labels
/// and empty blocks with distinct diagnostics.
Partition make_partition(int n, std::vector<Block> raw_blocks);

std::vector<int> standard_ground(int n);
/// 0_n: n singletons.
Partition finest(int n);
/// 1_n: a single block.
Partition coarsest(int n);
/// Partition of an arbitrary ground set into singletons / one block.
Partition finest_on(std::vector<int> ground);
Partition coarsest_on(std::vector<int> ground);

/// Order-isomorphic copy on {1..n}.
Partition normalized(const Partition& p);
/// Order-isomorphic copy of a standard partition on `ground`.
Partition relabeled(const Partition& p, std::span<const int> ground);

/// Restriction to a union of blocks `e`. Throws PreconditionError when
/// some block meets `e` without being contained in it.
Partition restrict(const Partition& p, std::span<const int> e);

/// True iff no two blocks A != B have a < b < a' < b' with a,a' in A and
/// b,b' in B.
bool is_noncrossing(const Partition& p);

/// Reverse refinement: every block of `a` lies inside a block of `b`.
/// Throws ShapeError on different ground sets.
bool leq(const Partition& a, const Partition& b);

/// a << b: a <= b and for every block W of b, min(W) and max(W) share a
/// block of a. Both arguments must be non-crossing (PreconditionError).
bool ll(const Partition& a, const Partition& b);

/// Human-readable reason why `a << b` fails, or nullopt when it holds.
std::optional<std::string> ll_violation(const Partition& a, const Partition& b);

/// Block index sets of a partition `a` relative to some b with a << b.
/// Indices refer to a.blocks() and are sorted increasingly.
struct BlockClassification {
  std::vector<std::size_t> special;
  std::vector<std::size_t> inner;
  std::vector<std::size_t> outer;

  bool is_special(std::size_t i) const;
  bool is_inner(std::size_t i) const;

  friend bool operator==(const BlockClassification&, const BlockClassification&) = default;
};

/// Per block of `a`: true when some other block spans it strictly
/// (smaller minimum and larger maximum).
std::vector<bool> inner_mask(const Partition& a);
std::size_t inner_count(const Partition& a);

/// Special blocks of `a` relative to `b` plus the inner/outer split of `a`.
/// Requires ll(a, b).
BlockClassification classify_blocks(const Partition& a, const Partition& b);

/// The bottom of {alpha : alpha << b}: blocks of size >= 3 are split into
/// the pair {min, max} and singletons; smaller blocks are kept.
Partition beta_floor(const Partition& b);

/// Cat_k = (2k)! / (k! (k+1)!).
Integer catalan(unsigned k);

/// |{alpha in NC(n) : alpha << b}| as the product of Cat_{|W|-1}.
Integer count_below_ll(const Partition& b);

/// |{beta in NC(n) : a << beta}| = 2^(number of inner blocks of a).
Integer count_above_ll(const Partition& a);

}  // namespace nclab

template <>
struct std::hash<nclab::Partition> {
  std::size_t operator()(const nclab::Partition& p) const noexcept;
};
