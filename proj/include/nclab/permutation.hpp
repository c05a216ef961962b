#pragma once

#include <span>
#include <string>
#include <vector>

#include "nclab/partition.hpp"

namespace nclab {

/// A bijection of {1..n}, stored as its image list.
class Permutation {
 public:
  /// Throws ShapeError unless `image` holds each of 1..n exactly once.
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  std::size_t size() const noexcept { return image_.size(); }
  std::span<const int> image() const noexcept { return image_; }
  int operator()(int i) const { return image_.at(static_cast<std::size_t>(i - 1)); }

  Permutation inverse() const;

  /// Cycles with each cycle starting at its smallest element, ordered by
  /// that element. Fixed points are included as 1-cycles.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// (s o t)(i) = s(t(i)).
Permutation compose(const Permutation& s, const Permutation& t);

/// P_a: every block {i_1 < ... < i_m} becomes the cycle i_1 -> i_2 -> ... -> i_m -> i_1.
Permutation perm_of(const Partition& a);

/// t . a = {t(V) : V block of a}, in canonical form. Both on {1..n}.
Partition act(const Permutation& t, const Partition& a);

}  // namespace nclab
