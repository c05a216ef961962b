#include "nclab/permutation.hpp"

#include <numeric>

namespace nclab {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  if (image_.empty()) throw ShapeError("permutation must act on a non-empty set");
  std::vector<bool> hit(image_.size(), false);
  for (int x : image_) {
    if (x < 1 || x > static_cast<int>(image_.size()) || hit[static_cast<std::size_t>(x - 1)]) {
      throw ShapeError("image is not a bijection of 1.." + std::to_string(image_.size()));
    }
    hit[static_cast<std::size_t>(x - 1)] = true;
  }
}

Permutation Permutation::identity(int n) { return Permutation(standard_ground(n)); }

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    inv[static_cast<std::size_t>(image_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> done(image_.size(), false);
  for (int start = 1; start <= static_cast<int>(image_.size()); ++start) {
    if (done[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    for (int x = start; !done[static_cast<std::size_t>(x - 1)]; x = (*this)(x)) {
      done[static_cast<std::size_t>(x - 1)] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw ShapeError("cannot compose permutations of different sizes");
  std::vector<int> image(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) image[i] = s(t.image()[i]);
  return Permutation(std::move(image));
}

Permutation perm_of(const Partition& a) {
  if (!a.standard_ground()) throw ShapeError("perm_of needs a partition of {1..n}");
  std::vector<int> image(a.size());
  for (const auto& b : a.blocks()) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      image[static_cast<std::size_t>(b[i] - 1)] = b[(i + 1) % b.size()];
    }
  }
  return Permutation(std::move(image));
}

Partition act(const Permutation& t, const Partition& a) {
  if (!a.standard_ground() || t.size() != a.size()) {
    throw ShapeError("permutation of size " + std::to_string(t.size()) +
                     " cannot act on a partition of size " + std::to_string(a.size()));
  }
  std::vector<Block> moved;
  moved.reserve(a.block_count());
  for (const auto& b : a.blocks()) {
    Block nb;
    nb.reserve(b.size());
    for (int x : b) nb.push_back(t(x));
    moved.push_back(std::move(nb));
  }
  return make_partition(static_cast<int>(a.size()), std::move(moved));
}

}  // namespace nclab
