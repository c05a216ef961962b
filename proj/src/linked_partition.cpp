#include "nclab/linked_partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "nclab/text_format.hpp"

namespace nclab {

namespace {

using Kind = LinkedPartitionError::Kind;

// True iff some a < b < a' < b' with a, a' in `a_blk` and b, b' in `b_blk`.
bool interleaves(const Block& a_blk, const Block& b_blk) {
  for (int b : b_blk) {
    if (b <= a_blk.front() || b >= a_blk.back()) continue;
    int next_a = *std::ranges::upper_bound(a_blk, b);
    if (b_blk.back() > next_a) return true;
  }
  return false;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

LinkedPartition::LinkedPartition(std::vector<int> ground, std::vector<Block> raw_blocks)
    : ground_(std::move(ground)) {
  if (ground_.empty()) throw ShapeError("ground set must be non-empty");
  if (std::adjacent_find(ground_.begin(), ground_.end(), std::greater_equal<>{}) != ground_.end()) {
    throw ShapeError("ground set must be strictly increasing");
  }

  for (auto& blk : raw_blocks) {
    if (blk.empty()) throw LinkedPartitionError(Kind::EmptyBlock, "empty block");
    std::ranges::sort(blk);
    if (auto it = std::ranges::adjacent_find(blk); it != blk.end()) {
      throw LinkedPartitionError(Kind::RepeatedInBlock,
                                 "element " + std::to_string(*it) + " repeated inside one block");
    }
    for (int x : blk) {
      if (!std::ranges::binary_search(ground_, x)) {
        throw LinkedPartitionError(Kind::OutOfRange, "element " + std::to_string(x) + " out of range");
      }
    }
  }
  std::ranges::sort(raw_blocks, [](const Block& a, const Block& b) {
    return std::pair(a.front(), a.back()) < std::pair(b.front(), b.back());
  });
  blocks_ = std::move(raw_blocks);

  std::vector<std::vector<std::size_t>> incidence(ground_.size());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (int x : blocks_[i]) incidence[position(x)].push_back(i);
  }
  for (std::size_t p = 0; p < ground_.size(); ++p) {
    if (incidence[p].size() >= 3) {
      throw LinkedPartitionError(Kind::TripleCoverage, "element " + std::to_string(ground_[p]) + " covered by " +
                                                           std::to_string(incidence[p].size()) + " blocks");
    }
  }
  for (std::size_t p = 0; p < ground_.size(); ++p) {
    if (incidence[p].empty()) {
      throw LinkedPartitionError(Kind::MissingElement, "element " + std::to_string(ground_[p]) + " missing");
    }
  }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<int>> shared;
  for (std::size_t p = 0; p < ground_.size(); ++p) {
    if (incidence[p].size() == 2) shared[{incidence[p][0], incidence[p][1]}].push_back(ground_[p]);
  }
  for (const auto& [pair, common] : shared) {
    const Block& a = blocks_[pair.first];
    const Block& b = blocks_[pair.second];
    std::string names = block_to_string(a) + " and " + block_to_string(b);
    if (common.size() >= 2) {
      throw LinkedPartitionError(Kind::LargeOverlap,
                                 "blocks " + names + " share " + std::to_string(common.size()) + " elements");
    }
    if (a.size() == 1 || b.size() == 1) {
      const Block& single = a.size() == 1 ? a : b;
      const Block& other = a.size() == 1 ? b : a;
      throw LinkedPartitionError(Kind::SingletonOverlap, "singleton block " + block_to_string(single) +
                                                             " overlaps block " + block_to_string(other));
    }
    if (a.front() == b.front()) {
      throw LinkedPartitionError(Kind::EqualMinima,
                                 "blocks " + names + " have the same minimum " + std::to_string(a.front()));
    }
    int x = common.front();
    if (x != a.front() && x != b.front()) {
      throw LinkedPartitionError(Kind::SharedNotMinimum, "shared element " + std::to_string(x) +
                                                             " is minimum of neither block " + names);
    }
  }

  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks_.size(); ++j) {
      if (interleaves(blocks_[i], blocks_[j]) || interleaves(blocks_[j], blocks_[i])) {
        throw LinkedPartitionError(Kind::Crossing, "blocks " + block_to_string(blocks_[i]) + " and " +
                                                       block_to_string(blocks_[j]) + " cross");
      }
    }
  }
}

bool LinkedPartition::standard_ground() const noexcept {
  return ground_.front() == 1 && ground_.back() == static_cast<int>(ground_.size());
}

std::size_t LinkedPartition::position(int label) const {
  auto it = std::ranges::lower_bound(ground_, label);
  if (it == ground_.end() || *it != label) {
    throw ShapeError("label " + std::to_string(label) + " is not in the ground set");
  }
  return static_cast<std::size_t>(it - ground_.begin());
}

LinkedPartition make_linked(int n, std::vector<Block> raw_blocks) {
  return LinkedPartition(standard_ground(n), std::move(raw_blocks));
}

LinkedPartition as_linked(const Partition& p) {
  return LinkedPartition(std::vector<int>(p.ground().begin(), p.ground().end()), p.blocks());
}

const std::vector<std::size_t>& CoverMap::blocks_containing(int label) const {
  auto it = std::ranges::lower_bound(ground, label);
  if (it == ground.end() || *it != label) {
    throw ShapeError("label " + std::to_string(label) + " is not in the ground set");
  }
  return incidence[static_cast<std::size_t>(it - ground.begin())];
}

std::vector<int> CoverMap::doubly_covered_elements() const {
  std::vector<int> out;
  for (std::size_t p = 0; p < ground.size(); ++p) {
    if (incidence[p].size() == 2) out.push_back(ground[p]);
  }
  return out;
}

CoverMap cover(const LinkedPartition& p) {
  CoverMap c{std::vector<int>(p.ground().begin(), p.ground().end()),
             std::vector<std::vector<std::size_t>>(p.size())};
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    for (int x : p.block(i)) c.incidence[p.position(x)].push_back(i);
  }
  return c;
}

Partition generated(const LinkedPartition& p) {
  std::vector<std::size_t> parent(p.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& blk : p.blocks()) {
    std::size_t first = find_root(parent, p.position(blk.front()));
    for (int x : blk) {
      std::size_t r = find_root(parent, p.position(x));
      if (r != first) parent[r] = first;
    }
  }
  std::map<std::size_t, Block> comps;
  for (std::size_t i = 0; i < p.size(); ++i) comps[find_root(parent, i)].push_back(p.ground()[i]);
  std::vector<Block> blocks;
  for (auto& [_, blk] : comps) blocks.push_back(std::move(blk));
  Partition hat(std::vector<int>(p.ground().begin(), p.ground().end()), std::move(blocks));
  if (!is_noncrossing(hat)) throw InternalError("generated partition " + to_text(hat) + " is crossing");
  return hat;
}

Partition unlink(const LinkedPartition& p) {
  auto c = cover(p);
  std::vector<Block> blocks;
  blocks.reserve(p.block_count());
  for (const auto& blk : p.blocks()) {
    if (c.doubly_covered(blk.front())) {
      blocks.emplace_back(blk.begin() + 1, blk.end());
    } else {
      blocks.push_back(blk);
    }
  }
  return Partition(std::vector<int>(p.ground().begin(), p.ground().end()), std::move(blocks));
}

LinkedPartition restrict(const LinkedPartition& p, std::span<const int> e) {
  std::vector<int> sub(e.begin(), e.end());
  std::vector<Block> kept;
  for (const auto& blk : p.blocks()) {
    auto inside = std::ranges::count_if(blk, [&](int x) { return std::ranges::binary_search(sub, x); });
    if (inside == 0) continue;
    if (static_cast<std::size_t>(inside) != blk.size()) {
      throw PreconditionError("set " + block_to_string(sub) + " is not saturated: block " +
                              block_to_string(blk) + " meets but exceeds it");
    }
    kept.push_back(blk);
  }
  for (int x : sub) p.position(x);
  return LinkedPartition(std::move(sub), std::move(kept));
}

LinkedPartition normalized(const LinkedPartition& p) {
  if (p.standard_ground()) return p;
  std::vector<Block> blocks;
  for (const auto& blk : p.blocks()) {
    Block nb;
    for (int x : blk) nb.push_back(static_cast<int>(p.position(x)) + 1);
    blocks.push_back(std::move(nb));
  }
  return make_linked(static_cast<int>(p.size()), std::move(blocks));
}

namespace {

struct DirectNcl {
  int n;
  const std::function<void(const LinkedPartition&)>& visit;
  std::vector<Block> blocks;
  std::vector<bool> needs_partner;  // opened by an element that also joined another block

  // Would appending m to block `target` complete a pattern c < b < c' < m?
  bool creates_crossing(std::size_t target, int m) const {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (j == target) continue;
      const Block& other = blocks[j];
      for (int b : blocks[target]) {
        if (b <= other.front()) continue;
        auto it = std::ranges::upper_bound(other, b);
        if (it != other.end() && *it < m) return true;
      }
    }
    return false;
  }

  void open_block(int m, bool partner) {
    blocks.push_back({m});
    needs_partner.push_back(partner);
  }

  void close_block() {
    blocks.pop_back();
    needs_partner.pop_back();
  }

  void place(int m) {
    if (m > n) {
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (needs_partner[i] && blocks[i].size() < 2) return;
      }
      visit(make_linked(n, blocks));
      return;
    }
    open_block(m, false);
    place(m + 1);
    close_block();

    const std::size_t existing = blocks.size();
    for (std::size_t i = 0; i < existing; ++i) {
      if (creates_crossing(i, m)) continue;
      blocks[i].push_back(m);
      place(m + 1);
      open_block(m, true);
      place(m + 1);
      close_block();
      blocks[i].pop_back();
    }
  }
};

}  // namespace

void for_each_ncl_direct(int n, const std::function<void(const LinkedPartition&)>& visit) {
  if (n < 1) throw ShapeError("n must be positive, got " + std::to_string(n));
  DirectNcl gen{n, visit, {}, {}};
  gen.place(1);
}

std::vector<LinkedPartition> enumerate_ncl_direct(int n) {
  std::vector<LinkedPartition> out;
  for_each_ncl_direct(n, [&](const LinkedPartition& p) { out.push_back(p); });
  return out;
}

}  // namespace nclab

std::size_t std::hash<nclab::LinkedPartition>::operator()(const nclab::LinkedPartition& p) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(p.size());
  for (const auto& b : p.blocks()) {
    for (int x : b) h = h * 1000003u ^ static_cast<std::size_t>(x);
    h = h * 31u + 0x9e3779b9u;
  }
  return h;
}
