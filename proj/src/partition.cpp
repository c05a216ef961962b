#include "nclab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nclab/text_format.hpp"

namespace nclab {

namespace {

void check_ground(const std::vector<int>& ground) {
  if (ground.empty()) throw ShapeError("ground set must be non-empty");
  for (std::size_t i = 1; i < ground.size(); ++i) {
    if (ground[i - 1] >= ground[i]) throw ShapeError("ground set must be strictly increasing");
  }
}

std::string range_text(const std::vector<int>& ground) {
  if (ground.back() - ground.front() + 1 == static_cast<int>(ground.size())) {
    return std::to_string(ground.front()) + ".." + std::to_string(ground.back());
  }
  return block_to_string(ground);
}

void require_same_ground(const Partition& a, const Partition& b) {
  if (!std::ranges::equal(a.ground(), b.ground())) {
    throw ShapeError("partitions live on different ground sets (sizes " +
                     std::to_string(a.size()) + " and " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

Partition::Partition(std::vector<int> ground, std::vector<Block> raw_blocks)
    : ground_(std::move(ground)) {
  check_ground(ground_);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> seen(ground_.size(), kUnset);
  for (auto& block : raw_blocks) {
    if (block.empty()) {
      throw PartitionError(PartitionError::Kind::EmptyBlock, "empty block");
    }
    std::ranges::sort(block);
    for (int x : block) {
      if (!contains(x)) {
        throw PartitionError(PartitionError::Kind::OutOfRange,
                             "element " + std::to_string(x) + " out of range " + range_text(ground_));
      }
      auto pos = position(x);
      if (seen[pos] != kUnset) {
        throw PartitionError(PartitionError::Kind::RepeatedElement,
                             "element " + std::to_string(x) + " repeated");
      }
      seen[pos] = 0;
    }
  }
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (seen[i] == kUnset) {
      throw PartitionError(PartitionError::Kind::MissingElement,
                           "element " + std::to_string(ground_[i]) + " missing");
    }
  }
  std::ranges::sort(raw_blocks, {}, [](const Block& b) { return b.front(); });
  blocks_ = std::move(raw_blocks);
  owner_.assign(ground_.size(), 0);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (int x : blocks_[i]) owner_[position(x)] = i;
  }
}

bool Partition::standard_ground() const noexcept {
  return ground_.front() == 1 && ground_.back() == static_cast<int>(ground_.size());
}

bool Partition::contains(int label) const noexcept {
  if (standard_ground()) return label >= 1 && label <= static_cast<int>(ground_.size());
  return std::ranges::binary_search(ground_, label);
}

std::size_t Partition::position(int label) const {
  if (standard_ground()) {
    if (label >= 1 && label <= static_cast<int>(ground_.size())) return static_cast<std::size_t>(label - 1);
  } else if (auto it = std::ranges::lower_bound(ground_, label); it != ground_.end() && *it == label) {
    return static_cast<std::size_t>(it - ground_.begin());
  }
  throw ShapeError("label " + std::to_string(label) + " is not in the ground set");
}

std::vector<int> standard_ground(int n) {
  if (n < 1) throw ShapeError("n must be positive, got " + std::to_string(n));
  std::vector<int> g(static_cast<std::size_t>(n));
  std::iota(g.begin(), g.end(), 1);
  return g;
}

Partition make_partition(int n, std::vector<Block> raw_blocks) {
  return Partition(standard_ground(n), std::move(raw_blocks));
}

Partition finest(int n) { return finest_on(standard_ground(n)); }
Partition coarsest(int n) { return coarsest_on(standard_ground(n)); }

Partition finest_on(std::vector<int> ground) {
  std::vector<Block> blocks;
  blocks.reserve(ground.size());
  for (int x : ground) blocks.push_back({x});
  return Partition(std::move(ground), std::move(blocks));
}

Partition coarsest_on(std::vector<int> ground) {
  Block all = ground;
  return Partition(std::move(ground), {std::move(all)});
}

Partition normalized(const Partition& p) {
  if (p.standard_ground()) return p;
  std::vector<Block> blocks;
  blocks.reserve(p.block_count());
  for (const auto& b : p.blocks()) {
    Block nb;
    nb.reserve(b.size());
    for (int x : b) nb.push_back(static_cast<int>(p.position(x)) + 1);
    blocks.push_back(std::move(nb));
  }
  return make_partition(static_cast<int>(p.size()), std::move(blocks));
}

Partition relabeled(const Partition& p, std::span<const int> ground) {
  if (!p.standard_ground() || p.size() != ground.size()) {
    throw ShapeError("relabeling needs a standard partition of matching size");
  }
  std::vector<Block> blocks;
  blocks.reserve(p.block_count());
  for (const auto& b : p.blocks()) {
    Block nb;
    nb.reserve(b.size());
    for (int x : b) nb.push_back(ground[static_cast<std::size_t>(x - 1)]);
    blocks.push_back(std::move(nb));
  }
  return Partition(std::vector<int>(ground.begin(), ground.end()), std::move(blocks));
}

Partition restrict(const Partition& p, std::span<const int> e) {
  std::vector<int> sub(e.begin(), e.end());
  check_ground(sub);
  for (int x : sub) {
    if (!p.contains(x)) throw ShapeError("label " + std::to_string(x) + " is not in the ground set");
  }
  std::vector<Block> kept;
  for (const auto& b : p.blocks()) {
    auto inside = std::ranges::count_if(b, [&](int x) { return std::ranges::binary_search(sub, x); });
    if (inside == 0) continue;
    if (static_cast<std::size_t>(inside) != b.size()) {
      throw PreconditionError("set " + block_to_string(sub) + " is not saturated: block " +
                              block_to_string(b) + " meets but exceeds it");
    }
    kept.push_back(b);
  }
  return Partition(std::move(sub), std::move(kept));
}

bool is_noncrossing(const Partition& p) {
  // Scan left to right keeping a stack of blocks that have been opened and
  // not yet closed. A repeat visit to a block that is not on top of the
  // stack means some block opened in between is still open: a crossing.
  std::vector<std::size_t> remaining(p.block_count());
  for (std::size_t i = 0; i < p.block_count(); ++i) remaining[i] = p.block(i).size();
  std::vector<std::size_t> open;
  std::vector<bool> started(p.block_count(), false);
  for (int x : p.ground()) {
    std::size_t b = p.block_of(x);
    if (started[b]) {
      if (open.empty() || open.back() != b) return false;
    } else {
      started[b] = true;
      open.push_back(b);
    }
    if (--remaining[b] == 0) open.pop_back();
  }
  return true;
}

bool leq(const Partition& a, const Partition& b) {
  require_same_ground(a, b);
  for (const auto& block : a.blocks()) {
    std::size_t target = b.block_of(block.front());
    for (int x : block) {
      if (b.block_of(x) != target) return false;
    }
  }
  return true;
}

std::optional<std::string> ll_violation(const Partition& a, const Partition& b) {
  require_same_ground(a, b);
  if (!is_noncrossing(a)) throw PreconditionError("alpha " + to_text(a) + " is not non-crossing");
  if (!is_noncrossing(b)) throw PreconditionError("beta " + to_text(b) + " is not non-crossing");
  for (const auto& block : a.blocks()) {
    std::size_t target = b.block_of(block.front());
    for (int x : block) {
      if (b.block_of(x) != target) {
        return "block " + block_to_string(block) + ": not contained in a single block of β";
      }
    }
  }
  for (const auto& w : b.blocks()) {
    if (a.block_of(w.front()) != a.block_of(w.back())) {
      return "block " + block_to_string(w) + ": min/max not together in α";
    }
  }
  return std::nullopt;
}

bool ll(const Partition& a, const Partition& b) { return !ll_violation(a, b).has_value(); }

bool BlockClassification::is_special(std::size_t i) const {
  return std::ranges::binary_search(special, i);
}

bool BlockClassification::is_inner(std::size_t i) const {
  return std::ranges::binary_search(inner, i);
}

std::vector<bool> inner_mask(const Partition& a) {
  // Blocks are sorted by minimum, so a spanning block must come earlier.
  std::vector<bool> mask(a.block_count(), false);
  int reach = 0;
  bool any = false;
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    const auto& v = a.block(i);
    if (any && reach > v.back()) mask[i] = true;
    reach = any ? std::max(reach, v.back()) : v.back();
    any = true;
  }
  return mask;
}

std::size_t inner_count(const Partition& a) {
  auto mask = inner_mask(a);
  return static_cast<std::size_t>(std::ranges::count(mask, true));
}

BlockClassification classify_blocks(const Partition& a, const Partition& b) {
  if (auto why = ll_violation(a, b)) throw PreconditionError(*why);
  BlockClassification c;
  for (const auto& w : b.blocks()) c.special.push_back(a.block_of(w.front()));
  std::ranges::sort(c.special);
  auto mask = inner_mask(a);
  for (std::size_t i = 0; i < mask.size(); ++i) (mask[i] ? c.inner : c.outer).push_back(i);
  return c;
}

Partition beta_floor(const Partition& b) {
  if (!is_noncrossing(b)) throw PreconditionError("partition " + to_text(b) + " is not non-crossing");
  std::vector<Block> blocks;
  for (const auto& w : b.blocks()) {
    if (w.size() <= 2) {
      blocks.push_back(w);
      continue;
    }
    blocks.push_back({w.front(), w.back()});
    for (std::size_t i = 1; i + 1 < w.size(); ++i) blocks.push_back({w[i]});
  }
  return Partition(std::vector<int>(b.ground().begin(), b.ground().end()), std::move(blocks));
}

Integer catalan(unsigned k) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), 2UL * k, k);
  c /= k + 1;
  return c;
}

Integer count_below_ll(const Partition& b) {
  if (!is_noncrossing(b)) throw PreconditionError("partition " + to_text(b) + " is not non-crossing");
  Integer total = 1;
  for (const auto& w : b.blocks()) total *= catalan(static_cast<unsigned>(w.size() - 1));
  return total;
}

Integer count_above_ll(const Partition& a) {
  if (!is_noncrossing(a)) throw PreconditionError("partition " + to_text(a) + " is not non-crossing");
  Integer total;
  mpz_ui_pow_ui(total.get_mpz_t(), 2, inner_count(a));
  return total;
}

}  // namespace nclab

std::size_t std::hash<nclab::Partition>::operator()(const nclab::Partition& p) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(p.size());
  for (const auto& b : p.blocks()) {
    for (int x : b) h = h * 1000003u ^ static_cast<std::size_t>(x);
    h = h * 31u + 0x9e3779b9u;
  }
  return h;
}
