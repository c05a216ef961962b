#include "nclab/nc_enumerate.hpp"

#include <algorithm>
#include <map>

#include "nclab/text_format.hpp"

namespace nclab {

namespace {

// Blocks are numbered in creation order; `open` is the stack of blocks that
// may still receive elements. Joining block open[s] closes everything above
// it, which is exactly the non-crossing constraint.
struct NcBacktrack {
  int n;
  const std::function<void(const Partition&)>& visit;
  std::vector<Block> blocks;

  void place(int k, std::vector<std::size_t>& open) {
    if (k > n) {
      visit(make_partition(n, blocks));
      return;
    }
    for (std::size_t s = 0; s < open.size(); ++s) {
      std::vector<std::size_t> next(open.begin(), open.begin() + static_cast<std::ptrdiff_t>(s) + 1);
      blocks[open[s]].push_back(k);
      place(k + 1, next);
      blocks[open[s]].pop_back();
    }
    blocks.push_back({k});
    open.push_back(blocks.size() - 1);
    place(k + 1, open);
    open.pop_back();
    blocks.pop_back();
  }
};

void require_nc(const Partition& p) {
  if (!is_noncrossing(p)) throw PreconditionError("partition " + to_text(p) + " is not non-crossing");
}

}  // namespace

void for_each_nc(int n, const std::function<void(const Partition&)>& visit) {
  if (n < 1) throw ShapeError("n must be positive, got " + std::to_string(n));
  NcBacktrack bt{n, visit, {}};
  std::vector<std::size_t> open;
  bt.place(1, open);
}

std::vector<Partition> enumerate_nc(int n) {
  std::vector<Partition> out;
  for_each_nc(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

void for_each_below_ll(const Partition& b, const std::function<void(const Partition&)>& visit) {
  require_nc(b);
  // Local shapes depend only on |W|: gamma in NC(m-1) with m appended to
  // the block of 1, in local coordinates 1..m.
  std::map<std::size_t, std::vector<std::vector<Block>>> shapes;
  for (const auto& w : b.blocks()) {
    std::size_t m = w.size();
    if (shapes.contains(m)) continue;
    auto& list = shapes[m];
    if (m == 1) {
      list.push_back({{1}});
      continue;
    }
    for_each_nc(static_cast<int>(m - 1), [&](const Partition& gamma) {
      std::vector<Block> local = gamma.blocks();
      local.front().push_back(static_cast<int>(m));
      list.push_back(std::move(local));
    });
  }

  std::vector<const std::vector<std::vector<Block>>*> options;
  for (const auto& w : b.blocks()) options.push_back(&shapes.at(w.size()));
  std::vector<std::size_t> choice(options.size(), 0);
  std::vector<int> ground(b.ground().begin(), b.ground().end());
  while (true) {
    std::vector<Block> blocks;
    for (std::size_t j = 0; j < options.size(); ++j) {
      const auto& w = b.block(j);
      for (const auto& local : (*options[j])[choice[j]]) {
        Block nb;
        nb.reserve(local.size());
        for (int x : local) nb.push_back(w[static_cast<std::size_t>(x - 1)]);
        blocks.push_back(std::move(nb));
      }
    }
    visit(Partition(ground, std::move(blocks)));

    // Odometer with the last block varying fastest.
    std::size_t j = options.size();
    while (j > 0) {
      --j;
      if (++choice[j] < options[j]->size()) break;
      choice[j] = 0;
      if (j == 0) return;
    }
  }
}

std::vector<Partition> enumerate_below_ll(const Partition& b) {
  std::vector<Partition> out;
  for_each_below_ll(b, [&](const Partition& p) { out.push_back(p); });
  return out;
}

void for_each_above_ll(const Partition& a, const std::function<void(const AboveLL&)>& visit) {
  require_nc(a);
  const std::size_t k = a.block_count();
  auto inner = inner_mask(a);

  // parent[i]: innermost block enclosing block i (blocks are sorted by
  // minimum, so it is the last earlier block reaching past max(i)).
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(k, kNone);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j-- > 0;) {
      if (a.block(j).back() > a.block(i).back()) {
        parent[i] = j;
        break;
      }
    }
  }

  std::vector<std::size_t> inner_ids;
  for (std::size_t i = 0; i < k; ++i) {
    if (inner[i]) inner_ids.push_back(i);
  }
  if (inner_ids.size() >= 63) throw ShapeError("too many inner blocks to enumerate");

  std::vector<int> ground(a.ground().begin(), a.ground().end());
  const unsigned long long total = 1ULL << inner_ids.size();
  for (unsigned long long mask = 0; mask < total; ++mask) {
    std::vector<bool> special(k, true);
    for (std::size_t bit = 0; bit < inner_ids.size(); ++bit) {
      special[inner_ids[bit]] = ((mask >> bit) & 1ULL) != 0;
    }
    std::map<std::size_t, Block> merged;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t r = i;
      while (!special[r]) r = parent[r];
      auto& target = merged[r];
      target.insert(target.end(), a.block(i).begin(), a.block(i).end());
    }
    std::vector<Block> blocks;
    blocks.reserve(merged.size());
    for (auto& [_, blk] : merged) blocks.push_back(std::move(blk));
    AboveLL item{Partition(ground, std::move(blocks)), {}};
    for (std::size_t i = 0; i < k; ++i) {
      if (special[i]) item.special.push_back(i);
    }
    visit(item);
  }
}

std::vector<AboveLL> enumerate_above_ll(const Partition& a) {
  std::vector<AboveLL> out;
  for_each_above_ll(a, [&](const AboveLL& x) { out.push_back(x); });
  return out;
}

}  // namespace nclab
