#include "nclab/ncl_bijection.hpp"

#include <algorithm>

#include "nclab/nc_enumerate.hpp"
#include "nclab/text_format.hpp"

namespace nclab {

Partition cycled_unlink(const LinkedPartition& p) {
  if (!p.standard_ground()) {
    auto local = normalized(p);
    return relabeled(cycled_unlink(local), p.ground());
  }
  return act(perm_of(generated(p)).inverse(), unlink(p));
}

PartitionPair to_pair(const LinkedPartition& p) { return {cycled_unlink(p), generated(p)}; }

LinkedPartition from_pair(const Partition& alpha, const Partition& beta) {
  if (auto why = ll_violation(alpha, beta)) throw PreconditionError(*why);
  if (!alpha.standard_ground()) {
    auto local = from_pair(normalized(alpha), normalized(beta));
    std::vector<Block> blocks;
    for (const auto& blk : local.blocks()) {
      Block nb;
      for (int x : blk) nb.push_back(alpha.ground()[static_cast<std::size_t>(x - 1)]);
      blocks.push_back(std::move(nb));
    }
    return LinkedPartition(std::vector<int>(alpha.ground().begin(), alpha.ground().end()), std::move(blocks));
  }

  Partition unlinking = act(perm_of(beta), alpha);
  std::vector<Block> blocks;
  blocks.reserve(unlinking.block_count());
  for (const auto& v : unlinking.blocks()) {
    const Block& w = beta.block(beta.block_of(v.front()));
    if (v.front() == w.front()) {
      blocks.push_back(v);
      continue;
    }
    auto it = std::ranges::lower_bound(w, v.front());
    Block linked;
    linked.reserve(v.size() + 1);
    linked.push_back(*std::prev(it));
    linked.insert(linked.end(), v.begin(), v.end());
    blocks.push_back(std::move(linked));
  }
  try {
    return make_linked(static_cast<int>(alpha.size()), std::move(blocks));
  } catch (const LinkedPartitionError& e) {
    throw InternalError("from_pair(" + to_text(alpha) + ", " + to_text(beta) +
                        ") built an invalid linked partition: " + e.what());
  }
}

void for_each_ncl(int n, const std::function<void(const LinkedPartition&)>& visit) {
  for_each_nc(n, [&](const Partition& beta) {
    for_each_below_ll(beta, [&](const Partition& alpha) { visit(from_pair(alpha, beta)); });
  });
}

std::vector<LinkedPartition> enumerate_ncl(int n) {
  std::vector<LinkedPartition> out;
  for_each_ncl(n, [&](const LinkedPartition& p) { out.push_back(p); });
  return out;
}

Integer ncl_count(int n) {
  Integer total = 0;
  for_each_nc(n, [&](const Partition& beta) { total += count_below_ll(beta); });
  return total;
}

Integer coloured_count(int n) {
  Integer total = 0;
  for_each_nc(n, [&](const Partition& alpha) {
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), 2, inner_count(alpha));
    total += term;
  });
  return total;
}

Integer schroeder(unsigned k) {
  Integer prev = 1;  // r_0
  if (k == 0) return prev;
  Integer cur = 2;  // r_1
  for (unsigned j = 2; j <= k; ++j) {
    Integer next = (3 * (2 * Integer(j) - 1) * cur - (Integer(j) - 2) * prev) / (j + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace nclab
