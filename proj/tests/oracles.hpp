#pragma once

// Definition-level brute force used only as independent test oracles.
// Nothing here calls into the library's enumeration code.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Blocks = std::vector<std::vector<int>>;

inline Blocks sorted_blocks(Blocks b) {
  for (auto& x : b) std::sort(x.begin(), x.end());
  std::sort(b.begin(), b.end(), [](const auto& l, const auto& r) {
    return std::pair(l.front(), l.back()) < std::pair(r.front(), r.back());
  });
  return b;
}

/// Every set partition of {1..n} (Bell(n) of them).
inline std::vector<Blocks> all_set_partitions(int n) {
  std::vector<Blocks> out;
  Blocks cur;
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      out.push_back(sorted_blocks(cur));
      return;
    }
    // indexed: the recursion below grows `cur`
    for (std::size_t k = 0; k < cur.size(); ++k) {
      cur[k].push_back(i);
      rec(i + 1);
      cur[k].pop_back();
    }
    cur.push_back({i});
    rec(i + 1);
    cur.pop_back();
  };
  rec(1);
  return out;
}

/// a < b < a' < b' with a, a' in A and b, b' in B, by four nested loops.
inline bool crosses(const std::vector<int>& A, const std::vector<int>& B) {
  for (int a : A)
    for (int a2 : A)
      for (int b : B)
        for (int b2 : B)
          if (a < b && b < a2 && a2 < b2) return true;
  return false;
}

inline bool noncrossing(const Blocks& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j && crosses(p[i], p[j])) return false;
  return true;
}

inline std::vector<Blocks> nc_partitions(int n) {
  std::vector<Blocks> out;
  for (auto& p : all_set_partitions(n))
    if (noncrossing(p)) out.push_back(p);
  return out;
}

inline bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::all_of(a.begin(), a.end(), [&](int x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

inline bool leq(const Blocks& a, const Blocks& b) {
  return std::all_of(a.begin(), a.end(), [&](const auto& v) {
    return std::any_of(b.begin(), b.end(), [&](const auto& w) { return subset(v, w); });
  });
}

inline bool ll(const Blocks& a, const Blocks& b) {
  if (!leq(a, b)) return false;
  for (const auto& w : b) {
    int lo = *std::min_element(w.begin(), w.end());
    int hi = *std::max_element(w.begin(), w.end());
    bool found = std::any_of(a.begin(), a.end(), [&](const auto& v) {
      return std::find(v.begin(), v.end(), lo) != v.end() && std::find(v.begin(), v.end(), hi) != v.end();
    });
    if (!found) return false;
  }
  return true;
}

/// Checks the linked-partition axioms pairwise, straight from the definition.
inline bool is_ncl(const Blocks& blocks, int n) {
  std::vector<int> cov(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& b : blocks)
    for (int x : b) ++cov[static_cast<std::size_t>(x)];
  for (int x = 1; x <= n; ++x)
    if (cov[static_cast<std::size_t>(x)] == 0 || cov[static_cast<std::size_t>(x)] > 2) return false;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      const auto& A = blocks[i];
      const auto& B = blocks[j];
      std::vector<int> common;
      for (int x : A)
        if (std::find(B.begin(), B.end(), x) != B.end()) common.push_back(x);
      if (common.empty()) continue;
      if (A.size() < 2 || B.size() < 2 || common.size() != 1 || A.front() == B.front()) return false;
      if (common[0] != A.front() && common[0] != B.front()) return false;
    }
  }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (i != j && crosses(blocks[i], blocks[j])) return false;
  return true;
}

/// NCL(n) by searching over all families of subsets of {1..n} with every
/// element used at most twice. Practical up to n = 6.
inline std::vector<Blocks> ncl_by_definition(int n) {
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int x = 1; x <= n; ++x)
      if (mask & (1u << (x - 1))) s.push_back(x);
    subsets.push_back(s);
  }
  std::vector<Blocks> out;
  Blocks chosen;
  std::vector<int> cov(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == subsets.size()) {
      if (is_ncl(chosen, n)) out.push_back(sorted_blocks(chosen));
      return;
    }
    rec(i + 1);
    const auto& s = subsets[i];
    if (std::all_of(s.begin(), s.end(), [&](int x) { return cov[static_cast<std::size_t>(x)] < 2; })) {
      for (int x : s) ++cov[static_cast<std::size_t>(x)];
      chosen.push_back(s);
      rec(i + 1);
      chosen.pop_back();
      for (int x : s) --cov[static_cast<std::size_t>(x)];
    }
  };
  rec(0);
  return out;
}

}  // namespace oracle
