#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "nclab/permutation.hpp"
#include "nclab/text_format.hpp"

using namespace nclab;

namespace {

Permutation random_perm(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), fixture::rng());
  return Permutation(img);
}

Partition random_partition(int n) {
  auto all = oracle::all_set_partitions(n);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return fixture::from_oracle(n, all[pick(fixture::rng())]);
}

}  // namespace

TEST_CASE("Permutation validation") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), ShapeError);
  CHECK_THROWS_AS(Permutation({1, 4, 2}), ShapeError);
  CHECK_THROWS_AS(Permutation({0}), ShapeError);
  Permutation p({2, 3, 1});
  CHECK(p(1) == 2);
  CHECK(p.inverse() == Permutation({3, 1, 2}));
  CHECK(compose(p, p.inverse()) == Permutation::identity(3));
  CHECK(p.cycles() == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(Permutation({1, 3, 2}).cycles() == std::vector<std::vector<int>>{{1}, {2, 3}});
}

TEST_CASE("perm_of") {
  auto hat = parse_partition(fixture::kHat);
  CHECK(cycle_notation(perm_of(hat)) == fixture::kCycles);
  for (int n = 1; n <= 5; ++n) CHECK(perm_of(finest(n)) == Permutation::identity(n));
  auto p = perm_of(make_partition(3, {{1, 3}, {2}}));
  CHECK(std::vector<int>(p.image().begin(), p.image().end()) == std::vector<int>{3, 2, 1});
}

TEST_CASE("perm_of has one increasing cycle per block") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& a : enumerate_nc(n)) {
      auto cycles = perm_of(a).cycles();
      REQUIRE(cycles.size() == a.block_count());
      for (std::size_t i = 0; i < cycles.size(); ++i) CHECK(cycles[i] == a.block(i));
    }
  }
}

TEST_CASE("act is a left group action") {
  auto hat = parse_partition(fixture::kHat);
  auto check = parse_partition(fixture::kCheck);
  CHECK(to_text(act(perm_of(hat).inverse(), check)) == fixture::kCircle);
  CHECK_THROWS_AS(act(Permutation::identity(3), finest(4)), ShapeError);

  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(fixture::rng()() % 8);
    auto a = random_partition(n);
    auto s = random_perm(n);
    auto t = random_perm(n);
    CHECK(act(Permutation::identity(n), a) == a);
    CHECK(act(s, act(t, a)) == act(compose(s, t), a));
    CHECK(act(t, act(t.inverse(), a)) == a);
  }
}

TEST_CASE("the inverse cycle permutation of b keeps {a : a <= b} non-crossing") {
  for (int n = 1; n <= 7; ++n) {
    auto all = enumerate_nc(n);
    for (const auto& b : all) {
      auto inv = perm_of(b).inverse();
      for (const auto& a : all) {
        if (!leq(a, b)) continue;
        auto moved = act(inv, a);
        if (!is_noncrossing(moved) || !leq(moved, b)) FAIL_CHECK(to_text(a) << " under " << to_text(b));
      }
    }
  }
}
