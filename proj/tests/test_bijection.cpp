#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "nclab/ncl_bijection.hpp"
#include "nclab/text_format.hpp"

using namespace nclab;

TEST_CASE("to_pair and from_pair on the 11-point example") {
  auto pi = parse_linked(fixture::kPi);
  auto pair = to_pair(pi);
  CHECK(to_text(pair.alpha) == fixture::kCircle);
  CHECK(to_text(pair.beta) == fixture::kHat);
  CHECK(from_pair(pair.alpha, pair.beta) == pi);
}

TEST_CASE("small pairs") {
  auto p = make_linked(3, {{1, 2}, {2, 3}});
  CHECK(to_pair(p) == PartitionPair{make_partition(3, {{1, 3}, {2}}), coarsest(3)});
  CHECK(from_pair(make_partition(3, {{1, 3}, {2}}), coarsest(3)) == p);
  CHECK(from_pair(finest(4), finest(4)) == as_linked(finest(4)));
  CHECK(to_pair(as_linked(finest(4))) == PartitionPair{finest(4), finest(4)});
  CHECK_THROWS_WITH_AS(from_pair(finest(3), coarsest(3)), "block {1,2,3}: min/max not together in α", PreconditionError);
}

TEST_CASE("round trips over both sides, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    std::size_t count = 0;
    for_each_ncl_direct(n, [&](const LinkedPartition& pi) {
      ++count;
      auto pair = to_pair(pi);
      if (!is_noncrossing(pair.alpha) || !ll(pair.alpha, pair.beta)) FAIL_CHECK("not a << pair: " << to_text(pi));
      if (from_pair(pair.alpha, pair.beta) != pi) FAIL_CHECK("round trip fails at " << to_text(pi));
    });
    std::size_t pairs = 0;
    for_each_nc(n, [&](const Partition& b) {
      for_each_below_ll(b, [&](const Partition& a) {
        ++pairs;
        if (to_pair(from_pair(a, b)) != PartitionPair{a, b}) FAIL_CHECK("round trip fails at " << to_text(a) << " " << to_text(b));
      });
    });
    CHECK(count == pairs);
  }
}

TEST_CASE("distinct linked partitions have distinct (hat, check), n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::pair<Partition, Partition>> seen;
    std::size_t count = 0;
    for_each_ncl_direct(n, [&](const LinkedPartition& pi) {
      ++count;
      seen.insert({generated(pi), unlink(pi)});
    });
    CHECK(seen.size() == count);
  }
}

TEST_CASE("both generators produce the same set") {
  CHECK(enumerate_ncl(1).size() == 1);
  auto three = enumerate_ncl(3);
  std::set<LinkedPartition> got(three.begin(), three.end());
  std::set<LinkedPartition> want{make_linked(3, {{1, 2}, {2, 3}})};
  for (const auto& a : enumerate_nc(3)) want.insert(as_linked(a));
  CHECK(got == want);

  for (int n = 1; n <= 8; ++n) {
    auto a = enumerate_ncl(n);
    auto b = enumerate_ncl_direct(n);
    std::set<LinkedPartition> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    CHECK(sa.size() == a.size());
    CHECK(sb.size() == b.size());
    CHECK(sa == sb);
  }
}

TEST_CASE("counts") {
  const std::vector<unsigned long> expected{1, 2, 6, 22, 90, 394, 1806};
  for (int n = 1; n <= 7; ++n) {
    CHECK(enumerate_ncl_direct(n).size() == expected[static_cast<std::size_t>(n - 1)]);
    CHECK(ncl_count(n) == expected[static_cast<std::size_t>(n - 1)]);
    CHECK(schroeder(static_cast<unsigned>(n - 1)) == expected[static_cast<std::size_t>(n - 1)]);
  }
  for (int n = 1; n <= 9; ++n) {
    auto size = Integer(static_cast<unsigned long>(enumerate_ncl(n).size()));
    CHECK(size == ncl_count(n));
    CHECK(size == coloured_count(n));
  }
  for (int n = 10; n <= 14; ++n) {
    CHECK(ncl_count(n) == coloured_count(n));
    CHECK(ncl_count(n) == schroeder(static_cast<unsigned>(n - 1)));
  }
  Integer ten = 0;
  for_each_ncl(10, [&](const LinkedPartition&) { ++ten; });
  CHECK(ten == ncl_count(10));
  CHECK(coloured_count(3) == 6);
  CHECK(ncl_count(5) == 90);
}
