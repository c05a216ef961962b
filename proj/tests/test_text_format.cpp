#include "doctest.h"
#include "fixtures.hpp"
#include "nclab/text_format.hpp"

using namespace nclab;

TEST_CASE("partition text") {
  auto p = parse_partition(fixture::kCheck);
  CHECK(to_text(p) == fixture::kCheck);
  CHECK(p.size() == 11);
  CHECK(to_text(parse_partition(" {3, 1} { 2 } ")) == "{1,3}{2}");
  CHECK(block_to_string({1, 2, 4}) == "{1,2,4}");
  CHECK_THROWS_AS(parse_partition(""), ParseError);
  CHECK_THROWS_AS(parse_partition("{1,2"), ParseError);
  CHECK_THROWS_AS(parse_partition("{1,x}"), ParseError);
  CHECK_THROWS_AS(parse_partition("{0,1}"), ParseError);
  CHECK_THROWS_AS(parse_partition("{}"), ParseError);
  CHECK_THROWS_AS(parse_partition("{1,3}"), PartitionError);
  CHECK_THROWS_AS(parse_partition("{1,2}{2,3}"), PartitionError);
  CHECK(parse_blocks("{}{1}").size() == 2);
}

TEST_CASE("partition JSON") {
  auto p = parse_partition(fixture::kCheck);
  auto j = to_json(p);
  CHECK(j.dump() == R"({"n":11,"blocks":[[1,2,4],[3],[5,6],[7],[8,9,11],[10]]})");
  CHECK(partition_from_json(j) == p);
  CHECK(parse_partition(j.dump()) == p);
  CHECK(parse_partition(R"({"n":3,"blocks":[[1,3],[2]]})") == make_partition(3, {{1, 3}, {2}}));
  CHECK_THROWS_AS(parse_partition(R"({"n":4,"blocks":[[1,3],[2]]})"), PartitionError);
  CHECK_THROWS_AS(parse_partition(R"({"blocks":[[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_partition(R"({"n":1,"blocks":[[1]])"), ParseError);

  Partition odd({2, 5, 7}, {{2, 7}, {5}});
  auto oj = to_json(odd);
  CHECK(oj.dump() == R"({"n":3,"ground":[2,5,7],"blocks":[[2,7],[5]]})");
  CHECK(partition_from_json(oj) == odd);
}

TEST_CASE("permutation text and JSON") {
  CHECK(cycle_notation(Permutation::identity(4)) == "()");
  CHECK(cycle_notation(Permutation({2, 1, 3, 5, 4})) == "(1,2)(4,5)");
  auto p = Permutation({3, 1, 2});
  CHECK(to_json(p).dump() == R"({"n":3,"image":[3,1,2]})");
  CHECK(permutation_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(permutation_from_json(Json::parse(R"({"n":2,"image":[1,1]})")), ShapeError);
}

TEST_CASE("text round trip over NC and NCL") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_nc(n)) {
      CHECK(parse_partition(to_text(p)) == p);
      CHECK(partition_from_json(to_json(p)) == p);
    }
    for (const auto& p : enumerate_ncl_direct(n)) {
      CHECK(parse_linked(to_text(p)) == p);
      CHECK(linked_from_json(to_json(p)) == p);
    }
  }
}
