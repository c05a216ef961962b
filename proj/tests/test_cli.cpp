#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "run_cli.hpp"

namespace {

std::string q(const std::string& s) { return "'" + s + "'"; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < s.size()) {
    auto end = s.find('\n', start);
    if (end == std::string::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate") {
  auto r = run_cli("enumerate nc 3");
  CHECK(r.status == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 6);
  CHECK(ls.back() == "count=5");
  CHECK(ls.front() == "{1,2,3}");

  r = run_cli("enumerate ncl 3");
  CHECK(r.status == 0);
  CHECK(lines(r.out).size() == 7);
  CHECK(lines(r.out).back() == "count=6");

  CHECK(run_cli("enumerate nc 0").status == 2);
  CHECK(run_cli("enumerate xyz 3").status == 2);
  CHECK(run_cli("enumerate nc").status == 2);
}

TEST_CASE("enumerate --json emits one object per line") {
  auto r = run_cli("--json enumerate ncl 4");
  CHECK(r.status == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 23);
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
    auto j = nlohmann::json::parse(ls[i]);
    CHECK(j["n"] == 4);
    CHECK(j["linked"] == true);
  }
  CHECK(nlohmann::json::parse(ls.back())["count"] == 22);
}

TEST_CASE("map both directions") {
  auto r = run_cli("map to-pair " + q(fixture::kPi));
  CHECK(r.status == 0);
  CHECK(r.out == std::string(fixture::kCircle) + "\n" + fixture::kHat + "\n");

  r = run_cli("map from-pair " + q(fixture::kCircle) + " " + q(fixture::kHat));
  CHECK(r.status == 0);
  CHECK(r.out == std::string(fixture::kPi) + "\n");

  r = run_cli("map from-pair '{1}{2}{3}' '{1,2,3}' 2>&1");
  CHECK(r.status == 3);
  CHECK(r.out.find("block {1,2,3}: min/max not together in α") != std::string::npos);

  CHECK(run_cli("map from-pair '{1,3}{2,4}' '{1,2,3,4}'").status == 3);
  CHECK(run_cli("map from-pair '{1}{2}' '{1,2,3}'").status == 2);
  CHECK(run_cli("map to-pair '{1,3}{2,3}'").status == 2);
  CHECK(run_cli("map to-pair '{1,2'").status == 2);
  CHECK(run_cli("map").status == 2);
}

TEST_CASE("map --json carries every intermediate step") {
  auto r = run_cli("--json map to-pair " + q(fixture::kPi));
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["cycles"] == fixture::kCycles);
  CHECK(j["unlinking"]["blocks"] == nlohmann::json::parse("[[1,2,4],[3],[5,6],[7],[8,9,11],[10]]"));
  CHECK(j["alpha"]["blocks"] == nlohmann::json::parse("[[1,3,7],[2],[4,5],[6],[8,10,11],[9]]"));
  CHECK(j["beta"]["blocks"] == nlohmann::json::parse("[[1,2,3,4,5,6,7],[8,9,10,11]]"));

  auto back = run_cli("--json map from-pair '" + j["alpha"].dump() + "' '" + j["beta"].dump() + "'");
  CHECK(back.status == 0);
  auto k = nlohmann::json::parse(back.out);
  CHECK(k["linked"]["blocks"] == nlohmann::json::parse("[[1,2,4],[2,3],[4,5,6],[6,7],[8,9,11],[9,10]]"));
}

TEST_CASE("count") {
  CHECK(run_cli("count ncl 5").out == "90\n");
  CHECK(run_cli("count nc 4").out == "14\n");
  CHECK(run_cli("count below-ll '{1,2,3,4}'").out == "5\n");
  CHECK(run_cli("count above-ll '{1,4}{2,3}'").out == "2\n");
  CHECK(run_cli("count coloured 6").out == run_cli("count ncl 6").out);
  CHECK(run_cli("count ncl 6").out == "394\n");
  CHECK(run_cli("count ncl abc").status == 2);
  CHECK(run_cli("count below-ll '{1,3}{2,4}'").status == 3);
  CHECK(run_cli("count bogus 3").status == 2);
}

TEST_CASE("size guard") {
  CHECK(run_cli("count ncl 13").status == 2);
  CHECK(run_cli("enumerate nc 13").status == 2);
  CHECK(run_cli("--limit 13 count ncl 13").out == "27297738\n");
  CHECK(run_cli("count nc 4", "NCLAB_LIMIT=3").status == 2);
  CHECK(run_cli("count nc 13", "NCLAB_LIMIT=20").out == "742900\n");
  CHECK(run_cli("--limit 4 count nc 4", "NCLAB_LIMIT=3").status == 0);
  CHECK(run_cli("count nc 4", "NCLAB_LIMIT=abc").status == 2);
  CHECK(run_cli("--limit 0 count nc 1").status == 2);
}

TEST_CASE("moments") {
  CHECK(run_cli("moments --t 1,1 --n 4").out == "1, 2, 5, 14\n");
  CHECK(run_cli("moments --t 1 --n 5").out == "1, 1, 1, 1, 1\n");
  CHECK(run_cli("moments --cumulants 1,1,1,1 --n 4").out == "1, 2, 5, 14\n");
  CHECK(run_cli("moments --t 1,1/2 --n 3").out == "1, 3/2, 11/4\n");
  CHECK(run_cli("moments --symbolic 4").out == "t3 + 3*t2*t1 + t1^3 + 4*t2 + 6*t1^2 + 6*t1 + 1\n");
  CHECK(run_cli("moments --t 2,1 --n 3").status == 4);
  CHECK(run_cli("moments --cumulants 3 --n 2").status == 4);
  CHECK(run_cli("moments --t 1,0.5 --n 3").status == 2);
  CHECK(run_cli("moments --t 1,1").status == 2);
  CHECK(run_cli("moments --t 1,1 --n 3 --symbolic 3").status == 2);
  auto j = nlohmann::json::parse(run_cli("--json moments --t 1,1 --n 3").out);
  CHECK(j["moments"] == nlohmann::json::parse(R"(["1","2","5"])"));
}

TEST_CASE("transform") {
  CHECK(run_cli("transform --moments 1,1,1,1 --to t").out == "1, 0, 0, 0\n");
  CHECK(run_cli("transform --moments 1,2,5,14 --to t").out == "1, 1, 0, 0\n");
  CHECK(run_cli("transform --moments 1,2,5,14 --to r").out == "1, 1, 1, 1\n");
  CHECK(run_cli("transform --moments 1,2,5,14 --to s").out == "1, -1, 1, -1\n");
  CHECK(run_cli("transform --moments 1,2,5,14 --to t --order 1").out == "1, 1\n");
  CHECK(run_cli("transform --moments 1,2,5,14 --to t --order 9").status == 2);
  CHECK(run_cli("transform --moments 2,2 --to r").status == 4);
  CHECK(run_cli("transform --moments 1,2 --to q").status == 2);
  CHECK(run_cli("--json transform --moments 1,2,5 --to t").out == "{\"order\":2,\"coeffs\":[\"1\",\"1\",\"0\"]}\n");
}

TEST_CASE("verify") {
  auto r = run_cli("verify all 6");
  CHECK(r.status == 0);
  auto b = run_cli("verify bijection 6");
  CHECK(b.status == 0);
  CHECK(b.out.find("round-trips: 2·|NCL(n)|") != std::string::npos);
  auto c = run_cli("--json verify counts 7");
  CHECK(c.status == 0);
  auto ls = lines(c.out);
  REQUIRE(!ls.empty());
  CHECK(nlohmann::json::parse(ls.back())["passed"] == true);
  CHECK(c.out.find("1, 2, 6, 22, 90, 394, 1806") != std::string::npos);
  CHECK(run_cli("verify all 13").status == 2);
}

TEST_CASE("help and usage errors") {
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
}

TEST_CASE("output is deterministic") {
  CHECK(run_cli("--json enumerate ncl 5").out == run_cli("--json enumerate ncl 5").out);
  CHECK(run_cli("verify moments 5").out == run_cli("verify moments 5").out);
}
