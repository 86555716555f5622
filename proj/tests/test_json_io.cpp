#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlozenge/json_io.hpp"

using namespace qlozenge;

TEST_CASE("region round trip") {
  const Region q = build_q_region({1, 2, 1, 1, 1, 0, 1, 1});
  const std::string text = region_to_json(q);
  const Region back = region_from_json(text);
  CHECK(back == q);
  REQUIRE(back.provenance());
  CHECK(back.provenance()->params == q.provenance()->params);
  REQUIRE(back.frame());
  CHECK(back.frame()->southeast == q.frame()->southeast);
  CHECK(region_to_json(back) == text);
  CHECK(text.rfind("{\"params\":{", 0) == 0);

  const Region bare = q.translated(1, 1);
  const std::string bare_text = region_to_json(bare);
  CHECK(bare_text.rfind("{\"params\":null,", 0) == 0);
  CHECK(region_from_json(bare_text) == bare);

  CHECK(region_to_json(Region()) == "{\"params\":null,\"triangles\":[]}");
  CHECK(region_to_json(Region({up(0, 0), down(0, 0)})) ==
        "{\"params\":null,\"triangles\":[[0,0,\"U\"],[0,0,\"D\"]]}");
}

TEST_CASE("semihexagon keeps its dents") {
  const Region s = build_semihexagon_dented(2, 1, {1, 3});
  const Region back = region_from_json(region_to_json(s));
  CHECK(back == s);
  REQUIRE(back.provenance());
  CHECK(back.provenance()->dents == std::vector<int>{1, 3});
}

TEST_CASE("tiling round trip") {
  for (const auto& t : list_tilings(build_hexagon(2, 2, 1))) {
    const std::string text = tiling_to_json(t);
    CHECK(tiling_from_json(text) == t);
    CHECK(tiling_to_json(tiling_from_json(text)) == text);
  }
  const auto one = list_tilings(build_hexagon(1, 1, 1), 1).front();
  CHECK(tiling_to_json(one).find("\"R\"") != std::string::npos);
  CHECK_THROWS(tiling_from_json("[[[0,0,\"U\"],[5,5,\"D\"],\"R\"]]"));
}

TEST_CASE("report round trip") {
  const Report fail = make_report("demo", "1,2", QPoly::parse("1 + 3*q^4"), QPoly::parse("1 + q"), "detail");
  const Report back = report_from_json(report_to_json(fail));
  CHECK(back.check == "demo");
  CHECK(back.params == "1,2");
  CHECK(back.status == Status::Fail);
  CHECK(back.lhs == fail.lhs);
  CHECK(back.rhs == fail.rhs);
  REQUIRE(back.witness);
  CHECK(*back.witness == *fail.witness);
  CHECK(back.detail == "detail");
  CHECK(report_to_json(back) == report_to_json(fail));

  const Report pass = make_report("demo", "", QPoly(3), QPoly(3));
  CHECK(report_to_json(pass).find("\"witness\":null") != std::string::npos);
}

TEST_CASE("generating function object") {
  const Region hex = build_hexagon(1, 1, 1);
  const std::string text = genfun_to_json(gen_function(hex, Weight::Wt2));
  CHECK(text == "{\"at_one\":\"2\",\"poly\":\"q + q^2\",\"region_digest\":\"" + region_digest(hex) +
                    "\",\"weight\":\"wt2\"}");
}
