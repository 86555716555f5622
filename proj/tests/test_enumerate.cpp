#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qlozenge/enumerate.hpp"
#include "qlozenge/errors.hpp"
#include "qlozenge/formulas.hpp"

using namespace qlozenge;

TEST_CASE("counts") {
  CHECK(count_tilings(build_hexagon(1, 1, 1)) == 2);
  CHECK(count_tilings(build_hexagon(2, 2, 2)) == 20);
  CHECK(count_tilings(build_hexagon(3, 3, 3)) == 980);
  CHECK(count_tilings(Region()) == 1);
  CHECK(count_tilings(Region({up(0, 0), down(0, 0), up(0, 1)})) == 0);
  CHECK(count_tilings(Region({up(0, 0), down(4, 4)})) == 0);
  // Larger than the oracle budget, still fine for the frontier sweep.
  Rational box = 1;
  for (int i = 1; i <= 6; ++i) {
    for (int j = 1; j <= 6; ++j) {
      for (int k = 1; k <= 6; ++k) box *= Rational(i + j + k - 1, i + j + k - 2);
    }
  }
  CHECK(count_tilings(build_hexagon(6, 6, 6)) == numerator(box));
}

TEST_CASE("generating functions") {
  const Region hex = build_hexagon(1, 1, 1);
  CHECK(gen_function(hex, Weight::Wt2).poly.to_string() == "q + q^2");
  CHECK(gen_function_oracle(hex, Weight::Wt2).poly.to_string() == "q + q^2");
  CHECK(gen_function(Region(), Weight::Wt2).poly == QPoly(1));
  CHECK(gen_function_oracle(Region(), Weight::Uniform).poly == QPoly(1));
  const Region semi = build_semihexagon_dented(2, 1, {1, 3});
  CHECK(gen_function(semi, Weight::Wt2).poly.to_string() == "q + q^2");
  CHECK(gen_function_oracle(semi, Weight::Wt2).poly.to_string() == "q + q^2");
  CHECK(gen_function(build_hexagon(3, 3, 3), Weight::Uniform).poly.at_one() == 980);

  const RegionParams ones{1, 1, 1, 1, 1, 1, 1, 1};
  const Region q = build_q_region(ones);
  const auto g = gen_function(q, Weight::Wt2);
  CHECK(g.poly == theorem_qmain(ones).poly.shifted(g_exponent(ones)));
  CHECK(g.assignment == Weight::Wt2);
  CHECK(g.region_digest == region_digest(q));
  CHECK(gen_function(q, Weight::Wt0).poly == theorem_qmain(ones).poly);
  CHECK(gen_function_oracle(q, Weight::Wt0).poly == theorem_qmain(ones).poly);
}

TEST_CASE("value at one is the count") {
  for (int code = 0; code < 256; code += 7) {
    int v[8];
    for (int i = 0; i < 8; ++i) v[i] = (code >> i) & 1;
    const Region r = build_q_region({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]});
    const BigInt n = count_tilings(r);
    for (Weight w : {Weight::Uniform, Weight::Wt0, Weight::Wt1, Weight::Wt2}) {
      CHECK(gen_function(r, w).poly.at_one() == n);
    }
  }
}

TEST_CASE("oracle equals sweep on builders") {
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      for (int c = 0; c <= 2; ++c) {
        const Region r = build_hexagon(a, b, c);
        for (Weight w : {Weight::Uniform, Weight::Wt0, Weight::Wt1, Weight::Wt2, Weight::Wt3}) {
          CHECK(gen_function(r, w).poly.to_string() == gen_function_oracle(r, w).poly.to_string());
        }
      }
    }
  }
  const Region bar = build_magnet_bar(1, 2, 1, 1, 1, 1);
  CHECK(gen_function(bar, Weight::Wt3).poly == gen_function_oracle(bar, Weight::Wt3).poly);
}

TEST_CASE("tiling iteration") {
  const auto two = list_tilings(build_hexagon(1, 1, 1));
  CHECK(two.size() == 2);
  CHECK(two[0] != two[1]);
  CHECK(list_tilings(Region({up(0, 0), down(4, 4)})).empty());
  CHECK(list_tilings(build_hexagon(2, 2, 2), 5).size() == 5);

  const Region r = build_hexagon(2, 2, 2);
  std::set<std::vector<Lozenge>> distinct;
  iter_tilings(r, [&](const Tiling& t) {
    CHECK(tiles(r, t));
    distinct.insert(t.lozenges);
    return true;
  });
  CHECK(distinct.size() == 20);

  std::size_t seen = 0;
  iter_tilings(r, [&](const Tiling&) { return ++seen < 3; });
  CHECK(seen == 3);
}

TEST_CASE("budgets") {
  const Region big = build_hexagon(5, 5, 5);
  CHECK(big.size() > 120);
  CHECK_THROWS_AS(gen_function_oracle(big, Weight::Uniform), BudgetExceeded);
  CHECK_THROWS_AS(list_tilings(big, 1), BudgetExceeded);
  CHECK_THROWS_AS(count_tilings(big, Budget{120, 4}), BudgetExceeded);
  const Region edge = build_hexagon(2, 2, 2);
  CHECK(gen_function_oracle(edge, Weight::Uniform, Budget{edge.size(), 1}).poly == QPoly(20));
  CHECK_THROWS_AS(gen_function_oracle(edge, Weight::Uniform, Budget{edge.size() - 1, 1}), BudgetExceeded);
}

TEST_CASE("digest") {
  const Region a = build_hexagon(2, 1, 1);
  CHECK(region_digest(a).size() == 16);
  CHECK(region_digest(a) == region_digest(build_hexagon(2, 1, 1)));
  CHECK(region_digest(a) != region_digest(build_hexagon(1, 2, 1)));
}

TEST_CASE("kuo_remove") {
  const Region hex = build_hexagon(1, 1, 1);
  // Boundary walk order around the unit hexagon alternates orientations.
  const auto cyc = boundary_cycles(hex);
  REQUIRE(cyc.size() == 1);
  std::vector<Triangle> order;
  for (const auto& t : cyc[0].edge_triangles) {
    if (order.empty() || order.back() != t) order.push_back(t);
  }
  REQUIRE(order.size() == 6);
  const std::array<Triangle, 4> marks = {order[0], order[1], order[2], order[3]};
  const auto parts = kuo_remove(hex, marks);
  CHECK(parts[0].size() == 2);
  for (int k = 1; k < 5; ++k) CHECK(parts[k].size() == 4);
  CHECK(count_tilings(hex) * count_tilings(parts[0]) ==
        count_tilings(parts[1]) * count_tilings(parts[2]) + count_tilings(parts[3]) * count_tilings(parts[4]));

  CHECK_THROWS_AS(kuo_remove(hex, {order[0], order[0], order[2], order[3]}), BadMarks);
  CHECK_THROWS_AS(kuo_remove(hex, {order[0], order[1], order[3], order[2]}), BadMarks);
  CHECK_THROWS_AS(kuo_remove(hex, {order[0], order[2], order[1], order[3]}), BadMarks);
  CHECK_THROWS_AS(kuo_remove(hex, {order[0], order[3], order[2], order[5]}), BadMarks);
  CHECK_NOTHROW(kuo_remove(hex, {order[0], order[3], order[2], order[1]}));
  CHECK_THROWS_AS(kuo_remove(hex, {order[0], order[1], order[2], up(9, 9)}), BadMarks);
}
