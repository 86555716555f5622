#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlozenge/enumerate.hpp"
#include "qlozenge/errors.hpp"
#include "qlozenge/formulas.hpp"
#include "qlozenge/lattice.hpp"
#include "qlozenge/weights.hpp"

using namespace qlozenge;

namespace {

bool subset(const Region& part, const Region& whole) {
  for (const auto& t : part.triangles()) {
    if (!whole.contains(t)) return false;
  }
  return true;
}

// Product formula for plane partitions in an a x b x c box, with rationals only.
BigInt box_count(int a, int b, int c) {
  Rational r = 1;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) {
      for (int k = 1; k <= c; ++k) r *= Rational(i + j + k - 1, i + j + k - 2);
    }
  }
  REQUIRE(denominator(r) == 1);
  return numerator(r);
}

}  // namespace

TEST_CASE("triangle adjacency") {
  const Triangle u = up(2, 3);
  const auto n = u.neighbors();
  CHECK(n[0] == down(2, 3));
  CHECK(n[1] == down(2, 2));
  CHECK(n[2] == down(1, 3));
  for (const auto& d : n) {
    const auto back = d.neighbors();
    CHECK(std::find(back.begin(), back.end(), u) != back.end());
  }
  CHECK(Lozenge::make(u, down(2, 3)).kind() == LozengeKind::Right);
  CHECK(Lozenge::make(down(2, 2), u).kind() == LozengeKind::Left);
  CHECK(Lozenge::make(u, down(1, 3)).kind() == LozengeKind::Vertical);
  CHECK_THROWS_AS(Lozenge::make(u, down(4, 4)), std::invalid_argument);
  CHECK(u.to_string() == "U(2,3)");
}

TEST_CASE("region params text") {
  const RegionParams p{1, 2, 3, 4, 5, 6, 7, 8};
  CHECK(p.to_string() == "1,2,3,4,5,6,7,8");
  CHECK(RegionParams::parse(p.to_string()) == p);
  CHECK_THROWS_AS(RegionParams::parse("1,2,3"), std::invalid_argument);
}

TEST_CASE("hexagon builder") {
  CHECK(build_hexagon(1, 1, 1).size() == 6);
  CHECK(build_hexagon(2, 2, 2).size() == 24);
  CHECK(count_tilings(build_hexagon(2, 2, 2)) == 20);
  for (int b = 0; b <= 3; ++b) {
    for (int c = 0; c <= 3; ++c) {
      const Region r = build_hexagon(0, b, c);
      CHECK(r.size() == static_cast<std::size_t>(2 * b * c));
      CHECK(count_tilings(r) == 1);
    }
  }
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (int c = 0; c <= 3; ++c) {
        const Region r = build_hexagon(a, b, c);
        CHECK(r.balanced());
        CHECK(r.size() == static_cast<std::size_t>(2 * (a * b + b * c + c * a)));
        CHECK(count_tilings(r) == box_count(a, b, c));
      }
    }
  }
}

TEST_CASE("semihexagon with dents") {
  const Region one = build_semihexagon_dented(1, 1, {1});
  CHECK(one.size() == 2);
  CHECK(one.balanced());
  CHECK(count_tilings(one) == 1);
  CHECK(build_semihexagon_dented(0, 3, {}).empty());

  const Region fig = build_semihexagon_dented(7, 5, {1, 2, 6, 7, 10, 11, 12});
  CHECK(fig.balanced());
  CHECK(count_tilings(fig) > 0);

  CHECK_THROWS_AS(build_semihexagon_dented(2, 1, {3, 1}), BadDents);
  CHECK_THROWS_AS(build_semihexagon_dented(2, 1, {1, 1}), BadDents);
  CHECK_THROWS_AS(build_semihexagon_dented(2, 1, {1, 4}), BadDents);
  CHECK_THROWS_AS(build_semihexagon_dented(2, 1, {1}), BadDents);
  CHECK_THROWS_AS(build_semihexagon_dented(1, 1, {}), BadDents);
}

TEST_CASE("shamrock") {
  CHECK(build_shamrock(0, 0, 0, 0, {5, 1}).empty());
  for (int m = 1; m <= 4; ++m) CHECK(build_shamrock(m, 0, 0, 0, {0, 0}).size() == static_cast<std::size_t>(m * m));
  CHECK(build_shamrock(4, 2, 2, 3, {0, 0}).size() == 33);
  const auto moved = build_shamrock(2, 1, 1, 1, {3, 0});
  const auto base = build_shamrock(2, 1, 1, 1, {0, 0});
  CHECK(moved.size() == base.size());
  CHECK(moved.count(Triangle{base.begin()->row, base.begin()->pos + 3, base.begin()->orient}) == 1);
}

TEST_CASE("degenerations are set-equal") {
  for (int x = 0; x <= 2; ++x) {
    for (int y = 0; y <= 2; ++y) {
      for (int z = 0; z <= 2; ++z) {
        for (int t = 0; t <= 2; ++t) {
          CHECK(build_q_region({x, y, z, t, 0, 0, 0, 0}) == build_hexagon(z, x + y, t));
          for (int m = 0; m <= 2; ++m) {
            for (int a = 0; a <= 2; ++a) {
              CHECK(build_q_region({x, y, z, t, m, a, 0, 0}) == build_magnet_bar(m, a, x, y, z, t));
            }
          }
          for (int a = 0; a <= 2; ++a) {
            CHECK(build_q_region({x, y, z, t, 0, a, 0, 0}) == build_k_region(a, x, y, z, t));
          }
          CHECK(build_k_region(0, x, y, z, t) == build_hexagon(z, x + y, t));
        }
      }
    }
  }
}

TEST_CASE("small Q-regions") {
  const Region r = build_q_region({1, 1, 1, 1, 1, 0, 0, 0});
  CHECK(count_tilings(r) == 4);
  CHECK(count_tilings(build_k_region(1, 0, 0, 0, 0)) == 1);
  CHECK(build_k_region(2, 0, 0, 0, 0).empty());
  for (int m = 0; m <= 2; ++m) {
    for (int a = 0; a <= 2; ++a) CHECK(count_tilings(build_magnet_bar(m, a, 0, 0, 0, 0)) == 1);
  }
  CHECK(build_magnet_bar(1, 1, 1, 1, 1, 1).provenance()->family == "magnet_bar");
  CHECK(build_magnet_bar(1, 1, 1, 1, 1, 1).frame()->magnet_bar);
  CHECK_FALSE(build_q_region({1, 1, 1, 1, 1, 1, 1, 1}).frame()->magnet_bar);
}

TEST_CASE("calibration: counts on every 0/1 tuple") {
  for (int code = 0; code < 256; ++code) {
    int v[8];
    for (int i = 0; i < 8; ++i) v[i] = (code >> i) & 1;
    const RegionParams p{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
    const Region r = build_q_region(p);
    CAPTURE(p.to_string());
    CHECK(r.balanced());
    CHECK(count_tilings(r) == theorem_main(p));
  }
}

TEST_CASE("remove_forced") {
  for (int b = 1; b <= 3; ++b) {
    for (int c = 1; c <= 3; ++c) {
      const Region r = build_hexagon(0, b, c);
      const auto forced = remove_forced(r, Weight::Wt2);
      CHECK(forced.region.empty());
      const auto only = list_tilings(r);
      REQUIRE(only.size() == 1);
      CHECK(forced.exponent == tiling_exponent(Weight::Wt2, r, only.front()));
    }
  }

  const Region hex = build_hexagon(2, 2, 2);
  const auto same = remove_forced(hex, Weight::Wt2);
  CHECK(same.region == hex);
  CHECK(same.exponent == 0);
  CHECK(same.removed.empty());

  CHECK_THROWS_AS(remove_forced(Region({up(0, 0), down(0, 0), up(5, 5)}), Weight::Uniform), Untileable);

  // M(R) = q^acc M(R') on semihexagons and K-regions with forced strips.
  for (int a = 0; a <= 2; ++a) {
    for (int x = 0; x <= 2; ++x) {
      for (int t = 0; t <= 2; ++t) {
        const Region r = build_k_region(a, x, 1, 1, t);
        const auto f = remove_forced(r, Weight::Wt2);
        CHECK(gen_function(r, Weight::Wt2).poly == gen_function(f.region, Weight::Wt2).poly.shifted(f.exponent));
      }
    }
  }
  const Region dented = build_semihexagon_dented(3, 2, {1, 2, 5});
  const auto f = remove_forced(dented, Weight::Wt2);
  CHECK(f.region.size() < dented.size());
  CHECK(gen_function(dented, Weight::Wt2).poly == gen_function(f.region, Weight::Wt2).poly.shifted(f.exponent));
}

TEST_CASE("split_region") {
  const Region hex = build_hexagon(1, 2, 1);
  const auto [whole, rest] = split_region(hex, hex.triangles());
  CHECK(whole == hex);
  CHECK(rest.empty());

  CHECK_THROWS_AS(split_region(hex, {hex.triangles().front()}), NotBalanced);
  CHECK_THROWS_AS(split_region(hex, {up(40, 40)}), std::invalid_argument);

  // The magnet bar with z = 0 splits off a hexagon Hex(m, y, a) standing on the base.
  for (int m = 1; m <= 2; ++m) {
    for (int a = 1; a <= 2; ++a) {
      for (int x = 0; x <= 2; ++x) {
        for (int y = 1; y <= 2; ++y) {
          for (int t = 1; t <= 2; ++t) {
            const Region bar = build_magnet_bar(m, a, x, y, 0, t);
            const Region hex_part = build_hexagon(m, y, a).translated(0, x + a);
            REQUIRE(subset(hex_part, bar));
            const auto [part, other] = split_region(bar, hex_part.triangles());
            CHECK(count_tilings(bar) == count_tilings(part) * count_tilings(other));
            CHECK(gen_function(bar, Weight::Wt2).poly ==
                  gen_function(part, Weight::Wt2).poly * gen_function(other, Weight::Wt2).poly);
          }
        }
      }
    }
  }

  // A balanced part whose border shows both orientations.
  const Region big = build_hexagon(2, 2, 2);
  std::vector<Triangle> lozenge_part = {up(1, 0), down(1, 0)};
  CHECK_THROWS_AS(split_region(big, lozenge_part), SeparatingViolated);
}

TEST_CASE("translation and normalization") {
  const Region r = build_q_region({1, 1, 1, 1, 1, 1, 1, 1});
  const Region moved = r.translated(3, -4);
  CHECK_FALSE(moved.provenance());
  CHECK(moved.normalized().first == r.normalized().first);
  CHECK(count_tilings(moved) == count_tilings(r));
  const Region less = r.without({r.triangles().front()});
  CHECK(less.frame());
  CHECK_FALSE(less.provenance());
}

TEST_CASE("boundary cycles") {
  const auto cycles = boundary_cycles(build_hexagon(1, 1, 1));
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].vertices.size() == 6);
  CHECK(cycles[0].twice_area > 0);

  // A hexagon with its central unit hexagon removed has one hole.
  Region ring = build_hexagon(3, 3, 3);
  const Region middle = build_hexagon(1, 1, 1).translated(2, 1);
  std::vector<Triangle> hole(middle.triangles().begin(), middle.triangles().end());
  REQUIRE(subset(middle, ring));
  ring = ring.without(hole);
  const auto ring_cycles = boundary_cycles(ring);
  REQUIRE(ring_cycles.size() == 2);
  int outer = 0, inner = 0;
  for (const auto& c : ring_cycles) (c.twice_area > 0 ? outer : inner)++;
  CHECK(outer == 1);
  CHECK(inner == 1);
  CHECK(boundary_cycles(Region()).empty());
}
