#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "qlozenge/enumerate.hpp"
#include "qlozenge/errors.hpp"
#include "qlozenge/formulas.hpp"

using namespace qlozenge;

namespace {

// Plane partitions in an a x b array with entries at most c, weighted by their sum.
QPoly plane_partitions(int a, int b, int c) {
  std::vector<int> cell(static_cast<std::size_t>(a * b), 0);
  std::map<std::int64_t, BigInt> by_size;
  std::function<void(int, int)> fill = [&](int k, int sum) {
    if (k == a * b) {
      by_size[sum] += 1;
      return;
    }
    const int i = k / b, j = k % b;
    int cap = c;
    if (i > 0) cap = std::min(cap, cell[static_cast<std::size_t>(k - b)]);
    if (j > 0) cap = std::min(cap, cell[static_cast<std::size_t>(k - 1)]);
    for (int v = 0; v <= cap; ++v) {
      cell[static_cast<std::size_t>(k)] = v;
      fill(k + 1, sum + v);
    }
  };
  fill(0, 0);
  std::vector<QPoly::Term> terms;
  for (auto& [e, n] : by_size) terms.push_back({e, n});
  return QPoly::from_terms(std::move(terms));
}

QPoly p(const char* text) { return QPoly::parse(text); }

}  // namespace

TEST_CASE("macmahon_q") {
  CHECK(macmahon_q(1, 1, 1).poly == p("1 + q"));
  CHECK(macmahon_q(2, 1, 1).poly == p("1 + q + q^2"));
  for (int b = 0; b <= 3; ++b) {
    for (int c = 0; c <= 3; ++c) CHECK(macmahon_q(0, b, c).poly == QPoly(1));
  }
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (int c = 0; c <= 3; ++c) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        const QPoly m = macmahon_q(a, b, c).poly;
        CHECK(m == plane_partitions(a, b, c));
        CHECK(m.is_palindromic());
        CHECK(m.has_nonnegative_coefficients());
      }
    }
  }
}

TEST_CASE("hexagon prefactors") {
  CHECK(hex_m2(1, 1, 1).poly == p("q + q^2"));
  CHECK(hex_m2(1, 1, 1).prefactor_exponent == 1);
  for (int a = 0; a <= 3; ++a) {
    for (int c = 0; c <= 3; ++c) CHECK(hex_m1(a, 0, c).poly == QPoly(1));
  }
  CHECK(hex_m1(2, 3, 1).prefactor_exponent == 2 * 6);
  CHECK(hex_m2(2, 3, 1).prefactor_exponent == 3 * 3);
}

TEST_CASE("theorem_main") {
  CHECK(theorem_main({}) == 1);
  CHECK(theorem_main({1, 1, 1, 1, 1, 0, 0, 0}) == 4);
  CHECK(theorem_main({1, 1, 1, 1, 1, 1, 1, 1}) == 840);
  for (int x = 0; x <= 2; ++x) {
    for (int y = 0; y <= 2; ++y) {
      for (int z = 0; z <= 2; ++z) {
        for (int t = 0; t <= 2; ++t) {
          const RegionParams q{x, y, z, t, 0, 0, 0, 0};
          CHECK(theorem_main(q) == plane_partitions(z, x + y, t).at_one());
          CHECK(theorem_qmain(q).poly == macmahon_q(z, x + y, t).poly);
        }
      }
    }
  }
}

TEST_CASE("theorem_qmain against enumeration") {
  CHECK(theorem_qmain({}).poly == QPoly(1));
  for (const RegionParams& q : {RegionParams{1, 1, 1, 1, 1, 1, 1, 1}, RegionParams{2, 0, 1, 1, 1, 1, 0, 1},
                                RegionParams{0, 1, 2, 1, 0, 2, 1, 0}}) {
    const auto r = theorem_qmain(q);
    CHECK(r.poly.at_one() == theorem_main(q));
    CHECK(gen_function(build_q_region(q), Weight::Wt0).poly == r.poly);
    CHECK(r.poly.is_palindromic());
  }
}

TEST_CASE("semihexagon with dents") {
  for (int b = 0; b <= 4; ++b) {
    CHECK(semihex_dents_m2(1, b, {1}).poly == QPoly(1));
    for (int k = 1; k <= b + 1; ++k) CHECK(semihex_dents_m2(1, b, {k}).poly == QPoly::monomial(k - 1));
  }
  CHECK(semihex_dents_m2(2, 1, {1, 3}).poly == p("q + q^2"));
  CHECK_THROWS_AS(semihex_dents_m2(2, 1, {3, 1}), BadDents);
  const std::vector<int> fig = {1, 2, 6, 7, 10, 11, 12};
  CHECK(semihex_dents_m2(7, 5, fig).poly == gen_function(build_semihexagon_dented(7, 5, fig), Weight::Wt2).poly);
}

TEST_CASE("K-region and magnet bars") {
  CHECK(k_region_m2(0, 0, 0, 0, 0).poly == QPoly(1));
  CHECK(magnet_m2(0, 0, 0, 0, 0, 0).poly == QPoly(1));
  CHECK(magnet_m3(0, 0, 0, 0, 0, 0).poly == QPoly(1));
  CHECK(k_region_m2(1, 1, 1, 1, 1).poly == gen_function(build_k_region(1, 1, 1, 1, 1), Weight::Wt2).poly);
  CHECK(magnet_m2(1, 1, 1, 1, 1, 1).poly == gen_function(build_magnet_bar(1, 1, 1, 1, 1, 1), Weight::Wt2).poly);
  CHECK(magnet_m3(1, 1, 1, 1, 1, 1).poly == gen_function(build_magnet_bar(1, 1, 1, 1, 1, 1), Weight::Wt3).poly);
  for (int x = 0; x <= 2; ++x) {
    for (int y = 0; y <= 2; ++y) {
      for (int z = 0; z <= 2; ++z) {
        for (int t = 0; t <= 2; ++t) {
          CHECK(k_region_m2(0, x, y, z, t).poly == hex_m2(z, x + y, t).poly);
          for (int a = 0; a <= 2; ++a) CHECK(magnet_m2(0, a, x, y, z, t).poly == k_region_m2(a, x, y, z, t).poly);
        }
      }
    }
  }
}

TEST_CASE("factors stay exact") {
  const auto r = theorem_qmain({2, 2, 2, 2, 2, 2, 2, 2});
  CHECK_FALSE(r.factors.is_zero());
  CHECK(r.factors.resolve() == r.poly);
  CHECK(r.factors.resolve_at_one() == theorem_main({2, 2, 2, 2, 2, 2, 2, 2}));
}
