#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlozenge/errors.hpp"
#include "qlozenge/verify.hpp"

using namespace qlozenge;

TEST_CASE("reports") {
  const Report ok = make_report("x", "1", QPoly(2), QPoly(2));
  CHECK(ok.passed());
  CHECK_FALSE(ok.witness);
  const Report bad = make_report("x", "1", QPoly::parse("1 + q"), QPoly(1));
  CHECK(bad.status == Status::Fail);
  REQUIRE(bad.witness);
  CHECK(bad.witness->to_string() == "q");
  CHECK(status_name(skipped_report("x", "1", "why").status) == "skipped");
}

TEST_CASE("formula against enumeration") {
  const Report hex = check_formula_vs_enumeration({"hexagon", {2, 2, 2}, {}}, Weight::Uniform);
  CHECK(hex.passed());
  CHECK(hex.lhs == QPoly(20));
  CHECK(check_formula_vs_enumeration({"magnet_bar", {1, 1, 1, 1, 1, 1}, {}}, Weight::Wt3).passed());
  const Report zero = check_formula_vs_enumeration({"q_region", {0, 0, 0, 0, 0, 0, 0, 0}, {}}, Weight::Wt2);
  CHECK(zero.passed());
  CHECK(zero.lhs == QPoly(1));
  CHECK(check_formula_vs_enumeration({"semihexagon", {2, 1}, {1, 3}}, Weight::Wt2).passed());
  CHECK(check_formula_vs_enumeration({"k_region", {1, 1, 1, 1, 1}, {}}, Weight::Wt2).passed());
  CHECK(check_formula_vs_enumeration({"q_region", {1, 1, 1, 1, 1, 1, 1, 1}, {}}, Weight::Wt1).passed());
  CHECK_THROWS_AS(check_formula_vs_enumeration({"hexagon", {5, 5, 5}, {}}, Weight::Wt2, Budget{120, 8}),
                  BudgetExceeded);
  CHECK_THROWS_AS(formula_for({"q_region", {1, 1, 1, 1, 1, 1, 1, 1}, {}}, Weight::Wt3), std::invalid_argument);
  CHECK_THROWS_AS(build_region({"nonagon", {1}, {}}), std::invalid_argument);
}

TEST_CASE("Kuo condensation") {
  const Region hex = build_hexagon(1, 1, 1);
  const auto marks = spread_marks(hex, 0);
  REQUIRE(marks);
  const Report r = check_kuo(hex, *marks, Weight::Uniform);
  CHECK(r.passed());
  CHECK(r.lhs == QPoly(2));
  CHECK(r.rhs == QPoly(2));

  const RegionParams bar{1, 1, 1, 1, 1, 1, 0, 0};
  CHECK(check_kuo(build_q_region(bar), standard_marks(bar), Weight::Wt2).passed());
  CHECK(check_kuo(build_magnet_bar(1, 1, 1, 1, 1, 1), standard_marks(bar), Weight::Wt3).passed());

  const std::array<Triangle, 4> bad = {(*marks)[0], (*marks)[0], (*marks)[2], (*marks)[3]};
  CHECK_THROWS_AS(check_kuo(hex, bad, Weight::Uniform), BadMarks);

  const auto library = mark_library();
  CHECK(library.size() >= 20);
  for (const auto& mp : library) {
    CAPTURE(mp.name);
    CHECK(check_kuo(mp.region, mp.marks, Weight::Wt2).passed());
  }
}

TEST_CASE("magnet bar recurrence") {
  CHECK(check_magnet_recurrence(1, 1, 1, 1, 1, 1).passed());
  CHECK(check_magnet_recurrence(1, 1, 2, 1, 0, 1).passed());
  CHECK(check_magnet_recurrence(1, 1, 1, 1, 1, 1, Weight::Wt3).passed());
  const Report pre = check_magnet_recurrence(1, 1, 1, 0, 1, 1);
  CHECK(pre.status == Status::Skipped);
}

TEST_CASE("Q recurrence") {
  CHECK(check_q_recurrence({1, 1, 1, 1, 1, 1, 1, 1}).passed());
  CHECK(check_q_recurrence({2, 1, 1, 1, 0, 0, 0, 0}).passed());
  CHECK(check_q_recurrence({1, 1, 0, 1, 1, 0, 1, 1}).passed());
  CHECK(check_q_recurrence({1, 0, 1, 1, 1, 1, 1, 1}).status == Status::Skipped);
}

TEST_CASE("psi identity") {
  CHECK(check_psi_recurrence({1, 1, 1, 1, 1, 1, 1, 1}).passed());
  CHECK(check_psi_recurrence({2, 2, 1, 1, 1, 0, 1, 0}).passed());
  CHECK(check_psi_recurrence({1, 1, 0, 1, 1, 1, 1, 1}).status == Status::Skipped);
  for (int z = 0; z <= 20; ++z) {
    const Report r = check_q_int_addition(0, z);
    CHECK(r.passed());
    CHECK(r.lhs == q_int(z));
  }
  CHECK(check_q_int_addition(20, 20).passed());
}

TEST_CASE("weight relation on tilings") {
  CHECK(check_prop31({}).passed());
  CHECK(check_prop31({1, 1, 1, 1, 0, 0, 0, 0}).passed());
  CHECK(check_prop31({1, 1, 1, 1, 1, 1, 1, 1}).passed());
  const RegionParams ones{1, 1, 1, 1, 1, 1, 1, 1};
  CHECK(volume_series(build_q_region(ones)) == theorem_qmain(ones).poly);
}

TEST_CASE("reduction of Kuo regions") {
  const auto reports = check_kuo_reduction({1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(reports.size() == 5);
  for (const auto& r : reports) CHECK(r.passed());
}

TEST_CASE("random sub-regions") {
  const auto a = random_subregions(20, 5);
  const auto b = random_subregions(20, 5);
  REQUIRE(a.size() == 20);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k] == b[k]);
    CHECK(check_oracle_equivalence(a[k], Weight::Wt2).passed());
  }
}

TEST_CASE("suites") {
  const auto names = suite_names();
  CHECK(std::find(names.begin(), names.end(), "qmain") != names.end());
  SuiteOptions opt;
  opt.max_sum = 3;
  const auto one = run_suite("qmain", opt);
  opt.jobs = 3;
  const auto three = run_suite("qmain", opt);
  REQUIRE(one.size() == three.size());
  CHECK_FALSE(one.empty());
  for (std::size_t k = 0; k < one.size(); ++k) {
    CHECK(one[k].params == three[k].params);
    CHECK(one[k].check == three[k].check);
    CHECK(one[k].passed());
  }
  CHECK_THROWS_AS(run_suite("nonsense", opt), std::invalid_argument);

  // A tiny budget turns oversized cases into skips rather than failures.
  SuiteOptions tight;
  tight.max_sum = 4;
  tight.budget = Budget{120, 2};
  std::size_t skipped = 0;
  for (const auto& r : run_suite("macmahon", tight)) {
    CHECK(r.status != Status::Fail);
    if (r.status == Status::Skipped) ++skipped;
  }
  CHECK(skipped > 0);
}
