#include <doctest.h>

#include "verify.hpp"

using namespace hp0;

TEST_SUITE("verify-harness") {

TEST_CASE("surface comparison") {
  auto a2 = ade_preset("A2").surface;
  ComparisonReport rep = compare_surface(a2, 7, 33);
  CHECK(rep.matched());
  CHECK(rep.N == 33);
  CHECK(rep.brute.at(33) == 2);

  ComparisonReport fermat = compare_surface(fermat_surface(3), 5, 15);
  CHECK(fermat.matched());

  ComparisonReport refused = compare_surface(a2, 3);
  CHECK(refused.refused);
  CHECK_FALSE(refused.matched());
  CHECK(refused.refusal_reason.find("divides") != std::string::npos);
}

TEST_CASE("default depth covers the tail") {
  auto a2 = ade_preset("A2").surface;
  int64_t N = default_surface_depth(a2, 7);
  // two correction terms live at 7k - 2; both must fit
  CHECK(N >= 26);
  ComparisonReport rep = compare_surface(a2, 7);
  CHECK(rep.matched());
  int64_t nonzero_tail = 0;
  for (int64_t m = 7; m <= rep.N; ++m)
    if (rep.brute.at(m) != 0) ++nonzero_tail;
  CHECK(nonzero_tail >= 2);
}

TEST_CASE("sweeps with threshold annotations") {
  ADEPreset a3 = ade_preset("A3");
  SweepReport rep = sweep_surface(a3.surface, {3, 5, 7, 11, 13}, std::nullopt, a3.h,
                                  2 * (a3.h - 2));
  CHECK(rep.thresholds.surface_threshold == 2 * 8 - 10);
  REQUIRE(rep.thresholds.kleinian_h.has_value());
  CHECK(*rep.thresholds.kleinian_h == 4);
  REQUIRE(rep.thresholds.top_degree_threshold.has_value());
  CHECK(*rep.thresholds.top_degree_threshold == 3);
  CHECK(rep.all_matched_above(a3.h));
  REQUIRE(rep.rows.size() == 5);
  CHECK(rep.rows[0].p == 3);
  CHECK(rep.rows[0].status == SweepRow::Status::Refused);  // 3 <= max weight 4
  for (size_t i = 1; i < rep.rows.size(); ++i)
    CHECK(rep.rows[i].status == SweepRow::Status::Match);

  SweepReport curve = sweep_surface(fermat_surface(4), {3, 7, 11});
  CHECK(curve.thresholds.surface_threshold == 5);
  CHECK(curve.all_matched_above(5));

  SweepReport empty = sweep_surface(a3.surface, {});
  CHECK(empty.rows.empty());
}

TEST_CASE("E-type presets agree with the brute force too") {
  ComparisonReport e7 = compare_surface(ade_preset("E7").surface, 19, 200);
  CHECK(e7.matched());
  ComparisonReport e8 = compare_surface(ade_preset("E8").surface, 31, 200);
  CHECK(e8.matched());
}

TEST_CASE("asymmetric weights: mismatch below the threshold, match above") {
  // x^12 + y^6 + z^4 with weights (1,2,3): threshold 2d-a-b-c = 18
  auto spec = make_surface(WeightSystem({1, 2, 3}),
                           {{{12, 0, 0}, 1}, {{0, 6, 0}, 1}, {{0, 0, 4}, 1}},
                           "brieskorn-12-6-4");
  certify_isolated(spec);
  SweepReport rep = sweep_surface(spec, {7, 19});
  CHECK(rep.thresholds.surface_threshold == 18);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].status == SweepRow::Status::Mismatch);
  REQUIRE(rep.rows[0].mismatch.has_value());
  CHECK(*rep.rows[0].mismatch == 13);  // first tail degree p + d-a-b-c
  CHECK(rep.rows[1].status == SweepRow::Status::Match);
  CHECK(rep.all_matched_above(18));
  CHECK_FALSE(rep.all_matched_above(5));
}

TEST_CASE("three-way type A cross-check") {
  CrossOracleReport rep = cross_oracles(3, 7, 33);
  CHECK(rep.matched());
  CHECK(rep.explicit_decomposition.at(33) == 2);
  CHECK(cross_oracles(2, 5).matched());
  CHECK_THROWS_AS(cross_oracles(2, 2, 10), RefusalError);
}

TEST_CASE("reports are deterministic") {
  auto a2 = ade_preset("A2").surface;
  ComparisonReport a = compare_surface(a2, 7);
  ComparisonReport b = compare_surface(a2, 7);
  CHECK(a.brute == b.brute);
  CHECK(a.formula == b.formula);
  CHECK(a.N == b.N);

  SweepReport s1 = sweep_surface(a2, {5, 7, 11});
  SweepReport s2 = sweep_surface(a2, {11, 7, 5});  // order-insensitive
  REQUIRE(s1.rows.size() == s2.rows.size());
  for (size_t i = 0; i < s1.rows.size(); ++i) {
    CHECK(s1.rows[i].p == s2.rows[i].p);
    CHECK(s1.rows[i].status == s2.rows[i].status);
  }
}

}  // TEST_SUITE
