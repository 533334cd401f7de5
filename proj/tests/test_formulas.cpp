#include <doctest.h>

#include "formulas.hpp"

using namespace hp0;

namespace {

TruncatedSeries sparse(int64_t N, std::initializer_list<std::pair<int64_t, int64_t>> entries) {
  TruncatedSeries s(N);
  for (auto [deg, val] : entries) s.add(deg, val);
  return s;
}

}  // namespace

TEST_SUITE("formula-engine") {

TEST_CASE("preset table") {
  ADEPreset a2 = ade_preset("A2");
  CHECK(a2.a == 2);
  CHECK(a2.b == 3);
  CHECK(a2.h == 3);
  CHECK(a2.exponents == std::vector<int64_t>{1, 2});
  CHECK(a2.surface.d == 6);

  ADEPreset d4 = ade_preset("D4");
  CHECK(d4.a == 4);
  CHECK(d4.b == 4);
  CHECK(d4.h == 6);
  CHECK(d4.exponents == std::vector<int64_t>{1, 3, 3, 5});

  ADEPreset e8 = ade_preset("E8");
  CHECK(e8.h == 30);
  CHECK(e8.exponents.size() == 8);

  CHECK(is_ade_label("A1"));
  CHECK(is_ade_label("D7"));
  CHECK_FALSE(is_ade_label("A0"));
  CHECK_FALSE(is_ade_label("D3"));
  CHECK_FALSE(is_ade_label("E9"));
  CHECK_FALSE(is_ade_label("B2"));
}

TEST_CASE("preset Jacobi rings realize the exponents") {
  for (const char* label : {"A1", "A2", "A3", "A4", "D4", "D5", "E6", "E7", "E8"}) {
    ADEPreset ps = ade_preset(label);
    CAPTURE(label);
    CHECK_NOTHROW(certify_isolated(ps.surface));
    int64_t top = 0;
    for (int64_t m : ps.exponents) top = std::max(top, 2 * (m - 1));
    auto dims = jacobi_dims_char0(ps.surface, top + 2);
    std::vector<int64_t> expect(size_t(top + 3), 0);
    for (int64_t m : ps.exponents) expect[size_t(2 * (m - 1))] += 1;
    CHECK(dims == expect);
  }
}

TEST_CASE("main closed form, frozen values") {
  CHECK(surface_formula_series(WeightSystem({2, 3, 3}), 6, 5, 23) ==
        sparse(23, {{0, 1}, {2, 1}, {8, 1}, {18, 1}, {23, 2}}));
  // gcd-rescaled A1
  CHECK(surface_formula_series(WeightSystem({2, 2, 2}), 4, 5, 18) ==
        sparse(18, {{0, 1}, {8, 1}, {18, 3}}));
  CHECK(surface_formula_series(WeightSystem({1, 1, 1}), 3, 5, 10) ==
        sparse(10, {{0, 1}, {1, 3}, {2, 3}, {3, 1}, {5, 3}, {10, 6}}));
  CHECK_THROWS_AS(surface_formula_series(WeightSystem({1, 1, 2}), 2, 5, 10), std::invalid_argument);
  CHECK_THROWS_AS(surface_formula_series(WeightSystem({1, 1, 1}), 3, 6, 10), std::invalid_argument);
}

TEST_CASE("Kleinian closed form, frozen values") {
  CHECK(kleinian_series(ade_preset("A2"), 7, 33) ==
        sparse(33, {{0, 1}, {2, 1}, {12, 1}, {26, 1}, {33, 2}}));
  CHECK(kleinian_series(ade_preset("A1"), 5, 8) == sparse(8, {{0, 1}, {8, 1}}));
  // E8 at p=31: only the Jacobi degrees below the first correction at 2p-2=60
  CHECK(kleinian_series(ade_preset("E8"), 31, 59) ==
        sparse(59, {{0, 1}, {12, 1}, {20, 1}, {24, 1}, {32, 1}, {36, 1}, {44, 1}, {56, 1}}));
}

TEST_CASE("Kleinian closed form equals the general one on every preset") {
  for (const char* label : {"A1", "A2", "A3", "A4", "D4", "D5", "E6", "E7", "E8"}) {
    ADEPreset ps = ade_preset(label);
    for (int64_t p : {int64_t(7), int64_t(13)}) {
      CAPTURE(label);
      CAPTURE(p);
      TruncatedSeries a = kleinian_series(ps, p, 200);
      TruncatedSeries b = surface_formula_series(ps.surface.weights, ps.surface.d, p, 200);
      CHECK_FALSE(first_mismatch(a, b).has_value());
    }
  }
}

TEST_CASE("plane curve closed form") {
  CHECK(plane_curve(4).chi == -4);
  CHECK_THROWS_AS(plane_curve(2), std::invalid_argument);

  // d=3 agrees with the unit-weight general closed form
  TruncatedSeries curve = plane_curve_series(plane_curve(3), 5, 10);
  CHECK(curve == surface_formula_series(WeightSystem({1, 1, 1}), 3, 5, 10));

  // d=4, p=7: Jacobi part (1+t+t^2)^3, first correction 7 at degree 8
  CHECK(plane_curve_series(plane_curve(4), 7, 11) ==
        sparse(11, {{0, 1}, {1, 3}, {2, 6}, {3, 7}, {4, 6}, {5, 3}, {6, 1}, {8, 7}}));

  CHECK_THROWS_AS(plane_curve_series(plane_curve(4), 2, 10), RefusalError);
  CHECK_THROWS_AS(plane_curve_series(plane_curve(3), 3, 10), RefusalError);

  for (int64_t d : {3, 4, 5, 6}) {
    for (int64_t p : {int64_t(5), int64_t(7), int64_t(11), int64_t(13)}) {
      if (d % p == 0) continue;
      CAPTURE(d);
      CAPTURE(p);
      TruncatedSeries a = plane_curve_series(plane_curve(d), p, 150);
      TruncatedSeries b = surface_formula_series(WeightSystem({1, 1, 1}), d, p, 150);
      CHECK_FALSE(first_mismatch(a, b).has_value());
    }
  }
}

TEST_CASE("stratum-data evaluator") {
  SUBCASE("a single point stratum is the constant series") {
    StratumData data;
    data.strata.push_back({0, {{{1}, cyclo_one()}}});
    CHECK(quotient_series(data, 7, 12) == sparse(12, {{0, 1}}));
  }
  SUBCASE("free plane stratum") {
    StratumData data;
    CycloRational plane;
    plane.denom_exps = {1, 1};
    data.strata.push_back({2, {{{1}, plane}}});
    int64_t p = 7;
    TruncatedSeries got = quotient_series(data, p, 60);
    CycloRational top;
    top.shift = 2 * (p - 1);
    top.denom_exps = {p, p};
    LaurentSlice e = expand(top, 0, 60);
    for (int64_t m = 0; m <= 60; ++m) CHECK(got.at(m) == e.at(m));
  }
  SUBCASE("Kleinian strata reproduce the Kleinian series") {
    for (const char* label : {"A1", "A2", "D4", "E6"}) {
      for (int64_t p : {int64_t(7), int64_t(13)}) {
        CAPTURE(label);
        TruncatedSeries a = quotient_series(kleinian_strata(ade_preset(label)), p, 200);
        TruncatedSeries b = kleinian_series(ade_preset(label), p, 200);
        CHECK_FALSE(first_mismatch(a, b).has_value());
      }
    }
  }
  SUBCASE("eta with a pole at zero is rejected") {
    StratumData data;
    CycloRational bad;
    bad.shift = -1;
    data.strata.push_back({0, {{{1}, bad}}});
    CHECK_THROWS_AS(quotient_series(data, 5, 10), std::invalid_argument);
  }
}

TEST_CASE("symmetric powers of a symplectic plane") {
  // n=1 collapses to the top-form series
  CHECK(sympower_series(1, 1, 5, 23) == sparse(23, {{8, 1}, {13, 2}, {18, 3}, {23, 4}}));
  for (int64_t m = 0; m < 8; ++m) CHECK(sympower_series(1, 1, 5, 23).at(m) == 0);

  // n=2 at p=5: diagonal part (k+1)@(8+5k) plus pair part at 16+5K
  CHECK(sympower_series(1, 2, 5, 30) ==
        sparse(30, {{8, 1}, {13, 2}, {16, 1}, {18, 3}, {21, 2}, {23, 4}, {26, 6}, {28, 5}}));

  for (int64_t d : {1, 2}) {
    for (int64_t p : {int64_t(5), int64_t(7)}) {
      CAPTURE(d);
      CAPTURE(p);
      TruncatedSeries got = sympower_series(d, 1, p, 200);
      CycloRational top;
      top.shift = 2 * d * (p - 1);
      top.denom_exps.assign(size_t(2 * d), p);
      LaurentSlice e = expand(top, 0, 200);
      for (int64_t m = 0; m <= 200; ++m) CHECK(got.at(m) == e.at(m));
    }
  }
}

TEST_CASE("symmetric powers of Kleinian singularities") {
  for (const char* label : {"A1", "A2", "D4", "E6"}) {
    for (int64_t p : {int64_t(7), int64_t(13)}) {
      CAPTURE(label);
      TruncatedSeries a = sym_kleinian_series(ade_preset(label), 1, p, 200);
      TruncatedSeries b = kleinian_series(ade_preset(label), p, 200);
      CHECK_FALSE(first_mismatch(a, b).has_value());
    }
  }
  // A2, n=2, p=11, low degrees: ground states of the two-factor products
  TruncatedSeries got = sym_kleinian_series(ade_preset("A2"), 2, 11, 8);
  CHECK(got == sparse(8, {{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}}));
  CHECK(got.at(0) == 1);
}

TEST_CASE("emitted series have nonnegative coefficients") {
  auto check_nonneg = [](const TruncatedSeries& s) {
    for (int64_t m = 0; m <= s.order(); ++m) CHECK(s.at(m) >= 0);
  };
  check_nonneg(surface_formula_series(WeightSystem({2, 3, 3}), 6, 7, 120));
  check_nonneg(surface_formula_series(WeightSystem({4, 6, 8}), 16, 11, 150));
  check_nonneg(plane_curve_series(plane_curve(5), 11, 120));
  check_nonneg(kleinian_series(ade_preset("E7"), 19, 150));
  check_nonneg(sympower_series(2, 3, 5, 80));
  check_nonneg(sym_kleinian_series(ade_preset("D4"), 2, 7, 80));
}

TEST_CASE("correction tail lands on the right residues") {
  // away from the Jacobi polynomial, support sits on d-a-b-c plus multiples of p
  struct Case {
    WeightSystem w;
    int64_t d, p;
  };
  for (const auto& cs : {Case{WeightSystem({2, 3, 3}), 6, 7},
                         Case{WeightSystem({1, 1, 1}), 4, 7},
                         Case{WeightSystem({1, 1, 1}), 5, 11}}) {
    TruncatedSeries full = surface_formula_series(cs.w, cs.d, cs.p, 150);
    LaurentSlice jac = expand(jacobi_rational(cs.w, cs.d), 0, 150);
    int64_t off = cs.d - cs.w[0] - cs.w[1] - cs.w[2];
    for (int64_t m = 0; m <= 150; ++m) {
      int64_t tail = full.at(m) - jac.at(m);
      if (tail != 0) {
        CHECK((m - off) % cs.p == 0);
        CHECK((m - off) / cs.p >= 1);
      }
    }
  }
}

}  // TEST_SUITE
