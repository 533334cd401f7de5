#include <doctest.h>

#include "formulas.hpp"
#include "surface.hpp"

using namespace hp0;

namespace {

TruncatedSeries hp0_of(const std::vector<DegreeReport>& reports) {
  TruncatedSeries s(int64_t(reports.size()) - 1);
  for (const auto& r : reports) s.c[size_t(r.degree)] = r.hp0_dim;
  return s;
}

}  // namespace

TEST_SUITE("surface-hp0") {

TEST_CASE("spec construction and validation") {
  auto a2 = ade_preset("A2").surface;
  CHECK(a2.d == 6);
  CHECK_NOTHROW(certify_isolated(a2));

  // not quasihomogeneous
  CHECK_THROWS_AS(make_surface(WeightSystem({1, 1, 1}),
                               {{{2, 0, 0}, 1}, {{1, 0, 0}, 1}}, "bad"),
                  std::invalid_argument);
  // zero polynomial
  CHECK_THROWS_AS(make_surface(WeightSystem({1, 1, 1}), {{{1, 0, 0}, 0}}, "zero"),
                  std::invalid_argument);

  // x^2 y has a non-isolated singular locus, certificate must fail
  auto bad = make_surface(WeightSystem({1, 1, 1}), {{{2, 1, 0}, 1}}, "x2y");
  CHECK_THROWS_AS(certify_isolated(bad), std::invalid_argument);
  auto xyz = make_surface(WeightSystem({1, 1, 1}), {{{1, 1, 1}, 1}}, "xyz");
  CHECK_THROWS_AS(certify_isolated(xyz), std::invalid_argument);
}

TEST_CASE("basis of a degree") {
  auto a2 = ade_preset("A2").surface;
  CHECK(basis_of_degree(a2, 7, 6).size() == 3);
  auto deg0 = basis_of_degree(a2, 7, 0);
  REQUIRE(deg0.size() == 1);
  CHECK(deg0[0] == Monomial{0, 0, 0});
  CHECK(basis_of_degree(a2, 7, 1).empty());
}

TEST_CASE("basis sizes match the Hilbert series") {
  for (const char* label : {"A2", "E6"}) {
    auto spec = ade_preset(label).surface;
    LaurentSlice expected = expand(hilbert_rational(spec.weights, spec.d), 0, 40);
    for (int64_t m = 0; m <= 40; ++m)
      CHECK(int64_t(basis_of_degree(spec, 13, m).size()) == expected.at(m));
  }
}

TEST_CASE("brute-force dimensions: A1 at p=5") {
  auto a1 = ade_preset("A1").surface;
  auto reports = hp0_dims(a1, 5, 10);
  TruncatedSeries expect(10);
  expect.add(0, 1);
  expect.add(8, 1);
  CHECK(hp0_of(reports) == expect);
  for (const auto& r : reports) {
    CHECK(r.hp0_dim == r.dim_A - r.dim_bracket_span);
    CHECK(r.dim_bracket_span <= r.dim_jacobi_ideal);
    CHECK(r.dim_jacobi_ideal <= r.dim_A);
  }
}

TEST_CASE("brute-force dimensions: A2 at p=7") {
  auto a2 = ade_preset("A2").surface;
  TruncatedSeries got = hp0_series(a2, 7, 33);
  TruncatedSeries expect(33);
  expect.add(0, 1);
  expect.add(2, 1);
  expect.add(12, 1);
  expect.add(26, 1);
  expect.add(33, 2);
  CHECK(got == expect);
  CHECK(got.at(0) == 1);  // constants are never brackets here
}

TEST_CASE("refusals") {
  auto a2 = ade_preset("A2").surface;
  CHECK_THROWS_AS(hp0_dims(a2, 3, 10), RefusalError);   // 3 | 6
  CHECK_THROWS_AS(hp0_dims(a2, 2, 10), RefusalError);   // 2 | 6 and 2 < 3
  auto a4 = ade_preset("A4").surface;
  CHECK_THROWS_AS(hp0_dims(a4, 3, 10), RefusalError);   // 3 <= max weight 5
  CHECK_THROWS_AS(hp0_dims(a2, 6, 10), std::invalid_argument);  // not prime

  // Q that vanishes identically mod p
  auto fragile = make_surface(WeightSystem({2, 2, 2}),
                              {{{2, 0, 0}, 5}, {{0, 1, 1}, -5}}, "5*(x^2-yz)");
  CHECK_THROWS_AS(hp0_dims(fragile, 5, 4), RefusalError);
}

TEST_CASE("Jacobi ring dimensions in characteristic zero") {
  SUBCASE("A2") {
    auto dims = jacobi_dims_char0(ade_preset("A2").surface, 6);
    CHECK(dims == std::vector<int64_t>{1, 0, 1, 0, 0, 0, 0});
  }
  SUBCASE("E8 exponents") {
    auto dims = jacobi_dims_char0(ade_preset("E8").surface, 60);
    std::vector<int64_t> expect(61, 0);
    for (int64_t m : {0, 12, 20, 24, 32, 36, 44, 56}) expect[size_t(m)] = 1;
    CHECK(dims == expect);
  }
  SUBCASE("smooth quadric") {
    auto quadric = make_surface(WeightSystem({1, 1, 1}),
                                {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}},
                                "quadric");
    auto dims = jacobi_dims_char0(quadric, 5);
    CHECK(dims == std::vector<int64_t>{1, 0, 0, 0, 0, 0});
  }
}

TEST_CASE("bracket span vs ideal: exceptional degrees") {
  auto a1 = ade_preset("A1").surface;
  for (int64_t m : bracket_ideal_exceptions(a1, 5, 20)) {
    CHECK((m + 2) % 5 == 0);  // d - a - b - c = -2
    CHECK(m + 2 > 0);
  }
  auto a2 = ade_preset("A2").surface;
  auto exc = bracket_ideal_exceptions(a2, 7, 12);
  for (int64_t m : exc) CHECK((m == 5 || m == 12));
}

TEST_CASE("dimension tables are independent of the term order") {
  auto a2 = ade_preset("A2").surface;
  auto grlex = hp0_dims(a2, 7, 30, TermOrder::GrlexWeighted);
  auto grevlex = hp0_dims(a2, 7, 30, TermOrder::GrevlexWeighted);
  REQUIRE(grlex.size() == grevlex.size());
  for (size_t i = 0; i < grlex.size(); ++i) {
    CHECK(grlex[i].dim_A == grevlex[i].dim_A);
    CHECK(grlex[i].dim_bracket_span == grevlex[i].dim_bracket_span);
    CHECK(grlex[i].dim_jacobi_ideal == grevlex[i].dim_jacobi_ideal);
  }
}

TEST_CASE("aggregated bracket span equals literal monomial pairs") {
  struct Case {
    const char* label;
    int64_t p, N;
  };
  for (auto [label, p, N] : {Case{"A1", 5, 20}, Case{"A2", 7, 25}}) {
    auto spec = ade_preset(label).surface;
    auto fast = hp0_dims(spec, p, N, TermOrder::GrlexWeighted, BracketSpanMethod::Aggregated);
    auto slow = hp0_dims(spec, p, N, TermOrder::GrlexWeighted, BracketSpanMethod::MonomialPairs);
    REQUIRE(fast.size() == slow.size());
    for (size_t i = 0; i < fast.size(); ++i)
      CHECK(fast[i].dim_bracket_span == slow[i].dim_bracket_span);
  }
  auto fermat = fermat_surface(3);
  auto fast = hp0_dims(fermat, 5, 15, TermOrder::GrlexWeighted, BracketSpanMethod::Aggregated);
  auto slow = hp0_dims(fermat, 5, 15, TermOrder::GrlexWeighted, BracketSpanMethod::MonomialPairs);
  for (size_t i = 0; i < fast.size(); ++i)
    CHECK(fast[i].dim_bracket_span == slow[i].dim_bracket_span);
}

TEST_CASE("low degrees reproduce the characteristic-zero answer") {
  // for p above 2d-a-b-c, degrees below 2p - 2 max(w) see no correction
  for (const char* label : {"A2", "A3"}) {
    auto spec = ade_preset(label).surface;
    int64_t p = 7;
    auto char0 = jacobi_dims_char0(spec, 20);
    auto modp = hp0_series(spec, p, 20);
    int64_t cutoff = 2 * p - 2 * spec.weights.max_weight();
    for (int64_t m = 0; m < std::min<int64_t>(cutoff, 20); ++m)
      CHECK(modp.at(m) == char0[size_t(m)]);
  }
}

TEST_CASE("Jacobi ring mod p can deviate only in controlled ways") {
  // sanity: at large p the mod-p Jacobi ring agrees with characteristic zero
  auto e6 = ade_preset("E6").surface;
  auto char0 = jacobi_dims_char0(e6, 44);
  auto modp = jacobi_dims_modp(e6, 13, 44);
  CHECK(char0 == modp);
}

}  // TEST_SUITE
