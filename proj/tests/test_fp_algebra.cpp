#include <doctest.h>

#include <algorithm>
#include <random>

#include "polynomial.hpp"
#include "rowspace.hpp"
#include "surface.hpp"

using namespace hp0;

namespace {

Poly<PrimeField> mono_poly(const PrimeField& K, Monomial m, int64_t c = 1) {
  Poly<PrimeField> f;
  add_term(K, f, m, K.from_int(c));
  return f;
}

// x^3 - y z over F_p
Poly<PrimeField> a2_relation(const PrimeField& K) {
  return poly_from_terms(K, 3, {{{3, 0, 0}, 1}, {{0, 1, 1}, -1}});
}

Poly<PrimeField> random_homogeneous(const PrimeField& K, const WeightSystem& w, int64_t deg,
                                    std::mt19937& rng) {
  auto monos = monomials_of_degree(w, deg);
  Poly<PrimeField> f;
  std::uniform_int_distribution<int64_t> coef(0, K.p - 1);
  for (const auto& m : monos) add_term(K, f, m, coef(rng));
  return f;
}

// plain full-matrix elimination, used as the rank oracle
int64_t elimination_rank(const PrimeField& K, std::vector<std::vector<int64_t>> rows) {
  size_t rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t sel = rank;
    while (sel < rows.size() && K.is_zero(rows[sel][c])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    int64_t inv = K.inv(rows[rank][c]);
    for (size_t j = c; j < cols; ++j) rows[rank][j] = K.mul(rows[rank][j], inv);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || K.is_zero(rows[r][c])) continue;
      int64_t s = rows[r][c];
      for (size_t j = c; j < cols; ++j)
        rows[r][j] = K.sub(rows[r][j], K.mul(s, rows[rank][j]));
    }
    ++rank;
  }
  return int64_t(rank);
}

}  // namespace

TEST_SUITE("fp-algebra") {

TEST_CASE("weighted degree") {
  WeightSystem w233({2, 3, 3});
  CHECK(weighted_degree({0, 0, 0}, w233) == 0);
  CHECK(weighted_degree({3, 0, 0}, w233) == 6);
  CHECK(weighted_degree({1, 1, 1}, WeightSystem({1, 1, 1})) == 3);
  CHECK_THROWS_AS(weighted_degree({1, 0}, w233), std::invalid_argument);
  CHECK_THROWS_AS(WeightSystem({2, 0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSystem(std::vector<int64_t>{}), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
  PrimeField K7(7);
  auto q = a2_relation(K7);
  auto qx = partial_derivative(K7, q, 0);
  CHECK(qx.terms.size() == 1);
  CHECK(qx.terms.at({2, 0, 0}) == 3);

  PrimeField K5(5);
  auto frob = mono_poly(K5, {5, 0, 0});
  CHECK(partial_derivative(K5, frob, 0).is_zero());

  auto x2y = mono_poly(K5, {2, 1, 0});
  auto dy = partial_derivative(K5, x2y, 1);
  CHECK(dy.terms.size() == 1);
  CHECK(dy.terms.at({2, 0, 0}) == 1);
}

TEST_CASE("surface bracket on coordinates") {
  PrimeField K(7);
  auto q = a2_relation(K);
  auto x = mono_poly(K, {1, 0, 0});
  auto y = mono_poly(K, {0, 1, 0});
  auto z = mono_poly(K, {0, 0, 1});

  auto qz = partial_derivative(K, q, 2);
  CHECK(surface_bracket(K, x, y, q).terms == qz.terms);

  auto yz = surface_bracket(K, y, z, q);  // equals Q_x = 3x^2
  CHECK(yz.terms.size() == 1);
  CHECK(yz.terms.at({2, 0, 0}) == 3);

  auto zx = surface_bracket(K, z, x, q);
  CHECK(zx.terms == partial_derivative(K, q, 1).terms);

  auto f = poly_add(K, x, poly_mul(K, y, z));
  CHECK(surface_bracket(K, f, f, q).is_zero());
}

TEST_CASE("bracket antisymmetry and degree shift") {
  PrimeField K(7);
  WeightSystem w({2, 3, 3});
  auto q = a2_relation(K);
  const int64_t shift = 6 - (2 + 3 + 3);  // d - a - b - c
  std::mt19937 rng(91);
  for (int iter = 0; iter < 30; ++iter) {
    int64_t d1 = 2 + int64_t(rng() % 8), d2 = 2 + int64_t(rng() % 8);
    auto f = random_homogeneous(K, w, d1, rng);
    auto g = random_homogeneous(K, w, d2, rng);
    auto fg = surface_bracket(K, f, g, q);
    auto gf = surface_bracket(K, g, f, q);
    CHECK(poly_add(K, fg, gf).is_zero());
    for (const auto& [m, c] : fg.terms) CHECK(w.degree(m) == d1 + d2 + shift);
  }
}

TEST_CASE("bracket Leibniz rule") {
  PrimeField K(7);
  WeightSystem w({2, 3, 3});
  auto q = a2_relation(K);
  OrderContext ord{w, TermOrder::GrlexWeighted};
  std::mt19937 rng(17);
  for (int iter = 0; iter < 20; ++iter) {
    auto f = random_homogeneous(K, w, 2 + int64_t(rng() % 5), rng);
    auto g = random_homogeneous(K, w, 2 + int64_t(rng() % 5), rng);
    auto h = random_homogeneous(K, w, 2 + int64_t(rng() % 5), rng);
    auto lhs = surface_bracket(K, poly_mul(K, f, g), h, q);
    auto rhs = poly_add(K, poly_mul(K, f, surface_bracket(K, g, h, q)),
                        poly_mul(K, g, surface_bracket(K, f, h, q)));
    CHECK(normal_form(K, lhs, q, ord).terms == normal_form(K, rhs, q, ord).terms);
  }
}

TEST_CASE("normal form frozen cases") {
  PrimeField K(7);
  auto q = a2_relation(K);
  OrderContext ord{WeightSystem({2, 3, 3}), TermOrder::GrlexWeighted};

  CHECK(normal_form(K, q, q, ord).is_zero());

  auto x3 = mono_poly(K, {3, 0, 0});
  auto nf = normal_form(K, x3, q, ord);
  CHECK(nf.terms.size() == 1);
  CHECK(nf.terms.at({0, 1, 1}) == 1);

  auto reduced = poly_from_terms(K, 3, {{{0, 2, 1}, 4}, {{1, 1, 0}, 2}});
  CHECK(normal_form(K, reduced, q, ord).terms == reduced.terms);
}

TEST_CASE("normal form is idempotent and degreewise linear") {
  PrimeField K(7);
  WeightSystem w({2, 3, 3});
  auto q = a2_relation(K);
  OrderContext ord{w, TermOrder::GrlexWeighted};
  std::mt19937 rng(23);
  for (int iter = 0; iter < 25; ++iter) {
    int64_t deg = 4 + int64_t(rng() % 14);
    auto f = random_homogeneous(K, w, deg, rng);
    auto g = random_homogeneous(K, w, deg, rng);
    auto nf = normal_form(K, f, q, ord);
    CHECK(normal_form(K, nf, q, ord).terms == nf.terms);
    int64_t alpha = 1 + int64_t(rng() % 6), beta = 1 + int64_t(rng() % 6);
    auto combo = poly_add(K, poly_scale(K, f, alpha), poly_scale(K, g, beta));
    auto lhs = normal_form(K, combo, q, ord);
    auto rhs = poly_add(K, poly_scale(K, nf, alpha),
                        poly_scale(K, normal_form(K, g, q, ord), beta));
    CHECK(lhs.terms == rhs.terms);
  }
}

TEST_CASE("rank_append basics") {
  PrimeField K(5);
  RowSpace<PrimeField> rs(K, 2);
  CHECK(rs.rank_append({0, 0}));
  CHECK(rs.rank() == 0);
  CHECK_FALSE(rs.rank_append({1, 0}));
  CHECK(rs.rank() == 1);
  CHECK(rs.rank_append({3, 0}));  // scalar multiple absorbed
  CHECK(rs.rank() == 1);
  CHECK_THROWS_AS(rs.rank_append({1, 2, 3}), std::invalid_argument);
}

TEST_CASE("rank_append agrees with full elimination, any insertion order") {
  PrimeField K(5);
  std::mt19937 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    size_t dim = 3 + rng() % 5, count = 1 + rng() % 10;
    std::vector<std::vector<int64_t>> vs(count, std::vector<int64_t>(dim));
    for (auto& v : vs)
      for (auto& x : v) x = int64_t(rng() % 5);
    int64_t expected = elimination_rank(K, vs);

    RowSpace<PrimeField> rs(K, dim);
    size_t prev = 0;
    for (const auto& v : vs) {
      rs.rank_append(v);
      CHECK(rs.rank() >= prev);
      prev = rs.rank();
    }
    CHECK(int64_t(rs.rank()) == expected);

    std::shuffle(vs.begin(), vs.end(), rng);
    RowSpace<PrimeField> rs2(K, dim);
    for (const auto& v : vs) rs2.rank_append(v);
    CHECK(rs2.rank() == rs.rank());

    for (const auto& v : vs) CHECK(rs.contains(v));
  }
}

TEST_CASE("kernel tracker matches rank computation") {
  PrimeField K(11);
  std::mt19937 rng(41);
  for (int iter = 0; iter < 30; ++iter) {
    size_t dim = 3 + rng() % 6, count = 1 + rng() % 12;
    std::vector<std::vector<int64_t>> vs(count, std::vector<int64_t>(dim));
    for (auto& v : vs)
      for (auto& x : v) x = int64_t(rng() % 11);
    int64_t rank = elimination_rank(K, vs);

    KernelTracker<PrimeField> kt(K, dim);
    for (const auto& v : vs) {
      std::vector<std::pair<size_t, int64_t>> sparse;
      for (size_t i = 0; i < dim; ++i)
        if (v[i] != 0) sparse.emplace_back(i, v[i]);
      kt.constrain(sparse);
    }
    CHECK(int64_t(kt.dim()) == int64_t(dim) - rank);
  }
}

TEST_CASE("field element arithmetic") {
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(int64_t(1) << 32), std::invalid_argument);
  PrimeField K(2147483629);
  int64_t a = K.from_int(-5);
  CHECK(a == K.p - 5);
  CHECK(K.mul(K.inv(a), a) == 1);
  CHECK(K.pow(3, K.p - 1) == 1);
}

}  // TEST_SUITE
