#include "formulas.hpp"

#include <algorithm>
#include <numeric>

namespace hp0 {

namespace {

Monomial mono3(int32_t i, int32_t j, int32_t k) { return Monomial{i, j, k}; }

/// Bivariate array truncated at s^n, t^N; c[j] is the t-row of s^j.
struct Bivariate {
  int64_t n, N;
  std::vector<std::vector<int64_t>> c;
  Bivariate(int64_t n_, int64_t N_) : n(n_), N(N_) {
    c.assign(size_t(n + 1), std::vector<int64_t>(size_t(N + 1), 0));
    c[0][0] = 1;
  }
  /// Multiply by (1 - s^a t^e)^{-1}: a cumulative pass along (a, e) strides.
  void geometric_pass(int64_t a, int64_t e) {
    for (int64_t j = a; j <= n; ++j)
      for (int64_t m = e; m <= N; ++m)
        c[size_t(j)][size_t(m)] =
            checked_add(c[size_t(j)][size_t(m)], c[size_t(j - a)][size_t(m - e)]);
  }
  /// Multiply by (1 - s^a t^e)^{-mult}.
  void inverse_factor(int64_t a, int64_t e, int64_t mult) {
    if (a > n || e > N) return;  // factor is 1 within the truncation
    for (int64_t r = 0; r < mult; ++r) geometric_pass(a, e);
  }
};

int64_t binomial64(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  int64_t r = 1;
  for (int64_t i = 1; i <= k; ++i)
    r = checked_mul(r, n - k + i) / i;
  return r;
}

}  // namespace

ADEPreset ade_preset(const std::string& label) {
  ADEPreset ps;
  ps.label = label;
  auto parse_index = [&](size_t from) -> int64_t {
    if (from >= label.size()) return -1;
    for (size_t i = from; i < label.size(); ++i)
      if (!isdigit(label[i])) return -1;
    return std::stoll(label.substr(from));
  };
  if (label.size() >= 2 && label[0] == 'A') {
    int64_t idx = parse_index(1);
    if (idx < 1) throw std::invalid_argument("bad A-type label: " + label);
    int64_t n = idx + 1;  // A_{n-1}
    ps.a = 2;
    ps.b = n;
    ps.h = n;
    for (int64_t m = 1; m <= n - 1; ++m) ps.exponents.push_back(m);
    ps.surface = make_surface(WeightSystem({2, n, n}),
                              {{mono3(int32_t(n), 0, 0), 1}, {mono3(0, 1, 1), -1}},
                              label);
  } else if (label.size() >= 2 && label[0] == 'D') {
    int64_t k = parse_index(1);
    if (k < 4) throw std::invalid_argument("bad D-type label: " + label);
    int64_t n = k - 2;
    ps.a = 4;
    ps.b = 2 * n;
    ps.h = 2 * n + 2;
    for (int64_t m = 1; m <= 2 * k - 3; m += 2) ps.exponents.push_back(m);
    ps.exponents.push_back(k - 1);
    std::sort(ps.exponents.begin(), ps.exponents.end());
    ps.surface = make_surface(
        WeightSystem({4, 2 * n, 2 * n + 2}),
        {{mono3(int32_t(n + 1), 0, 0), 1}, {mono3(1, 2, 0), 1}, {mono3(0, 0, 2), 1}},
        label);
  } else if (label == "E6") {
    ps.a = 6;
    ps.b = 8;
    ps.h = 12;
    ps.exponents = {1, 4, 5, 7, 8, 11};
    ps.surface = make_surface(WeightSystem({6, 8, 12}),
                              {{mono3(4, 0, 0), 1}, {mono3(0, 3, 0), 1}, {mono3(0, 0, 2), 1}},
                              label);
  } else if (label == "E7") {
    ps.a = 8;
    ps.b = 12;
    ps.h = 18;
    ps.exponents = {1, 5, 7, 9, 11, 13, 17};
    ps.surface = make_surface(WeightSystem({12, 8, 18}),
                              {{mono3(3, 0, 0), 1}, {mono3(1, 3, 0), 1}, {mono3(0, 0, 2), 1}},
                              label);
  } else if (label == "E8") {
    ps.a = 12;
    ps.b = 20;
    ps.h = 30;
    ps.exponents = {1, 7, 11, 13, 17, 19, 23, 29};
    ps.surface = make_surface(WeightSystem({12, 20, 30}),
                              {{mono3(5, 0, 0), 1}, {mono3(0, 3, 0), 1}, {mono3(0, 0, 2), 1}},
                              label);
  } else {
    throw std::invalid_argument("unknown ADE label: " + label);
  }
  if (ps.surface.d != 2 * ps.h) throw std::logic_error("preset degree is not 2h");
  if (ps.h != ps.a + ps.b - 2) throw std::logic_error("preset violates h = a + b - 2");
  return ps;
}

bool is_ade_label(const std::string& label) {
  try {
    ade_preset(label);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

PlaneCurveSpec plane_curve(int64_t d) {
  if (d < 3) throw std::invalid_argument("plane curves need degree >= 3");
  return PlaneCurveSpec{d, (3 - d) * d};
}

SurfaceSpec fermat_surface(int64_t d) {
  if (d < 2) throw std::invalid_argument("Fermat surface needs degree >= 2");
  return make_surface(WeightSystem({1, 1, 1}),
                      {{mono3(int32_t(d), 0, 0), 1},
                       {mono3(0, int32_t(d), 0), 1},
                       {mono3(0, 0, int32_t(d)), 1}},
                      "fermat" + std::to_string(d));
}

StratumData kleinian_strata(const ADEPreset& preset) {
  StratumData data;
  data.name = preset.label + " strata";
  Stratum fixed;
  fixed.dim_vk = 0;
  int64_t top = 0;
  for (int64_t m : preset.exponents) top = std::max(top, 2 * (m - 1));
  StratumPair pair0;
  pair0.psi.assign(size_t(top + 1), 0);
  for (int64_t m : preset.exponents) pair0.psi[size_t(2 * (m - 1))] += 1;
  pair0.eta = cyclo_one();
  fixed.pairs.push_back(std::move(pair0));
  data.strata.push_back(std::move(fixed));

  Stratum free_locus;
  free_locus.dim_vk = 2;
  StratumPair pair1;
  pair1.psi = {1};
  pair1.eta.shift = 0;
  pair1.eta.num.assign(size_t(preset.h + 1), 0);
  pair1.eta.num[0] = 1;
  pair1.eta.num[size_t(preset.h)] = 1;
  pair1.eta.denom_exps = {preset.a, preset.b};
  free_locus.pairs.push_back(std::move(pair1));
  data.strata.push_back(std::move(free_locus));
  return data;
}

TruncatedSeries surface_formula_series(const WeightSystem& w, int64_t d, int64_t p, int64_t N) {
  if (w.size() != 3) throw std::invalid_argument("the surface closed form needs three weights");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (d <= w.max_weight())
    throw std::invalid_argument("invalid surface: d must exceed every weight");
  int64_t g = w.weight_gcd();
  if (d % g != 0)
    throw std::invalid_argument("degree is not a multiple of the weight gcd");
  WeightSystem wr({w[0] / g, w[1] / g, w[2] / g});
  int64_t dr = d / g;
  int64_t Nr = N / g;

  TruncatedSeries reduced(std::max<int64_t>(Nr, 0));
  LaurentSlice jac = expand(jacobi_rational(wr, dr), 0, Nr);
  for (int64_t m = 0; m <= Nr; ++m) reduced.add(m, jac.at(m));
  int64_t off = dr - wr[0] - wr[1] - wr[2];
  int64_t K = (Nr - off) / p;  // largest k with pk + off <= Nr
  if (K >= 1) {
    LaurentSlice f = f_series(wr, dr, K);
    for (int64_t k = 1; k <= K; ++k) reduced.add(p * k + off, f.at(k));
  }

  TruncatedSeries out(N);
  for (int64_t m = 0; m <= Nr; ++m) out.add(g * m, reduced.at(m));
  return out;
}

TruncatedSeries kleinian_series(const ADEPreset& preset, int64_t p, int64_t N) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  TruncatedSeries out(N);
  for (int64_t m : preset.exponents) out.add(2 * (m - 1), 1);
  int64_t K = (N - (2 * p - 2)) / p;
  if (K >= 0) {
    CycloRational eta;
    eta.num.assign(size_t(preset.h + 1), 0);
    eta.num[0] = 1;
    eta.num[size_t(preset.h)] = 1;
    eta.denom_exps = {preset.a, preset.b};
    LaurentSlice e = expand(eta, 0, K);
    for (int64_t k = 0; k <= K; ++k) out.add(2 * p - 2 + p * k, e.at(k));
  }
  return out;
}

TruncatedSeries plane_curve_series(const PlaneCurveSpec& spec, int64_t p, int64_t N) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (spec.d % p == 0) throw RefusalError("p divides the curve degree");
  TruncatedSeries out(N);
  CycloRational jac;
  {
    std::vector<int64_t> lin(size_t(spec.d), 0);
    lin[0] = 1;
    lin[size_t(spec.d - 1)] = -1;  // 1 - z^{d-1}
    std::vector<int64_t> numv = lin;
    for (int i = 0; i < 2; ++i) {
      std::vector<int64_t> r(numv.size() + lin.size() - 1, 0);
      for (size_t a = 0; a < numv.size(); ++a)
        for (size_t b = 0; b < lin.size(); ++b)
          r[a + b] = checked_add(r[a + b], checked_mul(numv[a], lin[b]));
      numv = std::move(r);
    }
    jac.num = numv;
    jac.denom_exps = {1, 1, 1};
  }
  LaurentSlice jacc = expand(jac, 0, N);
  for (int64_t m = 0; m <= N; ++m) out.add(m, jacc.at(m));

  int64_t off = spec.d - 3;
  int64_t K = (N - off) / p;
  if (K >= 1) {
    CycloRational base;  // (1 - z^d)/(1 - z)^3
    base.num.assign(size_t(spec.d + 1), 0);
    base.num[0] = 1;
    base.num[size_t(spec.d)] = -1;
    base.denom_exps = {1, 1, 1};
    LaurentSlice b = expand(base, 1, K);
    for (int64_t k = 1; k <= K; ++k)
      out.add(off + p * k, checked_sub(b.at(k), spec.chi));
  }
  return out;
}

TruncatedSeries quotient_series(const StratumData& data, int64_t p, int64_t N) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  TruncatedSeries out(N);
  for (const auto& stratum : data.strata) {
    if (stratum.dim_vk < 0) throw std::invalid_argument("dim V^K must be nonnegative");
    int64_t shift = (p - 1) * stratum.dim_vk;
    for (const auto& pair : stratum.pairs) {
      auto val = pair.eta.valuation();
      if (val && *val < 0)
        throw std::invalid_argument("eta must be a power series (nonnegative valuation)");
      for (int64_t c : pair.psi)
        if (c < 0) throw std::invalid_argument("psi must have nonnegative coefficients");
      if (shift > N) continue;
      int64_t K = (N - shift) / p;
      LaurentSlice eta = expand(pair.eta, 0, K);
      for (int64_t c : eta.coeffs)
        if (c < 0) throw std::invalid_argument("eta must expand with nonnegative coefficients");
      for (size_t i = 0; i < pair.psi.size(); ++i) {
        if (pair.psi[i] == 0) continue;
        for (int64_t k = 0; k <= K; ++k) {
          int64_t deg = shift + int64_t(i) + p * k;
          if (deg > N) break;
          out.add(deg, checked_mul(pair.psi[i], eta.at(k)));
        }
      }
    }
  }
  return out;
}

TruncatedSeries sympower_series(int64_t half_dim, int64_t n, int64_t p, int64_t N) {
  if (half_dim < 1 || n < 1) throw std::invalid_argument("need d >= 1 and n >= 1");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  Bivariate P(n, N);
  for (int64_t k = 0;; ++k) {
    int64_t e = 2 * half_dim * (p - 1) + k * p;
    if (e > N) break;
    int64_t mult = binomial64(2 * half_dim + k - 1, k);
    for (int64_t a = 1; a <= n; ++a) P.inverse_factor(a, e, mult);
  }
  TruncatedSeries out(N);
  out.c = P.c[size_t(n)];
  return out;
}

TruncatedSeries sym_kleinian_series(const ADEPreset& preset, int64_t n, int64_t p,
                                    int64_t N) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  Bivariate P(n, N);
  // d_k: coefficients of (1+z^h)/((1-z^a)(1-z^b)), taken with k >= 0, d_0 = 1
  CycloRational eta;
  eta.num.assign(size_t(preset.h + 1), 0);
  eta.num[0] = 1;
  eta.num[size_t(preset.h)] = 1;
  eta.denom_exps = {preset.a, preset.b};
  int64_t kmax = (N - 2 * (p - 1)) / p;
  LaurentSlice dks = kmax >= 0 ? expand(eta, 0, kmax) : LaurentSlice{};

  for (int64_t j = 0; j + 1 <= n; ++j) {
    int64_t a = j + 1;
    for (int64_t m : preset.exponents) {
      int64_t e = 2 * (m - 1 + j * preset.h);
      if (e <= N) P.inverse_factor(a, std::max<int64_t>(e, 0), 1);
    }
    for (int64_t k = 0; k <= kmax; ++k) {
      int64_t e = 2 * (p - 1) + k * p;
      if (e > N) break;
      P.inverse_factor(a, e, dks.at(k));
    }
  }
  TruncatedSeries out(N);
  out.c = P.c[size_t(n)];
  return out;
}

}  // namespace hp0
