#include "series.hpp"

#include <algorithm>
#include <numeric>

namespace hp0 {

std::optional<int64_t> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
  int64_t n = std::min(a.order(), b.order());
  for (int64_t m = 0; m <= n; ++m)
    if (a.at(m) != b.at(m)) return m;
  return std::nullopt;
}

namespace {

std::vector<int64_t> dense_mul(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<int64_t> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
  }
  return r;
}

std::vector<int64_t> one_minus_z(int64_t e) {
  std::vector<int64_t> v(size_t(e) + 1, 0);
  v[0] = 1;
  v[size_t(e)] = -1;
  return v;
}

bool dense_is_zero(const std::vector<int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](int64_t c) { return c == 0; });
}

void require_surface_weights(const WeightSystem& w) {
  if (w.size() != 3) throw std::invalid_argument("expected a three-variable weight system");
}

}  // namespace

bool CycloRational::is_zero() const { return dense_is_zero(num); }

std::optional<int64_t> CycloRational::valuation() const {
  for (size_t i = 0; i < num.size(); ++i)
    if (num[i] != 0) return shift + int64_t(i);
  return std::nullopt;
}

CycloRational cyclo_one() { return CycloRational{}; }

CycloRational cyclo_mul_one_minus(const CycloRational& r, int64_t e) {
  CycloRational out = r;
  if (e == 0) {
    out.num.assign(1, 0);  // (1 - z^0) = 0
    return out;
  }
  if (e > 0) {
    out.num = dense_mul(out.num, one_minus_z(e));
  } else {
    // (1 - z^e) = -z^e (1 - z^{-e}) for e < 0
    out.shift += e;
    out.num = dense_mul(out.num, one_minus_z(-e));
    for (auto& c : out.num) c = checked_sub(0, c);
  }
  return out;
}

CycloRational cyclo_neg(const CycloRational& r) {
  CycloRational out = r;
  for (auto& c : out.num) c = checked_sub(0, c);
  return out;
}

CycloRational cyclo_reciprocal(const CycloRational& r) {
  // z^m N(z) / prod(1 - z^e)  at z -> 1/z:
  //   z^{-m} z^{-deg N} rev(N)(z) / prod(-z^{-e}(1 - z^e))
  CycloRational out;
  out.denom_exps = r.denom_exps;
  int64_t deg_n = int64_t(r.num.size()) - 1;
  int64_t sum_e = 0;
  for (int64_t e : r.denom_exps) sum_e += e;
  out.shift = -r.shift - deg_n + sum_e;
  out.num.assign(r.num.rbegin(), r.num.rend());
  if (r.denom_exps.size() % 2 == 1)
    for (auto& c : out.num) c = checked_sub(0, c);
  return out;
}

LaurentSlice expand(const CycloRational& r, int64_t lo, int64_t hi) {
  if (lo > hi) throw std::invalid_argument("expand: lo > hi");
  LaurentSlice out;
  out.start = lo;
  out.coeffs.assign(size_t(hi - lo + 1), 0);
  int64_t len = hi - r.shift + 1;  // work window covers degrees shift .. hi
  if (len <= 0 || r.is_zero()) return out;
  std::vector<int64_t> c(size_t(len), 0);
  for (size_t i = 0; i < r.num.size() && int64_t(i) < len; ++i) c[i] = r.num[i];
  for (int64_t e : r.denom_exps) {
    if (e < 1) throw std::invalid_argument("denominator exponents must be positive");
    for (int64_t k = e; k < len; ++k)
      c[size_t(k)] = checked_add(c[size_t(k)], c[size_t(k - e)]);
  }
  for (int64_t m = lo; m <= hi; ++m) {
    int64_t idx = m - r.shift;
    if (idx >= 0 && idx < len) out.coeffs[size_t(m - lo)] = c[size_t(idx)];
  }
  return out;
}

SplitParts split_parts(const CycloRational& r, int64_t depth) {
  SplitParts out;
  auto val = r.valuation();
  int64_t neg_lo = (val && *val < 0) ? *val : 0;
  if (neg_lo < 0) {
    out.neg = expand(r, neg_lo, -1);
  } else {
    out.neg.start = -1;
    out.neg.coeffs.clear();
  }
  out.constant = expand(r, 0, 0).coeffs[0];
  if (depth >= 1)
    out.pos_head = expand(r, 1, depth);
  else {
    out.pos_head.start = 1;
    out.pos_head.coeffs.clear();
  }
  return out;
}

CycloRational hilbert_rational(const WeightSystem& w, int64_t d) {
  require_surface_weights(w);
  CycloRational r;
  r.num = one_minus_z(d);
  r.denom_exps = {w[0], w[1], w[2]};
  return r;
}

CycloRational g_rational(const WeightSystem& w, int64_t d) {
  CycloRational r = hilbert_rational(w, d);
  r.shift = w[0] + w[1] + w[2] - d;
  return r;
}

CycloRational u_rational(const WeightSystem& w, int64_t d) {
  CycloRational r = hilbert_rational(w, d);
  return cyclo_mul_one_minus(r, w[0] + w[1] + w[2] - d);
}

CycloRational jacobi_rational(const WeightSystem& w, int64_t d) {
  require_surface_weights(w);
  CycloRational r;
  r.num = dense_mul(dense_mul(one_minus_z(d - w[0]), one_minus_z(d - w[1])),
                    one_minus_z(d - w[2]));
  r.denom_exps = {w[0], w[1], w[2]};
  return r;
}

LaurentSlice f_series(const WeightSystem& w, int64_t d, int64_t K) {
  require_surface_weights(w);
  if (std::gcd(std::gcd(w[0], w[1]), w[2]) != 1)
    throw std::invalid_argument("f_series requires gcd(a,b,c) = 1");
  if (K < 1) throw std::invalid_argument("f_series requires K >= 1");
  CycloRational g = g_rational(w, d);
  LaurentSlice f = expand(g, 1, K);
  // positive-degree contribution of g_-(1/z): s_k = (g_-)_{-k}
  LaurentSlice s = s_coefficients(w, d, K);
  for (int64_t k = 1; k <= K; ++k)
    f.coeffs[size_t(k - 1)] = checked_add(f.coeffs[size_t(k - 1)], s.at(k));
  return f;
}

LaurentSlice u_coefficients(const WeightSystem& w, int64_t d, int64_t lo, int64_t hi) {
  return expand(u_rational(w, d), lo, hi);
}

LaurentSlice s_coefficients(const WeightSystem& w, int64_t d, int64_t K) {
  LaurentSlice out;
  out.start = 1;
  out.coeffs.assign(size_t(std::max<int64_t>(K, 0)), 0);
  CycloRational g = g_rational(w, d);
  auto val = g.valuation();
  if (!val || *val >= 0) return out;
  LaurentSlice neg = expand(g, *val, -1);
  for (int64_t k = 1; k <= K; ++k)
    out.coeffs[size_t(k - 1)] = neg.at(-k);
  return out;
}

CoprimeRescalingReport check_coprime_rescaling(const WeightSystem& w, int64_t d, int64_t r, int64_t K) {
  require_surface_weights(w);
  int64_t l = std::lcm(std::lcm(w[0], w[1]), w[2]);
  if (std::gcd(r, l) != 1)
    throw std::invalid_argument("check_coprime_rescaling requires r coprime to lcm(a,b,c)");
  LaurentSlice c = u_coefficients(w, d, 1, checked_mul(r, K));
  LaurentSlice s = s_coefficients(w, d, checked_mul(r, K));
  CoprimeRescalingReport rep;
  for (int64_t k = 1; k <= K; ++k) {
    int64_t lhs = c.at(r * k);
    int64_t rhs = checked_add(checked_sub(c.at(k), s.at(k)), s.at(r * k));
    if (lhs != rhs) {
      rep.ok = false;
      rep.first_failure_k = k;
      rep.lhs = lhs;
      rep.rhs = rhs;
      return rep;
    }
  }
  return rep;
}

}  // namespace hp0
