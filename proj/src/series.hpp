#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace hp0 {

/// Contiguous window of an exact integer Laurent expansion:
/// coeffs[i] is the coefficient of z^(start+i).
struct LaurentSlice {
  int64_t start = 0;
  std::vector<int64_t> coeffs;

  int64_t lo() const { return start; }
  int64_t hi() const { return start + int64_t(coeffs.size()) - 1; }
  int64_t at(int64_t deg) const {
    if (deg < lo() || deg > hi()) return 0;
    return coeffs[size_t(deg - start)];
  }
  bool all_zero() const {
    for (int64_t c : coeffs)
      if (c != 0) return false;
    return true;
  }
};

/// Coefficients of degrees 0..N of a Hilbert-type series.
struct TruncatedSeries {
  std::vector<int64_t> c;

  TruncatedSeries() = default;
  explicit TruncatedSeries(int64_t order) : c(size_t(order + 1), 0) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
  }
  int64_t order() const { return int64_t(c.size()) - 1; }
  int64_t at(int64_t deg) const {
    if (deg < 0 || deg > order()) return 0;
    return c[size_t(deg)];
  }
  void add(int64_t deg, int64_t v) {
    if (deg >= 0 && deg <= order()) c[size_t(deg)] = checked_add(c[size_t(deg)], v);
  }
  bool operator==(const TruncatedSeries& o) const { return c == o.c; }
};

/// First degree where two truncated series differ on the common window.
std::optional<int64_t> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);

/// Rational function in quasi-product form  z^shift * num(z) / prod_j (1 - z^e_j).
struct CycloRational {
  int64_t shift = 0;
  std::vector<int64_t> num{1};       // num[i] = coefficient of z^i
  std::vector<int64_t> denom_exps;   // multiset of positive integers

  bool is_zero() const;
  /// Valuation of the expansion at 0 (nullopt for the zero function).
  std::optional<int64_t> valuation() const;
};

CycloRational cyclo_one();
/// Product with the polynomial (1 - z^e) folded into the numerator (e may be
/// negative or zero; those cases adjust shift / collapse to zero).
CycloRational cyclo_mul_one_minus(const CycloRational& r, int64_t e);
CycloRational cyclo_neg(const CycloRational& r);
/// The function r(1/z), renormalized back into quasi-product form.
CycloRational cyclo_reciprocal(const CycloRational& r);

/// Exact coefficients of the Laurent expansion of r at 0 on [lo, hi].
LaurentSlice expand(const CycloRational& r, int64_t lo, int64_t hi);

struct SplitParts {
  LaurentSlice neg;       // the full finite negative part
  int64_t constant = 0;   // coefficient of z^0
  LaurentSlice pos_head;  // positive part on [1, depth]
};
SplitParts split_parts(const CycloRational& r, int64_t depth);

// Builders for the standard surface series; w must have three weights.
CycloRational hilbert_rational(const WeightSystem& w, int64_t d);  // (1-z^d)/prod(1-z^w_i)
CycloRational g_rational(const WeightSystem& w, int64_t d);        // z^(a+b+c-d) * hilbert
CycloRational u_rational(const WeightSystem& w, int64_t d);        // (1-z^d)(1-z^(a+b+c-d))/prod
CycloRational jacobi_rational(const WeightSystem& w, int64_t d);   // prod(1-z^(d-w_i))/prod(1-z^w_i)

/// Coefficients on [1, K] of f(z) = g(z) - g_-(z) + g_-(1/z) - g_0.
/// Requires gcd of the weights to be 1 (callers rescale first).
LaurentSlice f_series(const WeightSystem& w, int64_t d, int64_t K);

/// Laurent coefficients c_l of u(z) at 0 on [lo, hi].
LaurentSlice u_coefficients(const WeightSystem& w, int64_t d, int64_t lo, int64_t hi);

/// s_k on [1, K], where sum_k s_k z^k = g_-(1/z). Zero beyond the finite
/// degree of g_-(1/z).
LaurentSlice s_coefficients(const WeightSystem& w, int64_t d, int64_t K);

struct CoprimeRescalingReport {
  bool ok = true;
  int64_t first_failure_k = -1;
  int64_t lhs = 0, rhs = 0;  // c_{rk} vs c_k - s_k + s_{rk} at the failure
};
/// Checks c_{rk} = c_k - s_k + s_{rk} for k in [1, K]; r must be coprime to
/// lcm of the weights.
CoprimeRescalingReport check_coprime_rescaling(const WeightSystem& w, int64_t d, int64_t r, int64_t K);

}  // namespace hp0
