#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "checked.hpp"

namespace hp0 {

/// Exponent vector of a monomial, one entry per variable.
using Monomial = std::vector<int32_t>;

/// Positive variable degrees defining a weighted grading.
struct WeightSystem {
  std::vector<int64_t> w;

  WeightSystem() = default;
  explicit WeightSystem(std::vector<int64_t> weights) : w(std::move(weights)) {
    if (w.empty()) throw std::invalid_argument("weight system must be nonempty");
    for (int64_t x : w)
      if (x < 1) throw std::invalid_argument("weights must be positive");
  }

  size_t size() const { return w.size(); }
  int64_t operator[](size_t i) const { return w[i]; }

  int64_t degree(const Monomial& m) const {
    if (m.size() != w.size())
      throw std::invalid_argument("monomial/weight length mismatch");
    int64_t d = 0;
    for (size_t i = 0; i < w.size(); ++i)
      d = checked_add(d, checked_mul(m[i], w[i]));
    return d;
  }

  int64_t max_weight() const {
    int64_t m = 0;
    for (int64_t x : w) m = std::max(m, x);
    return m;
  }

  int64_t weight_gcd() const {
    int64_t g = 0;
    for (int64_t x : w) g = std::gcd(g, x);
    return g;
  }
};

inline int64_t weighted_degree(const Monomial& m, const WeightSystem& w) {
  return w.degree(m);
}

inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] - b[i];
    if (r[i] < 0) throw std::invalid_argument("monomial division with negative exponent");
  }
  return r;
}

/// Term orders used for normal forms modulo the surface equation. Both
/// refine the weighted grading, so reduction is degreewise.
enum class TermOrder {
  GrlexWeighted,    // weighted degree, ties lexicographic on exponents
  GrevlexWeighted,  // weighted degree, ties reverse lexicographic
};

struct OrderContext {
  WeightSystem weights;
  TermOrder order = TermOrder::GrlexWeighted;

  // strict a < b
  bool less(const Monomial& a, const Monomial& b) const {
    int64_t da = weights.degree(a), db = weights.degree(b);
    if (da != db) return da < db;
    switch (order) {
      case TermOrder::GrlexWeighted:
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
      case TermOrder::GrevlexWeighted:
        for (size_t i = a.size(); i-- > 0;) {
          if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }
    return false;
  }
};

inline std::string mono_to_string(const Monomial& m) {
  static const char* names = "xyz";
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    if (m.size() <= 3)
      s += names[i];
    else
      s += "x" + std::to_string(i);
    if (m[i] != 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace hp0
