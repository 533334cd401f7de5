#pragma once

#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace hp0 {

/// Sparse multivariate polynomial over a field F. No zero coefficients are
/// stored; the container order is plain lexicographic and carries no
/// algebraic meaning (term orders are passed where they matter).
template <class F>
struct Poly {
  using Elem = typename F::Elem;
  std::map<Monomial, Elem> terms;

  bool is_zero() const { return terms.empty(); }
  size_t nvars() const { return terms.empty() ? 0 : terms.begin()->first.size(); }
};

template <class F>
void add_term(const F& K, Poly<F>& f, const Monomial& m, const typename F::Elem& c) {
  if (K.is_zero(c)) return;
  auto it = f.terms.find(m);
  if (it == f.terms.end()) {
    f.terms.emplace(m, c);
  } else {
    it->second = K.add(it->second, c);
    if (K.is_zero(it->second)) f.terms.erase(it);
  }
}

template <class F>
Poly<F> poly_from_terms(const F& K, size_t nvars,
                        const std::vector<std::pair<Monomial, int64_t>>& terms) {
  Poly<F> f;
  for (const auto& [m, c] : terms) {
    if (m.size() != nvars) throw std::invalid_argument("term arity mismatch");
    add_term(K, f, m, K.from_int(c));
  }
  return f;
}

template <class F>
Poly<F> poly_add(const F& K, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r = a;
  for (const auto& [m, c] : b.terms) add_term(K, r, m, c);
  return r;
}

template <class F>
Poly<F> poly_scale(const F& K, const Poly<F>& a, const typename F::Elem& s) {
  Poly<F> r;
  if (K.is_zero(s)) return r;
  for (const auto& [m, c] : a.terms) r.terms.emplace(m, K.mul(c, s));
  return r;
}

template <class F>
Poly<F> poly_mul(const F& K, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms)
      add_term(K, r, mono_mul(ma, mb), K.mul(ca, cb));
  return r;
}

template <class F>
Poly<F> mono_times(const F& K, const Monomial& m, const typename F::Elem& c,
                   const Poly<F>& f) {
  Poly<F> r;
  if (K.is_zero(c)) return r;
  for (const auto& [mf, cf] : f.terms) r.terms.emplace(mono_mul(m, mf), K.mul(c, cf));
  return r;
}

/// Formal partial derivative. In characteristic p, exponents divisible by p
/// annihilate (Frobenius kernel).
template <class F>
Poly<F> partial_derivative(const F& K, const Poly<F>& f, size_t var) {
  Poly<F> r;
  for (const auto& [m, c] : f.terms) {
    if (var >= m.size()) throw std::out_of_range("variable index out of range");
    if (m[var] == 0) continue;
    auto coef = K.mul(c, K.from_int(m[var]));
    if (K.is_zero(coef)) continue;
    Monomial mm = m;
    mm[var] -= 1;
    add_term(K, r, mm, coef);
  }
  return r;
}

/// Jacobian determinant of (f, g, Q) with respect to the three variables.
/// Restricted to A = F[x,y,z]/(Q) this is the surface Poisson bracket:
/// {x,y} = Q_z, {y,z} = Q_x, {z,x} = Q_y.
template <class F>
Poly<F> surface_bracket(const F& K, const Poly<F>& f, const Poly<F>& g,
                        const Poly<F>& Q) {
  auto arity_ok = [](const Poly<F>& h) { return h.is_zero() || h.nvars() == 3; };
  if (!arity_ok(f) || !arity_ok(g) || !arity_ok(Q))
    throw std::invalid_argument("surface bracket needs three variables");
  Poly<F> r;
  Poly<F> df[3], dg[3], dq[3];
  for (size_t i = 0; i < 3; ++i) {
    df[i] = partial_derivative(K, f, i);
    dg[i] = partial_derivative(K, g, i);
    dq[i] = partial_derivative(K, Q, i);
  }
  // det rows (grad f, grad g, grad Q), expanded along the last row
  static const int idx[3][2] = {{1, 2}, {2, 0}, {0, 1}};
  for (size_t k = 0; k < 3; ++k) {
    size_t i = idx[k][0], j = idx[k][1];
    Poly<F> minor = poly_add(K, poly_mul(K, df[i], dg[j]),
                             poly_scale(K, poly_mul(K, df[j], dg[i]), K.from_int(-1)));
    r = poly_add(K, r, poly_mul(K, minor, dq[k]));
  }
  return r;
}

template <class F>
std::optional<Monomial> leading_monomial(const Poly<F>& f, const OrderContext& ord) {
  std::optional<Monomial> lead;
  for (const auto& [m, c] : f.terms)
    if (!lead || ord.less(*lead, m)) lead = m;
  return lead;
}

/// Normal form of f modulo the principal ideal (Q): repeatedly rewrites the
/// order-largest term divisible by the leading monomial of Q. A single
/// generator is its own Groebner basis, so the result is the canonical
/// representative; the map is linear per degree and idempotent.
template <class F>
Poly<F> normal_form(const F& K, const Poly<F>& f, const Poly<F>& Q,
                    const OrderContext& ord) {
  if (Q.is_zero()) throw std::invalid_argument("normal form modulo zero polynomial");
  Monomial lm = *leading_monomial(Q, ord);
  auto lc = Q.terms.at(lm);
  Poly<F> tail;  // lm*lc - Q, so that lm == tail/lc mod (Q)
  for (const auto& [m, c] : Q.terms)
    if (m != lm) add_term(K, tail, m, K.neg(c));
  auto lc_inv = K.inv(lc);

  auto cmp = [&ord](const Monomial& a, const Monomial& b) { return ord.less(a, b); };
  std::priority_queue<Monomial, std::vector<Monomial>, decltype(cmp)> pending(cmp);
  Poly<F> work = f;
  for (const auto& [m, c] : work.terms)
    if (divides(lm, m)) pending.push(m);

  while (!pending.empty()) {
    Monomial m = pending.top();
    pending.pop();
    auto it = work.terms.find(m);
    if (it == work.terms.end()) continue;  // already cancelled
    auto coef = it->second;
    work.terms.erase(it);
    Monomial cof = mono_div(m, lm);
    auto scale = K.mul(coef, lc_inv);
    for (const auto& [tm, tc] : tail.terms) {
      Monomial nm = mono_mul(cof, tm);
      bool had = work.terms.count(nm) > 0;
      add_term(K, work, nm, K.mul(scale, tc));
      if (!had && work.terms.count(nm) && divides(lm, nm)) pending.push(nm);
    }
  }
  return work;
}

/// g . f where g is a linear substitution given column-wise: variable i is
/// replaced by the linear form with coefficients cols[i].
template <class F>
Poly<F> apply_linear(const F& K, const Poly<F>& f,
                     const std::vector<std::vector<typename F::Elem>>& cols) {
  size_t n = cols.size();
  Poly<F> result;
  for (const auto& [m, c] : f.terms) {
    Poly<F> acc;
    acc.terms.emplace(Monomial(n, 0), c);
    for (size_t i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      Poly<F> lin;
      for (size_t j = 0; j < n; ++j) {
        if (K.is_zero(cols[i][j])) continue;
        Monomial mj(n, 0);
        mj[j] = 1;
        lin.terms.emplace(mj, cols[i][j]);
      }
      for (int32_t e = 0; e < m[i]; ++e) acc = poly_mul(K, acc, lin);
    }
    result = poly_add(K, result, acc);
  }
  return result;
}

}  // namespace hp0
