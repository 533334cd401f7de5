#include "quotient.hpp"

#include <algorithm>
#include <map>

#include "rowspace.hpp"

namespace hp0 {

namespace {

template <class F>
using Mat = std::vector<typename F::Elem>;  // flattened dim x dim, row-major

template <class F>
Mat<F> mat_mul(const F& K, const Mat<F>& a, const Mat<F>& b, int n) {
  Mat<F> r(size_t(n) * n, K.zero());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const auto& aik = a[size_t(i) * n + k];
      if (K.is_zero(aik)) continue;
      for (int j = 0; j < n; ++j)
        r[size_t(i) * n + j] =
            K.add(r[size_t(i) * n + j], K.mul(aik, b[size_t(k) * n + j]));
    }
  return r;
}

template <class F>
bool is_symplectic(const F& K, const Mat<F>& m, int n) {
  // M^T J M = J with J the block form on pairs (x_{2i}, x_{2i+1})
  auto J = [&](int i, int j) -> typename F::Elem {
    if (i / 2 == j / 2) {
      if (i + 1 == j) return K.one();
      if (j + 1 == i) return K.neg(K.one());
    }
    return K.zero();
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      typename F::Elem s = K.zero();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          auto t = K.mul(m[size_t(i) * n + a], m[size_t(j) * n + b]);
          t = K.mul(t, J(i, j));
          s = K.add(s, t);
        }
      if (!(s == J(a, b))) return false;
    }
  return true;
}

template <class F>
ClosedGroup<F> close_group_impl(const F& K, const GroupActionSpec& spec,
                                typename F::Elem zeta) {
  const int n = spec.dim;
  ClosedGroup<F> G;
  G.dim = n;
  G.zeta = zeta;

  std::vector<typename F::Elem> zpow(size_t(spec.zeta_order));
  zpow[0] = K.one();
  for (int64_t i = 1; i < spec.zeta_order; ++i) zpow[size_t(i)] = K.mul(zpow[size_t(i - 1)], zeta);

  std::vector<Mat<F>> gens;
  for (const auto& gm : spec.generators) {
    Mat<F> m(size_t(n) * n, K.zero());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        typename F::Elem e = K.zero();
        const auto& zc = gm[size_t(i)][size_t(j)];
        for (size_t t = 0; t < zc.size(); ++t)
          e = K.add(e, K.mul(K.from_int(zc[t]), zpow[t % size_t(spec.zeta_order)]));
        m[size_t(i) * n + j] = e;
      }
    if (!is_symplectic(K, m, n))
      throw std::invalid_argument("generator does not preserve the symplectic form");
    gens.push_back(std::move(m));
  }

  Mat<F> id(size_t(n) * n, K.zero());
  for (int i = 0; i < n; ++i) id[size_t(i) * n + i] = K.one();
  std::map<Mat<F>, size_t> seen;
  G.elements.push_back(id);
  seen.emplace(id, 0);
  for (size_t head = 0; head < G.elements.size(); ++head) {
    for (const auto& g : gens) {
      Mat<F> prod = mat_mul(K, G.elements[head], g, n);
      if (seen.count(prod)) continue;
      if (int64_t(G.elements.size()) >= spec.order_cap)
        throw std::invalid_argument("group order cap exceeded; group may be infinite");
      seen.emplace(prod, G.elements.size());
      G.elements.push_back(std::move(prod));
    }
  }
  return G;
}

// Action of a matrix on a polynomial: x_i -> sum_j M[i][j] x_j. Monomial
// matrices keep monomials monomial, which is the common case here.
template <class F>
struct GroupAction {
  const F& K;
  const ClosedGroup<F>& G;
  bool all_monomial = true;
  // per element: target variable and scalar for each source variable
  std::vector<std::vector<std::pair<int, typename F::Elem>>> routes;

  GroupAction(const F& K_, const ClosedGroup<F>& G_) : K(K_), G(G_) {
    const int n = G.dim;
    for (const auto& m : G.elements) {
      std::vector<std::pair<int, typename F::Elem>> route(size_t(n), {-1, K.zero()});
      bool mono = true;
      for (int i = 0; i < n && mono; ++i) {
        int nz = -1;
        for (int j = 0; j < n; ++j) {
          if (K.is_zero(m[size_t(i) * n + j])) continue;
          if (nz >= 0) {
            mono = false;
            break;
          }
          nz = j;
        }
        if (nz < 0) mono = false;
        if (mono) route[size_t(i)] = {nz, m[size_t(i) * n + nz]};
      }
      if (!mono) all_monomial = false;
      routes.push_back(std::move(route));
    }
  }

  // g . x^mu for a monomial-matrix element; returns (monomial, scalar)
  std::pair<Monomial, typename F::Elem> act_monomial(size_t gi, const Monomial& mu) const {
    const auto& route = routes[gi];
    Monomial out(mu.size(), 0);
    typename F::Elem s = K.one();
    for (size_t i = 0; i < mu.size(); ++i) {
      if (mu[i] == 0) continue;
      out[size_t(route[i].first)] += mu[i];
      typename F::Elem pw = K.one();
      for (int32_t e = 0; e < mu[i]; ++e) pw = K.mul(pw, route[i].second);
      s = K.mul(s, pw);
    }
    return {out, s};
  }

  Poly<F> act_poly(size_t gi, const Poly<F>& f) const {
    const int n = G.dim;
    const auto& m = G.elements[gi];
    std::vector<std::vector<typename F::Elem>> cols(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      cols[size_t(i)].resize(static_cast<size_t>(n));
      for (int j = 0; j < n; ++j) cols[size_t(i)][size_t(j)] = m[size_t(i) * n + j];
    }
    return apply_linear(K, f, cols);
  }
};

void enumerate_monomials(int nvars, int64_t m, Monomial& cur, int pos,
                         std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur[size_t(pos)] = int32_t(m);
    out.push_back(cur);
    return;
  }
  for (int64_t e = 0; e <= m; ++e) {
    cur[size_t(pos)] = int32_t(e);
    enumerate_monomials(nvars, m - e, cur, pos + 1, out);
  }
}

template <class F>
InvariantBasisDegree<F> invariant_basis_impl(const F& K, const ClosedGroup<F>& G,
                                             const GroupAction<F>& action, int64_t m) {
  InvariantBasisDegree<F> out;
  out.degree = m;
  auto monos = monomials_of_total_degree(G.dim, m);
  typename F::Elem inv_order = K.inv(K.from_int(int64_t(G.order())));

  if (action.all_monomial) {
    // Orbit averages have pairwise disjoint supports, so they are already a
    // reduced echelon basis once normalized.
    std::map<Monomial, bool> seen;
    for (const auto& mu : monos) {
      if (seen.count(mu)) continue;
      Poly<F> avg;
      for (size_t gi = 0; gi < G.order(); ++gi) {
        auto [nu, s] = action.act_monomial(gi, mu);
        seen[nu] = true;
        add_term(K, avg, nu, K.mul(s, inv_order));
      }
      if (avg.is_zero()) continue;
      Monomial pivot = avg.terms.rbegin()->first;  // lex-largest in support
      auto lead = avg.terms.at(pivot);
      out.basis.push_back(poly_scale(K, avg, K.inv(lead)));
      out.pivots.push_back(pivot);
    }
    return out;
  }

  std::map<Monomial, size_t> index;
  for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
  RowSpace<F> rows(K, monos.size());
  for (const auto& mu : monos) {
    Poly<F> f;
    f.terms.emplace(mu, K.one());
    Poly<F> avg = reynolds(K, G, f);
    if (avg.is_zero()) continue;
    std::vector<typename F::Elem> v(monos.size(), K.zero());
    for (const auto& [mono, c] : avg.terms) v[index.at(mono)] = c;
    rows.rank_append(std::move(v));
  }
  for (size_t r = 0; r < rows.rank(); ++r) {
    Poly<F> f;
    for (size_t j = 0; j < monos.size(); ++j)
      if (!K.is_zero(rows.rows[r][j])) f.terms.emplace(monos[j], rows.rows[r][j]);
    out.basis.push_back(std::move(f));
    out.pivots.push_back(monos[rows.pivots[r]]);
  }
  return out;
}

template <class F>
TruncatedSeries hp0_quotient_impl(const F& K, const ClosedGroup<F>& G, int64_t N) {
  GroupAction<F> action(K, G);
  std::vector<InvariantBasisDegree<F>> inv(size_t(N + 2));
  for (int64_t i = 0; i <= N + 1; ++i)
    inv[size_t(i)] = invariant_basis_impl(K, G, action, i);

  TruncatedSeries out(N);
  for (int64_t m = 0; m <= N; ++m) {
    const auto& am = inv[size_t(m)];
    std::map<Monomial, size_t> pivot_index;
    for (size_t i = 0; i < am.pivots.size(); ++i) pivot_index.emplace(am.pivots[i], i);
    KernelTracker<F> kernel(K, am.basis.size());
    int64_t s = m + 2;
    for (int64_t d1 = 1; 2 * d1 <= s; ++d1) {
      int64_t d2 = s - d1;
      if (d2 > N + 1) continue;
      const auto& b1 = inv[size_t(d1)];
      const auto& b2 = inv[size_t(d2)];
      for (size_t i = 0; i < b1.basis.size(); ++i) {
        size_t jstart = (d1 == d2) ? i + 1 : 0;
        for (size_t j = jstart; j < b2.basis.size(); ++j) {
          if (kernel.dim() == 0) break;
          Poly<F> br = canonical_bracket(K, b1.basis[i], b2.basis[j], G.dim);
          if (br.is_zero()) continue;
          std::vector<std::pair<size_t, typename F::Elem>> constraint;
          for (const auto& [mono, c] : br.terms) {
            auto it = pivot_index.find(mono);
            if (it != pivot_index.end()) constraint.emplace_back(it->second, c);
          }
          kernel.constrain(constraint);
        }
      }
    }
    out.c[size_t(m)] = int64_t(kernel.dim());
  }
  return out;
}

template <class F>
TruncatedSeries hp0_b_mod_ab_impl(const F& K, const ClosedGroup<F>& G, int64_t N) {
  GroupAction<F> action(K, G);
  std::vector<InvariantBasisDegree<F>> inv(size_t(N + 2));
  for (int64_t i = 0; i <= N + 1; ++i)
    inv[size_t(i)] = invariant_basis_impl(K, G, action, i);

  TruncatedSeries out(N);
  for (int64_t m = 0; m <= N; ++m) {
    auto monos = monomials_of_total_degree(G.dim, m);
    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
    KernelTracker<F> kernel(K, monos.size());
    int64_t s = m + 2;
    for (int64_t d1 = 1; d1 <= s - 1 && d1 <= N + 1; ++d1) {
      int64_t d2 = s - d1;
      const auto& b1 = inv[size_t(d1)];
      const auto partners = monomials_of_total_degree(G.dim, d2);
      for (size_t i = 0; i < b1.basis.size(); ++i) {
        for (const auto& nu : partners) {
          if (kernel.dim() == 0) break;
          Poly<F> g;
          g.terms.emplace(nu, K.one());
          Poly<F> br = canonical_bracket(K, b1.basis[i], g, G.dim);
          if (br.is_zero()) continue;
          std::vector<std::pair<size_t, typename F::Elem>> constraint;
          for (const auto& [mono, c] : br.terms)
            constraint.emplace_back(index.at(mono), c);
          kernel.constrain(constraint);
        }
      }
    }
    out.c[size_t(m)] = int64_t(kernel.dim());
  }
  return out;
}

}  // namespace

void validate_group_spec(const GroupActionSpec& spec) {
  if (spec.dim < 2 || spec.dim % 2 != 0)
    throw std::invalid_argument("dim must be a positive even integer");
  if (spec.dim > spec.dim_cap) throw std::invalid_argument("dimension cap exceeded");
  if (spec.zeta_order < 1) throw std::invalid_argument("zeta order must be >= 1");
  for (const auto& g : spec.generators) {
    if (int(g.size()) != spec.dim)
      throw std::invalid_argument("generator has wrong number of rows");
    for (const auto& row : g) {
      if (int(row.size()) != spec.dim)
        throw std::invalid_argument("generator has wrong number of columns");
      for (const auto& entry : row)
        if (entry.empty() || int64_t(entry.size()) > spec.zeta_order)
          throw std::invalid_argument("entry must list 1..m coefficients of zeta powers");
    }
  }
}

ClosedGroup<PrimeField> close_group(const GroupActionSpec& spec, int64_t p,
                                    std::optional<int64_t> forced_root) {
  validate_group_spec(spec);
  PrimeField K(p);
  int64_t m = spec.zeta_order;
  if ((p - 1) % m != 0)
    throw RefusalError("F_" + std::to_string(p) + " has no primitive " +
                       std::to_string(m) + "-th root of unity");
  int64_t zeta = -1;
  auto primitive = [&](int64_t r) {
    if (K.pow(r, m) != 1) return false;
    for (int64_t q = 2; q <= m; ++q)
      if (m % q == 0 && is_prime(q) && K.pow(r, m / q) == 1) return false;
    return true;
  };
  if (forced_root) {
    if (!primitive(*forced_root))
      throw std::invalid_argument("forced root is not a primitive m-th root");
    zeta = *forced_root;
  } else {
    for (int64_t r = 1; r < p; ++r)
      if (primitive(r)) {
        zeta = r;
        break;
      }
    if (zeta < 0) throw RefusalError("no primitive root found");
  }
  auto G = close_group_impl(K, spec, zeta);
  if (int64_t(G.order()) % p == 0)
    throw RefusalError("p divides the group order " + std::to_string(G.order()));
  return G;
}

ClosedGroup<RationalField> close_group_char0(const GroupActionSpec& spec) {
  validate_group_spec(spec);
  if (spec.zeta_order > 2)
    throw std::invalid_argument("characteristic-zero mode needs zeta_order <= 2");
  RationalField K;
  auto zeta = spec.zeta_order == 2 ? K.from_int(-1) : K.one();
  return close_group_impl(K, spec, zeta);
}

std::vector<Monomial> monomials_of_total_degree(int nvars, int64_t m) {
  std::vector<Monomial> out;
  if (m < 0) return out;
  Monomial cur(size_t(nvars), 0);
  enumerate_monomials(nvars, m, cur, 0, out);
  return out;
}

template <class F>
Poly<F> reynolds(const F& K, const ClosedGroup<F>& G, const Poly<F>& f) {
  GroupAction<F> action(K, G);
  Poly<F> sum;
  for (size_t gi = 0; gi < G.order(); ++gi) {
    if (action.all_monomial) {
      for (const auto& [mu, c] : f.terms) {
        auto [nu, s] = action.act_monomial(gi, mu);
        add_term(K, sum, nu, K.mul(c, s));
      }
    } else {
      sum = poly_add(K, sum, action.act_poly(gi, f));
    }
  }
  return poly_scale(K, sum, K.inv(K.from_int(int64_t(G.order()))));
}

template Poly<PrimeField> reynolds(const PrimeField&, const ClosedGroup<PrimeField>&,
                                   const Poly<PrimeField>&);
template Poly<RationalField> reynolds(const RationalField&, const ClosedGroup<RationalField>&,
                                      const Poly<RationalField>&);

template <class F>
InvariantBasisDegree<F> invariant_basis(const F& K, const ClosedGroup<F>& G, int64_t m) {
  GroupAction<F> action(K, G);
  return invariant_basis_impl(K, G, action, m);
}

template InvariantBasisDegree<PrimeField> invariant_basis(const PrimeField&,
                                                          const ClosedGroup<PrimeField>&,
                                                          int64_t);
template InvariantBasisDegree<RationalField> invariant_basis(const RationalField&,
                                                             const ClosedGroup<RationalField>&,
                                                             int64_t);

template <class F>
Poly<F> canonical_bracket(const F& K, const Poly<F>& f, const Poly<F>& g, int nvars) {
  Poly<F> r;
  for (int i = 0; i + 1 < nvars; i += 2) {
    auto fu = partial_derivative(K, f, size_t(i));
    auto fv = partial_derivative(K, f, size_t(i + 1));
    auto gu = partial_derivative(K, g, size_t(i));
    auto gv = partial_derivative(K, g, size_t(i + 1));
    r = poly_add(K, r, poly_mul(K, fu, gv));
    r = poly_add(K, r, poly_scale(K, poly_mul(K, fv, gu), K.from_int(-1)));
  }
  return r;
}

template Poly<PrimeField> canonical_bracket(const PrimeField&, const Poly<PrimeField>&,
                                            const Poly<PrimeField>&, int);
template Poly<RationalField> canonical_bracket(const RationalField&,
                                               const Poly<RationalField>&,
                                               const Poly<RationalField>&, int);

TruncatedSeries hp0_dims_quotient(const GroupActionSpec& spec, int64_t p, int64_t N,
                                  std::optional<int64_t> forced_root) {
  auto G = close_group(spec, p, forced_root);
  PrimeField K(p);
  return hp0_quotient_impl(K, G, N);
}

TruncatedSeries hp0_B_mod_AB(const GroupActionSpec& spec, int64_t p, int64_t N) {
  auto G = close_group(spec, p);
  PrimeField K(p);
  return hp0_b_mod_ab_impl(K, G, N);
}

TruncatedSeries hp0_dims_quotient_char0(const GroupActionSpec& spec, int64_t N) {
  auto G = close_group_char0(spec);
  RationalField K;
  return hp0_quotient_impl(K, G, N);
}

TruncatedSeries hp0_B_mod_AB_char0(const GroupActionSpec& spec, int64_t N) {
  auto G = close_group_char0(spec);
  RationalField K;
  return hp0_b_mod_ab_impl(K, G, N);
}

TruncatedSeries typeA_oracle(int64_t n, int64_t p, int64_t N) {
  if (n < 2) throw std::invalid_argument("type A oracle needs n >= 2");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (p <= n) throw RefusalError("type A oracle requires p > n");
  TruncatedSeries out(N);
  for (int64_t m = 0; m <= n - 2; ++m) out.add(2 * m, 1);
  for (int64_t k = 0;; ++k) {
    int64_t base = 2 * (p - 1) + 2 * p * k;
    if (base > N) break;
    out.add(base, 1);  // i = j = 0
    for (int64_t i = 1;; ++i) {
      int64_t deg = base + p * n * i;
      if (deg > N) break;
      out.add(deg, 2);  // u^{pni} and v^{pni} branches
    }
  }
  return out;
}

GroupActionSpec cyclic_sl2_group(int64_t n) {
  GroupActionSpec spec;
  spec.dim = 2;
  spec.zeta_order = n;
  spec.name = "Z" + std::to_string(n);
  std::vector<std::vector<std::vector<int64_t>>> gen(2,
      std::vector<std::vector<int64_t>>(2, std::vector<int64_t>(size_t(n), 0)));
  gen[0][0][size_t(1 % n)] = 1;        // zeta
  gen[1][1][size_t((n - 1) % n)] = 1;  // zeta^{-1}
  spec.generators.push_back(std::move(gen));
  return spec;
}

GroupActionSpec trivial_group_dim2() {
  GroupActionSpec spec;
  spec.dim = 2;
  spec.zeta_order = 1;
  spec.name = "trivial";
  return spec;
}

GroupActionSpec s2_swap_group_dim4() {
  GroupActionSpec spec;
  spec.dim = 4;
  spec.zeta_order = 1;
  spec.name = "S2 swap";
  std::vector<std::vector<std::vector<int64_t>>> gen(4,
      std::vector<std::vector<int64_t>>(4, std::vector<int64_t>{0}));
  gen[0][2][0] = 1;
  gen[1][3][0] = 1;
  gen[2][0][0] = 1;
  gen[3][1][0] = 1;
  spec.generators.push_back(std::move(gen));
  return spec;
}

}  // namespace hp0
