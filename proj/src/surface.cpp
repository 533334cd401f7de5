#include "surface.hpp"

#include <map>

#include "rowspace.hpp"

namespace hp0 {

namespace {

Poly<PrimeField> q_mod_p(const SurfaceSpec& spec, const PrimeField& K) {
  return poly_from_terms(K, 3, spec.q_terms);
}

Poly<RationalField> q_char0(const SurfaceSpec& spec, const RationalField& K) {
  return poly_from_terms(K, 3, spec.q_terms);
}

void check_brute_preconditions(const SurfaceSpec& spec, int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (spec.d % p == 0)
    throw RefusalError("p = " + std::to_string(p) + " divides d = " +
                       std::to_string(spec.d));
  if (p <= spec.weights.max_weight())
    throw RefusalError("p = " + std::to_string(p) +
                       " does not exceed the largest weight " +
                       std::to_string(spec.weights.max_weight()));
}

template <class F>
std::vector<typename F::Elem> coords_of(const F& K, const Poly<F>& f,
                                        const std::map<Monomial, size_t>& index,
                                        size_t dim) {
  std::vector<typename F::Elem> v(dim, K.zero());
  for (const auto& [m, c] : f.terms) {
    auto it = index.find(m);
    if (it == index.end()) throw std::logic_error("polynomial leaves the expected span");
    v[it->second] = c;
  }
  return v;
}

// Dimensions per degree of F[x,y,z]/(Q_x,Q_y,Q_z) over an arbitrary field.
template <class F>
std::vector<int64_t> jacobi_ring_dims(const F& K, const SurfaceSpec& spec,
                                      const Poly<F>& Q, int64_t N) {
  Poly<F> dq[3];
  for (size_t i = 0; i < 3; ++i) dq[i] = partial_derivative(K, Q, i);
  std::vector<int64_t> dims;
  dims.reserve(size_t(N + 1));
  for (int64_t m = 0; m <= N; ++m) {
    auto monos = monomials_of_degree(spec.weights, m);
    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
    RowSpace<F> rows(K, monos.size());
    for (size_t i = 0; i < 3; ++i) {
      if (dq[i].is_zero()) continue;
      int64_t dcomp = m - (spec.d - spec.weights[i]);
      if (dcomp < 0) continue;
      for (const auto& mu : monomials_of_degree(spec.weights, dcomp))
        rows.rank_append(coords_of(K, mono_times(K, mu, K.one(), dq[i]), index, monos.size()));
    }
    dims.push_back(int64_t(monos.size()) - int64_t(rows.rank()));
  }
  return dims;
}

}  // namespace

SurfaceSpec make_surface(const WeightSystem& weights,
                         std::vector<std::pair<Monomial, int64_t>> q_terms,
                         std::string name) {
  if (weights.size() != 3)
    throw std::invalid_argument("surface specs use exactly three variables");
  SurfaceSpec spec;
  spec.weights = weights;
  spec.name = std::move(name);
  bool seen = false;
  for (auto& [m, c] : q_terms) {
    if (m.size() != 3) throw std::invalid_argument("Q terms must have three exponents");
    for (int32_t e : m)
      if (e < 0) throw std::invalid_argument("Q exponents must be nonnegative");
    if (c == 0) continue;
    int64_t deg = weights.degree(m);
    if (!seen) {
      spec.d = deg;
      seen = true;
    } else if (deg != spec.d) {
      throw std::invalid_argument("Q is not quasihomogeneous under the given weights");
    }
  }
  if (!seen) throw std::invalid_argument("Q must be nonzero");
  spec.q_terms = std::move(q_terms);
  return spec;
}

void certify_isolated(const SurfaceSpec& spec) {
  const auto& w = spec.weights;
  int64_t top = 3 * spec.d - 2 * (w[0] + w[1] + w[2]);
  int64_t T = std::max<int64_t>(top, 0) + w.max_weight();
  std::vector<int64_t> dims = jacobi_dims_char0(spec, T);
  LaurentSlice expected = expand(jacobi_rational(w, spec.d), 0, T);
  for (int64_t m = 0; m <= T; ++m) {
    if (dims[size_t(m)] != expected.at(m))
      throw std::invalid_argument(
          "isolated-singularity certificate failed at degree " + std::to_string(m) +
          ": Jacobi ring dimension " + std::to_string(dims[size_t(m)]) +
          " != " + std::to_string(expected.at(m)));
  }
}

std::vector<Monomial> monomials_of_degree(const WeightSystem& w, int64_t m) {
  std::vector<Monomial> out;
  if (m < 0) return out;
  for (int64_t i = 0; i * w[0] <= m; ++i)
    for (int64_t j = 0; i * w[0] + j * w[1] <= m; ++j) {
      int64_t rem = m - i * w[0] - j * w[1];
      if (rem % w[2] == 0)
        out.push_back(Monomial{int32_t(i), int32_t(j), int32_t(rem / w[2])});
    }
  return out;
}

std::vector<Monomial> basis_of_degree(const SurfaceSpec& spec, int64_t p, int64_t m,
                                      TermOrder order) {
  PrimeField K(p);
  Poly<PrimeField> Q = q_mod_p(spec, K);
  if (Q.is_zero()) throw RefusalError("Q vanishes identically mod p");
  OrderContext ord{spec.weights, order};
  Monomial lm = *leading_monomial(Q, ord);
  std::vector<Monomial> out;
  for (auto& mono : monomials_of_degree(spec.weights, m))
    if (!divides(lm, mono)) out.push_back(std::move(mono));
  return out;
}

std::vector<DegreeReport> hp0_dims(const SurfaceSpec& spec, int64_t p, int64_t N,
                                   TermOrder order, BracketSpanMethod method) {
  check_brute_preconditions(spec, p);
  PrimeField K(p);
  Poly<PrimeField> Q = q_mod_p(spec, K);
  if (Q.is_zero()) throw RefusalError("Q vanishes identically mod p");
  OrderContext ord{spec.weights, order};
  Poly<PrimeField> dq[3];
  for (size_t i = 0; i < 3; ++i) dq[i] = partial_derivative(K, Q, i);
  const auto& w = spec.weights;
  const int64_t bracket_shift = w[0] + w[1] + w[2] - spec.d;  // deg{u,v} - deg u - deg v = -shift

  std::vector<DegreeReport> reports;
  reports.reserve(size_t(N + 1));
  for (int64_t m = 0; m <= N; ++m) {
    auto basis = basis_of_degree(spec, p, m, order);
    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    auto nf_coords = [&](const Poly<PrimeField>& f) {
      return coords_of(K, normal_form(K, f, Q, ord), index, basis.size());
    };

    RowSpace<PrimeField> jac(K, basis.size());
    for (size_t i = 0; i < 3; ++i) {
      if (dq[i].is_zero()) continue;
      int64_t dcomp = m - (spec.d - w[i]);
      if (dcomp < 0) continue;
      for (const auto& mu : basis_of_degree(spec, p, dcomp, order))
        jac.rank_append(nf_coords(mono_times(K, mu, K.one(), dq[i])));
    }

    RowSpace<PrimeField> bracket(K, basis.size());
    RowSpace<PrimeField> joint = jac;  // containment witness
    auto take = [&](const Poly<PrimeField>& f) {
      auto v = nf_coords(f);
      if (!joint.rank_append(v))
        throw std::logic_error("bracket span escaped the Jacobi ideal");
      bracket.rank_append(std::move(v));
    };

    int64_t s = m + bracket_shift;  // total degree of the bracketed pair
    if (s >= 2) {
      if (method == BracketSpanMethod::Aggregated) {
        // {x^a, x^b} = sum_k (a x b)_k x^(a+b-ehat_k) Q_k with ehat_k the
        // complementary exponent pair; for fixed gamma = a+b the coefficient
        // vectors a x b span { e_i x gamma : gamma_i >= 1 }.
        static const int32_t ehat[3][3] = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
        for (const auto& gamma : monomials_of_degree(w, s)) {
          int64_t gp[3];
          for (size_t i = 0; i < 3; ++i) gp[i] = K.from_int(gamma[i]);
          RowSpace<PrimeField> span(K, 3);
          for (size_t i = 0; i < 3; ++i) {
            if (gamma[i] < 1) continue;
            std::vector<int64_t> v(3, 0);
            size_t j = (i + 1) % 3, k = (i + 2) % 3;
            v[j] = K.neg(gp[k]);
            v[k] = gp[j];
            span.rank_append(v);
          }
          for (const auto& c : span.rows) {
            Poly<PrimeField> f;
            for (size_t k = 0; k < 3; ++k) {
              if (K.is_zero(c[k]) || dq[k].is_zero()) continue;
              Monomial base(3);
              bool valid = true;
              for (size_t t = 0; t < 3; ++t) {
                base[t] = gamma[t] - ehat[k][t];
                if (base[t] < 0) valid = false;
              }
              if (!valid) throw std::logic_error("aggregated bracket hit a negative exponent");
              f = poly_add(K, f, mono_times(K, base, c[k], dq[k]));
            }
            if (!f.is_zero()) take(f);
          }
        }
      } else {
        for (int64_t d1 = 1; 2 * d1 <= s; ++d1) {
          int64_t d2 = s - d1;
          auto b1 = basis_of_degree(spec, p, d1, order);
          auto b2 = basis_of_degree(spec, p, d2, order);
          for (size_t i = 0; i < b1.size(); ++i) {
            size_t jstart = (d1 == d2) ? i + 1 : 0;
            for (size_t j = jstart; j < b2.size(); ++j) {
              Poly<PrimeField> f, g;
              f.terms.emplace(b1[i], K.one());
              g.terms.emplace(b2[j], K.one());
              Poly<PrimeField> br = surface_bracket(K, f, g, Q);
              if (!br.is_zero()) take(br);
            }
          }
        }
      }
    }

    DegreeReport rep;
    rep.degree = m;
    rep.dim_A = int64_t(basis.size());
    rep.dim_bracket_span = int64_t(bracket.rank());
    rep.dim_jacobi_ideal = int64_t(jac.rank());
    rep.hp0_dim = rep.dim_A - rep.dim_bracket_span;
    reports.push_back(rep);
  }
  return reports;
}

TruncatedSeries hp0_series(const SurfaceSpec& spec, int64_t p, int64_t N,
                           TermOrder order, BracketSpanMethod method) {
  auto reports = hp0_dims(spec, p, N, order, method);
  TruncatedSeries out(N);
  for (const auto& r : reports) out.c[size_t(r.degree)] = r.hp0_dim;
  return out;
}

std::vector<int64_t> jacobi_dims_char0(const SurfaceSpec& spec, int64_t N) {
  RationalField K;
  return jacobi_ring_dims(K, spec, q_char0(spec, K), N);
}

std::vector<int64_t> jacobi_dims_modp(const SurfaceSpec& spec, int64_t p, int64_t N) {
  PrimeField K(p);
  return jacobi_ring_dims(K, spec, q_mod_p(spec, K), N);
}

std::vector<int64_t> bracket_ideal_exceptions(const SurfaceSpec& spec, int64_t p, int64_t N) {
  if (spec.d % p == 0) throw RefusalError("p divides d");
  auto reports = hp0_dims(spec, p, N);
  std::vector<int64_t> out;
  for (const auto& r : reports)
    if (r.dim_bracket_span != r.dim_jacobi_ideal) out.push_back(r.degree);
  return out;
}

}  // namespace hp0
