#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "series.hpp"

namespace hp0 {

/// Finite subgroup of Sp(V) given by generator matrices whose entries are
/// integer combinations of powers of a primitive root of unity zeta_m.
/// Coordinates come in symplectic pairs (x_{2i}, x_{2i+1}) with
/// {x_{2i}, x_{2i+1}} = 1.
struct GroupActionSpec {
  int dim = 0;             // 2n
  int64_t zeta_order = 1;  // m
  // generators[g][row][col] = coefficients of zeta^0..zeta^{m-1}
  std::vector<std::vector<std::vector<std::vector<int64_t>>>> generators;
  int64_t order_cap = 1024;
  int dim_cap = 6;
  std::string name;
};

void validate_group_spec(const GroupActionSpec& spec);

template <class F>
struct ClosedGroup {
  int dim = 0;
  typename F::Elem zeta;
  // flattened dim x dim matrices, row-major; element 0 is the identity
  std::vector<std::vector<typename F::Elem>> elements;
  size_t order() const { return elements.size(); }
};

/// Full element list over F_p via closure under multiplication. zeta_m is
/// embedded as the smallest primitive m-th root of unity in F_p (tests can
/// force another root). Refuses when no root exists or p divides |G|.
ClosedGroup<PrimeField> close_group(const GroupActionSpec& spec, int64_t p,
                                    std::optional<int64_t> forced_root = std::nullopt);

/// Characteristic-zero closure; only zeta_order <= 2 embeds rationally.
ClosedGroup<RationalField> close_group_char0(const GroupActionSpec& spec);

template <class F>
struct InvariantBasisDegree {
  int64_t degree = 0;
  std::vector<Poly<F>> basis;     // reduced echelon, unit leading coefficients
  std::vector<Monomial> pivots;   // leading monomials, one per basis element
};

std::vector<Monomial> monomials_of_total_degree(int nvars, int64_t m);

/// Reynolds operator: average of f over the group.
template <class F>
Poly<F> reynolds(const F& K, const ClosedGroup<F>& G, const Poly<F>& f);

/// Echelon basis of the degree-m invariants, from averaged monomials.
template <class F>
InvariantBasisDegree<F> invariant_basis(const F& K, const ClosedGroup<F>& G, int64_t m);

/// Canonical Poisson bracket on F[V]: sum_i (f_{u_i} g_{v_i} - f_{v_i} g_{u_i}).
template <class F>
Poly<F> canonical_bracket(const F& K, const Poly<F>& f, const Poly<F>& g, int nvars);

/// Graded dimensions of A/{A,A} for A = F_p[V]^G, degrees 0..N.
TruncatedSeries hp0_dims_quotient(const GroupActionSpec& spec, int64_t p, int64_t N,
                                  std::optional<int64_t> forced_root = std::nullopt);

/// Graded dimensions of B/{A,B} with B = F_p[V], degrees 0..N.
TruncatedSeries hp0_B_mod_AB(const GroupActionSpec& spec, int64_t p, int64_t N);

/// Characteristic-zero analogues at small degree (exact rationals).
TruncatedSeries hp0_dims_quotient_char0(const GroupActionSpec& spec, int64_t N);
TruncatedSeries hp0_B_mod_AB_char0(const GroupActionSpec& spec, int64_t N);

/// Type A_{n-1} explicit answer: graded dimensions (deg u = deg v = 1) of
///   (+)_{m=0}^{n-2} F (uv)^m  (+)  (uv)^{p-1} F[u^{pn}, v^{pn}, (uv)^p],
/// counting monomials with u^{pn} v^{pn} identified with (uv)^{pn}.
TruncatedSeries typeA_oracle(int64_t n, int64_t p, int64_t N);

// Built-in group specs used by tests and the CLI.
GroupActionSpec cyclic_sl2_group(int64_t n);   // diag(zeta, zeta^{-1}) on dim 2
GroupActionSpec trivial_group_dim2();
GroupActionSpec s2_swap_group_dim4();          // swaps the two symplectic pairs

}  // namespace hp0
