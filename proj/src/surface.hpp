#pragma once

#include <string>
#include <vector>

#include "polynomial.hpp"
#include "series.hpp"

namespace hp0 {

/// Quasihomogeneous surface Q = 0 in A^3 with an isolated singularity at the
/// origin. Q is kept with exact integer coefficients and reduced into the
/// working field on demand.
struct SurfaceSpec {
  WeightSystem weights;  // (a, b, c)
  std::vector<std::pair<Monomial, int64_t>> q_terms;
  int64_t d = 0;  // weighted degree of Q, derived
  std::string name;
};

/// Builds a spec, deriving d and checking structure (three variables,
/// Q != 0, quasihomogeneity). Does not run the isolated-singularity
/// certificate; call certify_isolated for that.
SurfaceSpec make_surface(const WeightSystem& weights,
                         std::vector<std::pair<Monomial, int64_t>> q_terms,
                         std::string name = {});

/// Characteristic-zero certificate: the Jacobi-ring dimensions must match
/// the closed-form polynomial exactly and vanish beyond its top degree.
/// Throws std::invalid_argument on failure.
void certify_isolated(const SurfaceSpec& spec);

struct DegreeReport {
  int64_t degree = 0;
  int64_t dim_A = 0;
  int64_t dim_bracket_span = 0;
  int64_t dim_jacobi_ideal = 0;
  int64_t hp0_dim = 0;
};

enum class BracketSpanMethod {
  Aggregated,     // spans grouped by total exponent vector; same span, fast
  MonomialPairs,  // literal brackets of basis-monomial pairs
};

std::vector<Monomial> monomials_of_degree(const WeightSystem& w, int64_t m);

/// Monomial basis of A[m]: monomials of weighted degree m not divisible by
/// the leading monomial of Q (reduced mod p) under the given order.
std::vector<Monomial> basis_of_degree(const SurfaceSpec& spec, int64_t p, int64_t m,
                                      TermOrder order = TermOrder::GrlexWeighted);

/// Degree-by-degree dimensions of A, {A,A}, the Jacobi ideal in A, and
/// HP_0 over F_p for all degrees <= N. Refuses p | d and p <= max weight.
std::vector<DegreeReport> hp0_dims(const SurfaceSpec& spec, int64_t p, int64_t N,
                                   TermOrder order = TermOrder::GrlexWeighted,
                                   BracketSpanMethod method = BracketSpanMethod::Aggregated);

TruncatedSeries hp0_series(const SurfaceSpec& spec, int64_t p, int64_t N,
                           TermOrder order = TermOrder::GrlexWeighted,
                           BracketSpanMethod method = BracketSpanMethod::Aggregated);

/// Dimensions of F[x,y,z]/(Q_x,Q_y,Q_z) per degree up to N.
std::vector<int64_t> jacobi_dims_char0(const SurfaceSpec& spec, int64_t N);
std::vector<int64_t> jacobi_dims_modp(const SurfaceSpec& spec, int64_t p, int64_t N);

/// Degrees m <= N where the bracket span differs from the Jacobi ideal over
/// F_p. Callers assert containment in {pk + d-a-b-c : k >= 1}.
std::vector<int64_t> bracket_ideal_exceptions(const SurfaceSpec& spec, int64_t p, int64_t N);

}  // namespace hp0
