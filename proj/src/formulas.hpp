#pragma once

#include <string>
#include <vector>

#include "series.hpp"
#include "surface.hpp"

namespace hp0 {

/// An ADE singularity preset: primary invariant degrees (a, b), Coxeter
/// number h, exponents m_1..m_r, and the surface presentation Q = 0 with
/// weights summing to h + 2 and d = 2h.
struct ADEPreset {
  std::string label;
  int64_t a = 0, b = 0, h = 0;
  std::vector<int64_t> exponents;
  SurfaceSpec surface;
};

/// Parses labels of the form A1, A2, ..., D4, D5, ..., E6, E7, E8.
ADEPreset ade_preset(const std::string& label);
bool is_ade_label(const std::string& label);

struct PlaneCurveSpec {
  int64_t d = 3;
  int64_t chi = 0;  // (3 - d) d
};
PlaneCurveSpec plane_curve(int64_t d);
SurfaceSpec fermat_surface(int64_t d);  // x^d + y^d + z^d, unit weights

struct StratumPair {
  std::vector<int64_t> psi;  // polynomial coefficients in t
  CycloRational eta;         // evaluated at t^p
};
struct Stratum {
  int64_t dim_vk = 0;
  std::vector<StratumPair> pairs;
};
struct StratumData {
  std::vector<Stratum> strata;
  std::string name;
};

/// Stratum data of a Kleinian quotient: the fixed point (psi the sum of
/// t^{2(m_i-1)}, eta = 1) and the free locus (psi = 1, eta the invariant-ring
/// Hilbert series (1+z^h)/((1-z^a)(1-z^b))).
StratumData kleinian_strata(const ADEPreset& preset);

/// Main closed form: Jacobi polynomial plus t^{d-a-b-c} f(t^p). When
/// gcd(a,b,c) = g > 1 everything is rescaled by g first and t -> t^g after.
TruncatedSeries surface_formula_series(const WeightSystem& w, int64_t d, int64_t p, int64_t N);

/// sum_i t^{2(m_i-1)} + t^{2p-2} (1+t^{ph}) / ((1-t^{pa})(1-t^{pb})).
TruncatedSeries kleinian_series(const ADEPreset& preset, int64_t p, int64_t N);

/// (1-t^{d-1})^3/(1-t)^3 + t^{d-3} f(t^p) with
/// f(z) = (1-z^d)/(1-z)^3 - chi z/(1-z) - 1. Refuses p | d.
TruncatedSeries plane_curve_series(const PlaneCurveSpec& spec, int64_t p, int64_t N);

/// sum_K sum_pi t^{(p-1) dim V^K} psi_pi(t) eta_pi(t^p).
TruncatedSeries quotient_series(const StratumData& data, int64_t p, int64_t N);

/// Coefficient of s^n in prod_{j,k >= 0} (1 - s^{j+1} t^{2d(p-1)+kp})^{-binom(2d+k-1,k)}.
TruncatedSeries sympower_series(int64_t half_dim, int64_t n, int64_t p, int64_t N);

/// Coefficient of s^n in
/// prod_j [ prod_i (1 - s^{j+1} t^{2(m_i-1+jh)})^{-1}
///          prod_k (1 - s^{j+1} t^{2(p-1)+kp})^{-d_k} ]
/// with d_k the coefficients of (1+z^h)/((1-z^a)(1-z^b)), k >= 0, d_0 = 1.
TruncatedSeries sym_kleinian_series(const ADEPreset& preset, int64_t n, int64_t p, int64_t N);

}  // namespace hp0
