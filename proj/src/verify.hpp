#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "formulas.hpp"
#include "quotient.hpp"

namespace hp0 {

/// Default comparison depth: reaches past the Jacobi polynomial and at least
/// two nonzero coefficients of the t^p-supported tail.
int64_t default_surface_depth(const SurfaceSpec& spec, int64_t p);

struct ComparisonReport {
  std::string id;
  int64_t p = 0;
  int64_t N = 0;
  TruncatedSeries brute;
  TruncatedSeries formula;
  std::optional<int64_t> mismatch;  // none iff the series agree on 0..N
  bool refused = false;
  std::string refusal_reason;

  bool matched() const { return !refused && !mismatch; }
};

/// Surface brute force vs the main closed form; refusals (e.g. p | d) are
/// recorded in the report rather than thrown.
ComparisonReport compare_surface(const SurfaceSpec& spec, int64_t p,
                                 std::optional<int64_t> depth = std::nullopt);

struct SweepRow {
  int64_t p = 0;
  int64_t N = 0;
  enum class Status { Match, Mismatch, Refused } status = Status::Match;
  std::optional<int64_t> mismatch;
  std::string reason;
};

struct SweepThresholds {
  int64_t surface_threshold = 0;                // 2d - a - b - c
  std::optional<int64_t> kleinian_h;    // Coxeter number, when the spec is a preset
  std::optional<int64_t> top_degree_threshold;     // D/2 + 1, when D is known
};

struct SweepReport {
  std::string id;
  SweepThresholds thresholds;
  std::vector<SweepRow> rows;

  bool all_matched_above(int64_t threshold) const;
};

/// Per-prime comparisons with threshold annotations. Refusals are
/// first-class rows. max_degree_D, when supplied, annotates the
/// half-degree-plus-one threshold.
SweepReport sweep_surface(const SurfaceSpec& spec, const std::vector<int64_t>& primes,
                          std::optional<int64_t> depth = std::nullopt,
                          std::optional<int64_t> kleinian_h = std::nullopt,
                          std::optional<int64_t> max_degree_D = std::nullopt);

struct CrossOracleReport {
  int64_t n = 0, p = 0, N = 0;
  TruncatedSeries explicit_decomposition;  // type A counting oracle
  TruncatedSeries brute;
  TruncatedSeries formula;
  std::optional<int64_t> mismatch;
  bool matched() const { return !mismatch; }
};

/// Three-way check for type A: explicit decomposition = surface brute force
/// = closed form. Requires p > n.
CrossOracleReport cross_oracles(int64_t n, int64_t p,
                                std::optional<int64_t> depth = std::nullopt);

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the full acceptance suite; one line per criterion is written to log
/// when given. Returns one result per criterion.
std::vector<CriterionResult> run_acceptance(std::ostream* log = nullptr);

}  // namespace hp0
