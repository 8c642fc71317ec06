#ifndef SELFPOWER_HEURISTICS_HPP
#define SELFPOWER_HEURISTICS_HPP

#include <functional>
#include <span>
#include <vector>

#include <selfpower/arith.hpp>
#include <selfpower/fixedpoints.hpp>
#include <selfpower/parallel.hpp>

namespace selfpower {

// Model probability that psi_p has no nontrivial fixed point:
//   prod over d | p-1, 2 < d < p-1 of (1 - floor((p-3)/d)/(p-3))^phi(d).
// Empty product (p < 7) is 1.
double no_fixed_point_probability(u64 p);
double no_fixed_point_probability(u64 p, const FactoredInteger& p_minus_1);

// The exponent Delta_p with exp(-Delta_p) == no_fixed_point_probability(p).
double no_fixed_point_exponent(u64 p);

// Expected #A(N): sum of no_fixed_point_probability over primes p <= N.
double expected_no_fixed_point_count(u64 n_max, const ParallelOptions& = {});

// Expected total fixed-point count over primes p <= N under the same model:
//   sum over p <= N, d | p-1, 2 < d < p-1 of phi(d) * floor((p-3)/d)/(p-3).
// (The nontrivial expectation; the trivial point x=1 contributes to the
// observed column, not here, matching the published table.)
double expected_total_fixed_points(u64 n_max, const ParallelOptions& = {});

// Conjectured growth floor for #A(N):
//   N/(log N)^2 * exp((1/ln 2) * log_3 N * log_4 N),
// with log x = max(ln x, 2) so every iterated log is defined.
double exceptional_count_lower_bound(double n);

struct PredictionRow {
  u64 threshold;
  u64 observed;
  double predicted;
  double relative_error;  // (observed - predicted)/predicted
};

struct PredictionTables {
  std::vector<PredictionRow> no_fixed_points;     // observed #A(N) vs expected
  std::vector<PredictionRow> total_fixed_points;  // observed sum F(p) vs expected
};

// Builds both comparison tables from one scan over the primes up to the
// largest threshold.  thresholds must be ascending.  record_sink, when set,
// receives every census record of the scan (ascending p).
PredictionTables build_prediction_tables(
    std::span<const u64> no_fixed_point_thresholds,
    std::span<const u64> total_fixed_point_thresholds,
    const CensusOptions& options = {},
    const std::function<void(const PrimeCensusRecord&)>& record_sink = {});

std::vector<PredictionRow> table_no_fixed_points(std::span<const u64> thresholds,
                                                 const CensusOptions& = {});
std::vector<PredictionRow> table_total_fixed_points(std::span<const u64> thresholds,
                                                    const CensusOptions& = {});

}  // namespace selfpower

#endif
