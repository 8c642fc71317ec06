#ifndef SELFPOWER_DYNAMICS_HPP
#define SELFPOWER_DYNAMICS_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include <selfpower/arith.hpp>
#include <selfpower/parallel.hpp>

namespace selfpower {

enum class MapId { self_power, quad_plus_one };

const char* map_name(MapId m);

struct OrbitRecord {
  MapId map;
  u64 p;
  u64 x0;
  u64 tail;        // pre-periodic length
  u64 cycle;       // period length
  u64 orbit_size;  // tail + cycle = #distinct elements visited
};

// Tail/cycle lengths via Brent's constant-memory cycle finding, then exact
// tail refinement.  self_power acts on [1, p-1], quad_plus_one on [0, p-1].
OrbitRecord orbit_stats(MapId map, u64 p, u64 x0);

struct SampleOptions {
  ParallelOptions parallel;
  u64 per_prime_starts = 1;
};

// For every prime in [lo, hi]: draws starting points from the per-prime
// substream of (master_seed, p) and emits orbit records in ascending
// (p, draw index) order, independent of the worker count.
void sample_orbits(MapId map, u64 lo, u64 hi, u64 master_seed,
                   const std::function<void(const OrbitRecord&)>& sink,
                   const SampleOptions& options = {});

struct Histogram {
  std::vector<double> bin_edges;  // bins+1 ascending edges
  std::vector<u64> counts;
  std::string statistic_id;
  u64 sample_count = 0;
  double fitted_mean = 0;      // sample mean
  double fitted_variance = 0;  // unbiased sample variance
};

// Equal-width bins over [lo, hi]; values outside clamp to the end bins.
// Throws std::invalid_argument on an empty value set.
Histogram make_histogram(std::span<const double> values, unsigned bins,
                         double lo, double hi, std::string statistic_id);

struct EndoTrajectory {
  u64 p;
  u64 steps;
  u64 x0;
  u64 initial_order;  // order of x0 in (Z/pZ)*
  u64 final_order;    // order after `steps` random power maps; divides initial
};

// Iterates y -> y^u with u uniform on [1, p-1] (which realizes
// Pr[gcd(p-1, u) = d] = phi((p-1)/d)/(p-1) exactly); the element's order o
// descends as o -> o/gcd(o, u).  The smallest subgroup containing the end
// point has size final_order.
EndoTrajectory endo_trajectory(u64 p, u64 steps, u64 x0, u64 seed);

}  // namespace selfpower

#endif
