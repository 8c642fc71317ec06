#ifndef SELFPOWER_FIXEDPOINTS_HPP
#define SELFPOWER_FIXEDPOINTS_HPP

#include <functional>
#include <span>

#include <selfpower/arith.hpp>
#include <selfpower/parallel.hpp>

namespace selfpower {

inline constexpr u64 kDefaultImageLimit = u64(1) << 26;

// Per-prime census row.  image_size / collision_count are filled only when
// the image census was requested (they cost O(p) memory per prime).
struct PrimeCensusRecord {
  u64 p = 0;
  u64 fixed_point_count = 0;   // F(p)
  bool in_A = false;           // F(p) == 1
  bool special = false;        // p = 3 (mod 8) and (p-1)/2 prime
  u64 image_size = 0;          // #distinct x^x mod p over [1, p-1]
  u64 collision_count = 0;     // #{(x,y) : x^x = y^y}
};

// x^x mod p for x in [1, p-1]; never 0.
u64 psi(u64 x, u64 p);

bool is_special_prime(u64 p);

struct ImageCensus {
  u64 image_size;
  u64 collision_count;
};

// Multiplicity census of x -> x^x on [1, p-1]; collision_count is the sum of
// squared value multiplicities.  Throws ResourceError for p above limit.
ImageCensus image_census(u64 p, u64 limit = kDefaultImageLimit);

struct ConstructiveCheck {
  bool direct;     // x = 1 + beta*(p-1)/q satisfies x^(x-1) = 1 (mod p)
  bool criterion;  // (q-beta)/q is a q-th power residue mod p
};

// The two sides of the constructive solvability test for a prime q | p-1 and
// beta in [1, q-1]; they must always agree.
ConstructiveCheck constructive_check(u64 p, u64 q, u64 beta);

// T_f(p): number of x in [1, p-1] with x^(f(x)) = 1 (mod p).  The exponent
// f(x) is evaluated modulo p-1 (valid since gcd(x, p) = 1); coefficients are
// constant term first and may be negative.
u64 count_power_congruence(u64 p, std::span<const long long> coeffs);

// Fixed-point counting kernel.  Holds the factor base for p-1 and scratch
// space so a scan reuses them across primes.  Copyable; copies are
// independent (one per worker).
class CensusKernel {
 public:
  explicit CensusKernel(u64 max_p);

  u64 count_fixed_points(u64 p);
  u64 count_fixed_points(u64 p, const FactoredInteger& p_minus_1);
  PrimeCensusRecord census(u64 p, bool with_image = false,
                           u64 image_limit = kDefaultImageLimit);

 private:
  std::vector<u64> factor_base_;
};

// One-shot convenience.
u64 count_fixed_points(u64 p);

struct CensusOptions {
  ParallelOptions parallel;
  bool image_census = false;
  u64 image_limit = kDefaultImageLimit;
};

// Visits every prime p <= n_max in ascending order, handing each census
// record to sink; returns #A(n_max) = #{p <= n_max : F(p) = 1}.  Output
// order does not depend on the worker count.
u64 scan_A(u64 n_max, const std::function<void(const PrimeCensusRecord&)>& sink,
           const CensusOptions& options = {});

}  // namespace selfpower

#endif
