#ifndef SELFPOWER_LINFORMS_HPP
#define SELFPOWER_LINFORMS_HPP

#include <span>
#include <vector>

#include <selfpower/arith.hpp>

namespace selfpower {

inline constexpr u64 kDefaultCqBudget = 100000000;  // max enumerated vectors

// The linear forms L_n over F_q read off the prime factorization of n:
// L_n(v) = sum_i alpha_{i,n} v_i where n = prod p_i^alpha_{i,n} and the
// coordinates run over the d = pi(q-1) primes below q.
struct LinearFormSystem {
  u64 q = 0;
  u32 dimension = 0;            // pi(q-1)
  std::vector<u32> spf;         // smallest prime factor, index 0..q-1 (0,1 unused)
  std::vector<u32> primes;      // primes <= q-1, ascending; coordinate i
  std::vector<u32> prime_index; // prime -> coordinate, size q
  std::vector<u32> check_order; // 1, square-free ascending, then squarefull ascending
};

LinearFormSystem build_system(u64 q);

// L_n(v) for n = 1..q-1 into out (size q; out[0] unused, out[1] = 0).
// Composite forms by dynamic programming over the smallest prime factor.
void evaluate_all_forms(const LinearFormSystem& sys, std::span<const u32> v,
                        std::span<u32> out);

enum class CqMethod { exact, monte_carlo, upper_bound };

const char* cq_method_name(CqMethod m);

struct CqEstimate {
  u64 q = 0;
  u32 dimension = 0;
  u64 x0 = 0;
  CqMethod method = CqMethod::exact;
  double value = 0;       // N_q / q^d (or its estimate / bound)
  u64 value_num = 0;      // exact N_q (method == exact only)
  u64 value_den = 0;      // exact q^d (method == exact only)
  u64 samples = 0;        // 0 for exact
  double stderr_ = 0;     // sqrt(v(1-v)/samples) for Monte Carlo
};

// Exhaustive count of v in F_q^d avoiding x0 under every L_n, n in [1, q-1].
// Throws ResourceError when q^d exceeds budget (use cq_monte_carlo then).
CqEstimate cq_exact(u64 q, u64 x0, u64 budget = kDefaultCqBudget,
                    unsigned workers = 0);

// Unbiased Monte Carlo estimate of c(q) with binomial standard error;
// requires x0 != 0.  Fixed sample blocks with per-block substreams keep the
// result worker-count invariant.
CqEstimate cq_monte_carlo(u64 q, u64 x0, u64 samples, u64 master_seed,
                          unsigned workers = 0);

// Truncated inclusion-exclusion bound 1 - M/q + C(M,2)/q^2 clamped to [0,1],
// M = #square-free n in [2, q-1].  Tends to 1 - theta as q grows.
double cq_upper_bound(u64 q);

// theta = 1/zeta(2) - 1/(2 zeta(2)^2) = (6 pi^2 - 18)/pi^4.
double theta_constant();

}  // namespace selfpower

#endif
