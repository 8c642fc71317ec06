#ifndef SELFPOWER_PARALLEL_HPP
#define SELFPOWER_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include <selfpower/arith.hpp>

namespace selfpower {

struct ParallelOptions {
  unsigned workers = 0;          // 0 = hardware concurrency
  u64 block_span = u64(1) << 16; // numbers per work block (not worker-dependent)
};

inline unsigned resolve_workers(unsigned requested) {
  if (requested) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Maps a kernel over the primes in [lo, hi] and returns the per-prime results
// in ascending-p order.  The range is cut into fixed blocks of `block_span`
// integers, workers grab blocks dynamically, and block outputs are
// concatenated in block order, so the result is invariant under the worker
// count.  Each worker runs on its own copy of the kernel.
//
// Kernel signature: void (std::span<const u64> block_primes, std::vector<T>& out).
template <class T, class Kernel>
std::vector<T> blocked_prime_map(u64 lo, u64 hi, const ParallelOptions& opt,
                                 const Kernel& kernel) {
  std::vector<T> result;
  if (hi < lo || hi < 2) return result;
  if (lo < 2) lo = 2;

  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(hi))) + 2;
  std::vector<u64> base = sieve_primes(root);

  u64 span = opt.block_span ? opt.block_span : u64(1) << 16;
  std::size_t nblocks = static_cast<std::size_t>((hi - lo) / span) + 1;
  std::vector<std::vector<T>> block_out(nblocks);

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto run = [&]() {
    Kernel local = kernel;
    std::vector<u64> block_primes;
    try {
      std::size_t b;
      while ((b = next.fetch_add(1)) < nblocks) {
        u64 blo = lo + b * span;
        u64 bhi = std::min(hi, blo + span - 1);
        block_primes.clear();
        segmented_primes(blo, bhi, base,
                         [&](std::span<const u64> chunk) {
                           block_primes.insert(block_primes.end(), chunk.begin(), chunk.end());
                         });
        local(std::span<const u64>(block_primes), block_out[b]);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  unsigned workers = resolve_workers(opt.workers);
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; w++) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::size_t total = 0;
  for (auto& v : block_out) total += v.size();
  result.reserve(total);
  for (auto& v : block_out) result.insert(result.end(), v.begin(), v.end());
  return result;
}

}  // namespace selfpower

#endif
