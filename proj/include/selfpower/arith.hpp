#ifndef SELFPOWER_ARITH_HPP
#define SELFPOWER_ARITH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <selfpower/errors.hpp>

namespace selfpower {

using u64 = std::uint64_t;
using u32 = std::uint32_t;
using i64 = std::int64_t;

// Memory/enumeration budgets.  SELFPOWER_BUDGET (CLI) can override the
// enumeration ones at run time.
inline constexpr u64 kDefaultSieveLimit = u64(1) << 31;
inline constexpr u64 kDefaultDivisorCap = u64(1) << 20;
inline constexpr std::size_t kDefaultSegment = std::size_t(1) << 22;

struct PrimePower {
  u64 prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// An integer together with its canonical factorization (primes ascending).
// value = 1 has an empty factor list.
struct FactoredInteger {
  u64 value = 1;
  std::vector<PrimePower> factors;
};

// All primes <= limit, ascending.  Sieves in segments so working memory
// stays O(sqrt(limit) + segment) on top of the result.
std::vector<u64> sieve_primes(u64 limit, std::size_t segment = kDefaultSegment,
                              u64 budget = kDefaultSieveLimit);

// Streams the primes in [lo, hi] segment by segment.  base_primes must
// contain every prime <= sqrt(hi) (extra entries are fine).
void segmented_primes(u64 lo, u64 hi, std::span<const u64> base_primes,
                      const std::function<void(std::span<const u64>)>& sink,
                      std::size_t segment = kDefaultSegment);

bool is_prime(u64 n);

// Trial division against ascending primes; primes must cover sqrt(n).
FactoredInteger factorize(u64 n, std::span<const u64> primes);
FactoredInteger factorize(u64 n);

// (a*b) mod m without overflow for a, b < 2^63.
u64 mod_mul(u64 a, u64 b, u64 m);

// Square-and-multiply; exp = 0 gives 1 (mod m).
u64 mod_pow(u64 base, u64 exp, u64 modulus);

// Inverse of a modulo m (extended Euclid); requires gcd(a, m) = 1.
u64 mod_inverse(u64 a, u64 m);

// All divisors of f.value, ascending.  Throws ResourceError if the divisor
// count would exceed cap.
std::vector<u64> divisors(const FactoredInteger& f, u64 cap = kDefaultDivisorCap);

// (d, phi(d)) for every divisor d of f.value, ascending by d.
std::vector<std::pair<u64, u64>> divisor_totients(const FactoredInteger& f,
                                                  u64 cap = kDefaultDivisorCap);

u64 euler_phi(const FactoredInteger& f);

// Least k >= 1 with a^k = 1 (mod p); p_minus_1 factors p-1.
u64 multiplicative_order(u64 a, u64 p, const FactoredInteger& p_minus_1);

// Euler criterion, values in {-1, 0, +1}.
int legendre_symbol(u64 a, u64 p);

// a^((p-1)/q) == 1, i.e. a is in the image of x -> x^q on [1, p-1].
bool is_qth_power_residue(u64 a, u64 p, u64 q);

// Smallest generator of (Z/pZ)*.
u64 primitive_root(u64 p, const FactoredInteger& p_minus_1);

// Fixed-modulus reduction: Barrett multiply-shift for moduli below 2^32
// (covers every scan in this project), 128-bit division above.
class Reducer {
 public:
  explicit Reducer(u64 modulus);
  u64 modulus() const { return m_; }

  u64 reduce(u64 x) const {
    if (!small_) return x % m_;
    u64 q = static_cast<u64>((static_cast<unsigned __int128>(x) * magic_) >> 64);
    u64 r = x - q * m_;
    while (r >= m_) r -= m_;
    return r;
  }

  // a, b < modulus.
  u64 mul(u64 a, u64 b) const {
    if (!small_) return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m_);
    return reduce(a * b);
  }

  u64 pow(u64 base, u64 exp) const {
    u64 r = 1 % m_;
    while (exp) {
      if (exp & 1) r = mul(r, base);
      base = mul(base, base);
      exp >>= 1;
    }
    return r;
  }

 private:
  u64 m_;
  u64 magic_ = 0;
  bool small_;
};

}  // namespace selfpower

#endif
