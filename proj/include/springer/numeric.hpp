#ifndef SPRINGER_NUMERIC_HPP
#define SPRINGER_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace springer {

mpz_class factorial(long n);

/* C(n, k) with C(n, k) = 0 for k < 0 or k > n; requires n >= 0. */
mpz_class binomial(long n, long k);

/* Deterministic 64-bit stream; splitmix64. Used only to seed specializations. */
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /* uniform in [0, bound); bound > 0 */
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/* `count` distinct small primes, order permuted by seed. All nonzero. */
std::vector<mpq_class> seeded_prime_values(std::uint64_t seed, int count);

}  // namespace springer

#endif
