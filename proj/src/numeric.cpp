#include "springer/numeric.hpp"

namespace springer {

mpz_class factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

std::uint64_t SeededStream::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SeededStream::below(std::uint64_t bound) {
  return next() % bound;  // modulo bias harmless for shuffling tiny lists
}

std::vector<mpq_class> seeded_prime_values(std::uint64_t seed, int count) {
  static const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                               41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  constexpr int pool = static_cast<int>(sizeof(primes) / sizeof(primes[0]));
  if (count < 0 || count > pool)
    throw std::invalid_argument("seeded_prime_values: count out of range");
  std::vector<int> deck(primes, primes + pool);
  SeededStream rng(seed);
  for (int i = pool - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(deck[i], deck[j]);
  }
  std::vector<mpq_class> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.emplace_back(deck[i]);
  return out;
}

}  // namespace springer
