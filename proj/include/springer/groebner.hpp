#ifndef SPRINGER_GROEBNER_HPP
#define SPRINGER_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "springer/partition.hpp"
#include "springer/polynomial.hpp"
#include "springer/presentations.hpp"

namespace springer {

enum class OrderKind { Grevlex, Lex };

/* precedence[0] is the most significant variable. The default precedence is
 * the enumeration order x1 > ... > xn > u1 > ... > t1 > ... */
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::vector<int> precedence;

  static MonomialOrder grevlex(const VariableSpace& space);
  static MonomialOrder lex(const VariableSpace& space);
  static MonomialOrder of_kind(OrderKind kind, const VariableSpace& space);

  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }
};

/* Reduced basis: leading coefficients 1, no leading monomial divides another,
 * no term of any element lies in the leading-term ideal of the others. */
struct GroebnerBasis {
  VariableSpace space;
  MonomialOrder order;
  std::vector<Polynomial> polys;
  std::vector<Monomial> leads;  // aligned with polys, ascending in the order
};

GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const MonomialOrder& order);

/* Unique remainder: no term divisible by any leading monomial; p minus the
 * result lies in the ideal. */
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);

/* Count of standard monomials; nullopt when infinite (some variable has no
 * pure power among the leading monomials). */
std::optional<long long> quotient_dimension(const GroebnerBasis& G);

/* All standard monomials, ascending in the order; throws when infinite. */
std::vector<Monomial> standard_monomials(const GroebnerBasis& G);

/* Mutual reduction of the generator lists. */
bool ideal_equality(const std::vector<Polynomial>& A,
                    const std::vector<Polynomial>& B,
                    const MonomialOrder& order);

struct DegenerateSpecialization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Quotient dimension after sending every u and t variable to distinct primes
 * chosen by the seed; nullopt when that specialization is degenerate
 * (infinite-dimensional). */
std::optional<long long> generic_rank(const IdealPresentation& I,
                                      std::uint64_t seed,
                                      OrderKind kind = OrderKind::Grevlex);

struct RankRun {
  long long rank = -1;
  std::uint64_t seed_a = 0, seed_b = 0;
  int attempts = 0;
};

/* Runs generic_rank at seed pairs (seed+2a, seed+2a+1) until both agree;
 * throws DegenerateSpecialization after `retries` attempts. */
RankRun verified_generic_rank(const IdealPresentation& I, std::uint64_t seed,
                              int retries, OrderKind kind = OrderKind::Grevlex);

struct BasisRun {
  std::vector<Monomial> monomials;  // ascending in the order
  VariableSpace space;              // the x-only space of the monomials
  std::uint64_t seed_used = 0;
  int attempts = 0;
};

/* Standard-monomial basis at the seeded specialization; retries at seed+1,
 * seed+2, ... while the quotient stays infinite-dimensional. */
BasisRun generic_standard_basis(const IdealPresentation& I, std::uint64_t seed,
                                int retries,
                                OrderKind kind = OrderKind::Grevlex);

struct InjectivityRun {
  bool injective = false;
  long long matrix_rank = -1;
  long long m = -1;  // multinomial, the expected full rank
  std::uint64_t seed_used = 0;
  int attempts = 0;
};

/* Evaluation matrix of the standard monomials at the fixed points, computed
 * at a seeded generic u; full rank certifies injectivity of the restriction.
 * Specializations whose standard-monomial count differs from the multinomial
 * are treated as degenerate and retried at seed+1, seed+2, ... */
InjectivityRun localization_injectivity(const Partition& lambda,
                                        std::uint64_t seed, int retries);

/* Fraction-free Gaussian elimination; exact. */
long long matrix_rank_fraction_free(std::vector<std::vector<mpq_class>> M);

}  // namespace springer

#endif
