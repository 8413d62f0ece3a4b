#ifndef SPRINGER_PRESENTATIONS_HPP
#define SPRINGER_PRESENTATIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "springer/partition.hpp"
#include "springer/polynomial.hpp"

namespace springer {

enum class Flavor { EqK, EqKCompact, EqCoh, OrdK, Flag, ClassicalCoh };

std::string flavor_name(Flavor f);
std::optional<Flavor> flavor_from_name(const std::string& name);
/* Cohomology flavors present the x-family as y. */
NameMap display_names(Flavor f);

/* Provenance of one generator: subset size s, the increasing subset itself,
 * and the coefficient degree d. */
struct GeneratorIndex {
  int s = 0;
  std::vector<int> subset;
  int d = 0;
  bool operator==(const GeneratorIndex&) const = default;
};

struct Generator {
  GeneratorIndex index;
  Polynomial poly;
};

struct IdealPresentation {
  Flavor flavor = Flavor::EqK;
  std::optional<Partition> lambda;  // absent for the flag ideal
  int n = 0;                        // arity of the x family
  VariableSpace space;
  std::vector<std::string> invertible;  // families whose variables are units
  std::vector<Generator> generators;    // nonzero, ordered by (s, subset, d)
  std::vector<GeneratorIndex> dropped;  // identically-zero candidates
  std::string specialization;           // annotation, empty unless specialized

  std::vector<Polynomial> polys() const;
};

/* Calls fn(s, subset, d) over the full generator index set of lambda:
 * s = 1..n, increasing subsets in lexicographic order, and
 * d in [max(1, s+1-q), s] with q = p-value of the dual partition at s. */
void for_each_generator_index(
    const Partition& lambda,
    const std::function<void(int, const std::vector<int>&, int)>& fn);

/* sum_{k=0..d} (-1)^{d-k} e_k(xargs) h_{d-k}(hargs) */
Polynomial alternating_eh_sum(const VariableSpace& space,
                              const std::vector<Polynomial>& xargs,
                              const std::vector<Polynomial>& hargs, int d);

/* Equivariant K-ring presentation over Laurent coefficients in u: generator at
 * (s, i, d) is the alternating e/h sum with h-arguments u_{phi(1..s+1-d)}. */
IdealPresentation equivariant_k_ideal(const Partition& lambda);

/* Same ideal, with e_k(x) replaced by e_k(x) - e_k(u_{phi(1..s)}); equal
 * generator-by-generator since the correction telescopes to e_d of a window
 * shorter than d. */
IdealPresentation equivariant_k_ideal_compact(const Partition& lambda);

/* Identical generator polynomials; nothing invertible; displays x as y. */
IdealPresentation equivariant_cohomology_ideal(const Partition& lambda);

/* Ordinary K-ring: generator at (s, i, d) is
 * sum_k (-1)^{d-k} e_k(x_i) C(q+d-k-1, q-1). */
IdealPresentation ordinary_k_ideal(const Partition& lambda);

/* e_k(x_1..x_n) - e_k(t_1..t_n) for k = 1..n. */
IdealPresentation flag_ideal(int n);

/* Graded limit: generator at (s, i, d) is e_d(x_i). */
IdealPresentation classical_tanisaki_ideal(const Partition& lambda);

/* Per-u-variable image: a rational constant, or the t-variable of the same
 * index. Zero constants are rejected when u is declared invertible. */
struct Specialization {
  struct Image {
    bool to_t = false;
    mpq_class value = 0;
  };
  std::vector<Image> u_images;
  std::string annotation;

  static Specialization all_to(const mpq_class& c, int u_arity);
  static Specialization rename_to_t(int u_arity);
  static Specialization to_values(const std::vector<mpq_class>& values);
};

IdealPresentation specialize_ideal(const IdealPresentation& I,
                                   const Specialization& sigma);

/* Symbolic witness that the compact and plain forms agree: the alternating
 * e/h sum over the phi prefix of length s equals e_d of the phi window
 * (s+2-d .. s), which has d-1 < d entries and is therefore zero. */
struct VanishingIdentityResult {
  Polynomial sum;
  Polynomial residual;
  bool is_zero = false;
};
VanishingIdentityResult vanishing_identity_check(const Partition& lambda, int s,
                                                 int d);

/* Exact identities behind the u -> 1 specialization:
 * h_{d-k}(1,...,1 [s+1-d ones]) = C(s-k, s-d)  and
 * C(q+d-k-1, q-1) = C(s-k, s-d) * prod_{i=1..q-s-1+d} (s-k+i)/(s-d+i). */
bool binomial_specialization_check(int s, int d, int k, int q);

}  // namespace springer

#endif
