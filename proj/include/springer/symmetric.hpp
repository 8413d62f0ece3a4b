#ifndef SPRINGER_SYMMETRIC_HPP
#define SPRINGER_SYMMETRIC_HPP

#include <vector>

#include "springer/polynomial.hpp"

namespace springer {

/* e_k of the argument list; e_0 = 1, e_k = 0 for k > #args or k < 0. */
Polynomial elementary_symmetric(int k, const VariableSpace& space,
                                const std::vector<Polynomial>& args);

/* h_k with multiplicity; h_0 = 1, h_k(empty) = 0 for k >= 1. */
Polynomial complete_homogeneous(int k, const VariableSpace& space,
                                const std::vector<Polynomial>& args);

/* Polynomial coefficients c_0..c_order of a series truncated at t^order. */
class TruncatedPowerSeries {
 public:
  TruncatedPowerSeries(const VariableSpace& space, int order);

  static TruncatedPowerSeries one(const VariableSpace& space, int order);
  /* 1 + a*t */
  static TruncatedPowerSeries one_plus(const Polynomial& a, int order);

  int order() const { return static_cast<int>(coeff_.size()) - 1; }
  const Polynomial& coeff(int d) const;
  void set_coeff(int d, Polynomial p);

  TruncatedPowerSeries operator*(const TruncatedPowerSeries& o) const;
  /* Requires an invertible (nonzero rational constant) t^0 coefficient. */
  TruncatedPowerSeries inverse() const;

  bool operator==(const TruncatedPowerSeries& o) const;

 private:
  VariableSpace space_;
  std::vector<Polynomial> coeff_;
};

/* Coefficient of t^d in  prod_{a in A} (1 + a t) / prod_{b in B} (1 + b t),
 * equal to  sum_{k=0..d} (-1)^{d-k} e_k(A) h_{d-k}(B). */
Polynomial series_coefficient(const std::vector<Polynomial>& A,
                              const std::vector<Polynomial>& B, int d,
                              const VariableSpace& space);

}  // namespace springer

#endif
