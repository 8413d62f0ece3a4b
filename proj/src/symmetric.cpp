#include "springer/symmetric.hpp"

#include <stdexcept>

namespace springer {

Polynomial elementary_symmetric(int k, const VariableSpace& space,
                                const std::vector<Polynomial>& args) {
  if (k < 0 || k > static_cast<int>(args.size())) return Polynomial::zero(space);
  // row j of the DP holds e_j of the arguments seen so far
  std::vector<Polynomial> e(k + 1, Polynomial::zero(space));
  e[0] = Polynomial::constant(space, 1);
  int seen = 0;
  for (const Polynomial& a : args) {
    ++seen;
    for (int j = std::min(k, seen); j >= 1; --j) e[j] += a * e[j - 1];
  }
  return e[k];
}

Polynomial complete_homogeneous(int k, const VariableSpace& space,
                                const std::vector<Polynomial>& args) {
  if (k < 0) return Polynomial::zero(space);
  if (k == 0) return Polynomial::constant(space, 1);
  if (args.empty()) return Polynomial::zero(space);
  // h_j over a growing argument list: h_j(A + a) = h_j(A) + a * h_{j-1}(A + a);
  // ascending j uses the already-updated h[j-1]
  std::vector<Polynomial> h(k + 1, Polynomial::zero(space));
  h[0] = Polynomial::constant(space, 1);
  for (const Polynomial& a : args)
    for (int j = 1; j <= k; ++j) h[j] += a * h[j - 1];
  return h[k];
}

TruncatedPowerSeries::TruncatedPowerSeries(const VariableSpace& space, int order)
    : space_(space) {
  if (order < 0) throw std::invalid_argument("TruncatedPowerSeries: order >= 0");
  coeff_.assign(order + 1, Polynomial::zero(space));
}

TruncatedPowerSeries TruncatedPowerSeries::one(const VariableSpace& space,
                                               int order) {
  TruncatedPowerSeries s(space, order);
  s.coeff_[0] = Polynomial::constant(space, 1);
  return s;
}

TruncatedPowerSeries TruncatedPowerSeries::one_plus(const Polynomial& a,
                                                    int order) {
  TruncatedPowerSeries s = one(a.space(), order);
  if (order >= 1) s.coeff_[1] = a;
  return s;
}

const Polynomial& TruncatedPowerSeries::coeff(int d) const {
  if (d < 0 || d > order())
    throw std::out_of_range("TruncatedPowerSeries::coeff: beyond truncation");
  return coeff_[d];
}

void TruncatedPowerSeries::set_coeff(int d, Polynomial p) {
  if (d < 0 || d > order())
    throw std::out_of_range("TruncatedPowerSeries::set_coeff: beyond truncation");
  if (!(p.space() == space_))
    throw std::invalid_argument("TruncatedPowerSeries: mismatched space");
  coeff_[d] = std::move(p);
}

TruncatedPowerSeries TruncatedPowerSeries::operator*(
    const TruncatedPowerSeries& o) const {
  if (!(space_ == o.space_) || order() != o.order())
    throw std::invalid_argument("TruncatedPowerSeries: incompatible operands");
  TruncatedPowerSeries r(space_, order());
  for (int d = 0; d <= order(); ++d) {
    Polynomial acc = Polynomial::zero(space_);
    for (int i = 0; i <= d; ++i) acc += coeff_[i] * o.coeff_[d - i];
    r.coeff_[d] = std::move(acc);
  }
  return r;
}

TruncatedPowerSeries TruncatedPowerSeries::inverse() const {
  const Polynomial& c0 = coeff_[0];
  if (!c0.is_constant() || c0.is_zero())
    throw std::invalid_argument(
        "TruncatedPowerSeries::inverse: constant term must be a nonzero scalar");
  mpq_class inv0 = 1 / c0.terms()[0].coeff;
  TruncatedPowerSeries r(space_, order());
  r.coeff_[0] = Polynomial::constant(space_, inv0);
  for (int d = 1; d <= order(); ++d) {
    Polynomial acc = Polynomial::zero(space_);
    for (int i = 1; i <= d; ++i) acc += coeff_[i] * r.coeff_[d - i];
    r.coeff_[d] = acc * (-inv0);
  }
  return r;
}

bool TruncatedPowerSeries::operator==(const TruncatedPowerSeries& o) const {
  if (!(space_ == o.space_) || order() != o.order()) return false;
  for (int d = 0; d <= order(); ++d)
    if (!(coeff_[d] == o.coeff_[d])) return false;
  return true;
}

Polynomial series_coefficient(const std::vector<Polynomial>& A,
                              const std::vector<Polynomial>& B, int d,
                              const VariableSpace& space) {
  if (d < 0) throw std::invalid_argument("series_coefficient: d >= 0");
  TruncatedPowerSeries s = TruncatedPowerSeries::one(space, d);
  for (const Polynomial& a : A) s = s * TruncatedPowerSeries::one_plus(a, d);
  for (const Polynomial& b : B)
    s = s * TruncatedPowerSeries::one_plus(b, d).inverse();
  return s.coeff(d);
}

}  // namespace springer
