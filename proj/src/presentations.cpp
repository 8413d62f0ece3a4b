#include "springer/presentations.hpp"

#include <algorithm>
#include <stdexcept>

#include "springer/numeric.hpp"
#include "springer/symmetric.hpp"

namespace springer {

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::EqK: return "EqK";
    case Flavor::EqKCompact: return "EqK-compact";
    case Flavor::EqCoh: return "EqCoh";
    case Flavor::OrdK: return "OrdK";
    case Flavor::Flag: return "Flag";
    case Flavor::ClassicalCoh: return "ClassicalCoh";
  }
  throw std::logic_error("flavor_name: bad flavor");
}

std::optional<Flavor> flavor_from_name(const std::string& name) {
  for (Flavor f : {Flavor::EqK, Flavor::EqKCompact, Flavor::EqCoh, Flavor::OrdK,
                   Flavor::Flag, Flavor::ClassicalCoh})
    if (flavor_name(f) == name) return f;
  return std::nullopt;
}

NameMap display_names(Flavor f) {
  NameMap names;
  if (f == Flavor::EqCoh) names.x_as = 'y';
  return names;
}

std::vector<Polynomial> IdealPresentation::polys() const {
  std::vector<Polynomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.poly);
  return out;
}

void for_each_generator_index(
    const Partition& lambda,
    const std::function<void(int, const std::vector<int>&, int)>& fn) {
  const int n = lambda.n();
  const Partition dual = lambda.dual();
  for (int s = 1; s <= n; ++s) {
    int q = dual.p_value(s);
    int d_lo = std::max(1, s + 1 - q);
    if (d_lo > s) continue;
    // increasing s-subsets of 1..n in lexicographic order
    std::vector<int> subset(s);
    for (int i = 0; i < s; ++i) subset[i] = i + 1;
    while (true) {
      for (int d = d_lo; d <= s; ++d) fn(s, subset, d);
      int i = s - 1;
      while (i >= 0 && subset[i] == n - (s - 1 - i)) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < s; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
}

Polynomial alternating_eh_sum(const VariableSpace& space,
                              const std::vector<Polynomial>& xargs,
                              const std::vector<Polynomial>& hargs, int d) {
  Polynomial acc = Polynomial::zero(space);
  for (int k = 0; k <= d; ++k) {
    Polynomial term = elementary_symmetric(k, space, xargs) *
                      complete_homogeneous(d - k, space, hargs);
    if ((d - k) % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

namespace {

std::vector<Polynomial> x_vars(const VariableSpace& space,
                               const std::vector<int>& subset) {
  std::vector<Polynomial> out;
  out.reserve(subset.size());
  for (int i : subset)
    out.push_back(Polynomial::variable(space, space.x_var(i)));
  return out;
}

/* u_{phi(1)}, ..., u_{phi(m)} */
std::vector<Polynomial> phi_prefix(const VariableSpace& space,
                                   const std::vector<int>& phi, int m) {
  std::vector<Polynomial> out;
  out.reserve(m);
  for (int pos = 1; pos <= m; ++pos)
    out.push_back(Polynomial::variable(space, space.u_var(phi[pos - 1])));
  return out;
}

IdealPresentation build_from_index_set(
    const Partition& lambda, Flavor flavor, const VariableSpace& space,
    std::vector<std::string> invertible,
    const std::function<Polynomial(int, const std::vector<int>&, int)>& make) {
  IdealPresentation I;
  I.flavor = flavor;
  I.lambda = lambda;
  I.n = lambda.n();
  I.space = space;
  I.invertible = std::move(invertible);
  for_each_generator_index(lambda, [&](int s, const std::vector<int>& subset,
                                       int d) {
    Polynomial g = make(s, subset, d);
    if (g.is_zero())
      I.dropped.push_back({s, subset, d});
    else
      I.generators.push_back({{s, subset, d}, std::move(g)});
  });
  return I;
}

}  // namespace

IdealPresentation equivariant_k_ideal(const Partition& lambda) {
  VariableSpace space{lambda.n(), lambda.length(), 0};
  const std::vector<int> phi = lambda.phi_sequence();
  return build_from_index_set(
      lambda, Flavor::EqK, space, {"u"},
      [&](int s, const std::vector<int>& subset, int d) {
        return alternating_eh_sum(space, x_vars(space, subset),
                                  phi_prefix(space, phi, s + 1 - d), d);
      });
}

IdealPresentation equivariant_k_ideal_compact(const Partition& lambda) {
  VariableSpace space{lambda.n(), lambda.length(), 0};
  const std::vector<int> phi = lambda.phi_sequence();
  return build_from_index_set(
      lambda, Flavor::EqKCompact, space, {"u"},
      [&](int s, const std::vector<int>& subset, int d) {
        std::vector<Polynomial> xa = x_vars(space, subset);
        std::vector<Polynomial> ua_s = phi_prefix(space, phi, s);
        std::vector<Polynomial> ha = phi_prefix(space, phi, s + 1 - d);
        Polynomial acc = Polynomial::zero(space);
        for (int k = 0; k <= d; ++k) {
          Polynomial diff = elementary_symmetric(k, space, xa) -
                            elementary_symmetric(k, space, ua_s);
          Polynomial term = diff * complete_homogeneous(d - k, space, ha);
          if ((d - k) % 2) acc -= term;
          else acc += term;
        }
        return acc;
      });
}

IdealPresentation equivariant_cohomology_ideal(const Partition& lambda) {
  IdealPresentation I = equivariant_k_ideal(lambda);
  I.flavor = Flavor::EqCoh;
  I.invertible.clear();
  return I;
}

IdealPresentation ordinary_k_ideal(const Partition& lambda) {
  VariableSpace space{lambda.n(), 0, 0};
  const Partition dual = lambda.dual();
  return build_from_index_set(
      lambda, Flavor::OrdK, space, {},
      [&](int s, const std::vector<int>& subset, int d) {
        int q = dual.p_value(s);
        std::vector<Polynomial> xa = x_vars(space, subset);
        Polynomial acc = Polynomial::zero(space);
        for (int k = 0; k <= d; ++k) {
          mpq_class c(binomial(q + d - k - 1, q - 1));
          if ((d - k) % 2) c = -c;
          acc += elementary_symmetric(k, space, xa) * c;
        }
        return acc;
      });
}

IdealPresentation flag_ideal(int n) {
  if (n < 1) throw std::invalid_argument("flag_ideal: n >= 1");
  VariableSpace space{n, 0, n};
  IdealPresentation I;
  I.flavor = Flavor::Flag;
  I.lambda = std::nullopt;
  I.n = n;
  I.space = space;
  I.invertible = {"t"};
  std::vector<int> full(n);
  std::vector<Polynomial> xa, ta;
  for (int i = 1; i <= n; ++i) {
    full[i - 1] = i;
    xa.push_back(Polynomial::variable(space, space.x_var(i)));
    ta.push_back(Polynomial::variable(space, space.t_var(i)));
  }
  for (int k = 1; k <= n; ++k) {
    Polynomial g = elementary_symmetric(k, space, xa) -
                   elementary_symmetric(k, space, ta);
    I.generators.push_back({{n, full, k}, std::move(g)});
  }
  return I;
}

IdealPresentation classical_tanisaki_ideal(const Partition& lambda) {
  VariableSpace space{lambda.n(), 0, 0};
  return build_from_index_set(
      lambda, Flavor::ClassicalCoh, space, {},
      [&](int s, const std::vector<int>& subset, int d) {
        return elementary_symmetric(d, space, x_vars(space, subset));
      });
}

Specialization Specialization::all_to(const mpq_class& c, int u_arity) {
  Specialization sigma;
  sigma.u_images.assign(u_arity, Image{false, c});
  sigma.annotation = "u->" + c.get_str();
  return sigma;
}

Specialization Specialization::rename_to_t(int u_arity) {
  Specialization sigma;
  sigma.u_images.assign(u_arity, Image{true, 0});
  sigma.annotation = "u->t";
  return sigma;
}

Specialization Specialization::to_values(const std::vector<mpq_class>& values) {
  Specialization sigma;
  sigma.annotation = "u->(";
  for (std::size_t j = 0; j < values.size(); ++j) {
    sigma.u_images.push_back(Image{false, values[j]});
    if (j) sigma.annotation += ",";
    sigma.annotation += values[j].get_str();
  }
  sigma.annotation += ")";
  return sigma;
}

IdealPresentation specialize_ideal(const IdealPresentation& I,
                                   const Specialization& sigma) {
  const int l = I.space.u_arity;
  if (static_cast<int>(sigma.u_images.size()) != l)
    throw std::invalid_argument("specialize_ideal: image count != u arity");
  bool u_invertible = std::find(I.invertible.begin(), I.invertible.end(), "u") !=
                      I.invertible.end();
  bool any_rename = false;
  for (int j = 0; j < l; ++j) {
    const auto& img = sigma.u_images[j];
    if (img.to_t)
      any_rename = true;
    else if (u_invertible && img.value == 0)
      throw std::invalid_argument(
          "specialize_ideal: zero assigned to invertible variable u" +
          std::to_string(j + 1));
  }

  VariableSpace target{I.space.x_arity, 0,
                       any_rename ? std::max(I.space.t_arity, l) : I.space.t_arity};
  IdealPresentation R;
  R.flavor = I.flavor;
  R.lambda = I.lambda;
  R.n = I.n;
  R.space = target;
  if (any_rename && u_invertible) R.invertible = {"t"};
  R.dropped = I.dropped;
  R.specialization = I.specialization.empty()
                         ? sigma.annotation
                         : I.specialization + "; " + sigma.annotation;

  auto image = [&](int v) -> Polynomial {
    char fam = I.space.family(v);
    int idx = I.space.family_index(v);
    if (fam == 'x') return Polynomial::variable(target, target.x_var(idx));
    if (fam == 't') return Polynomial::variable(target, target.t_var(idx));
    const auto& img = sigma.u_images[idx - 1];
    if (img.to_t) return Polynomial::variable(target, target.t_var(idx));
    return Polynomial::constant(target, img.value);
  };

  for (const auto& g : I.generators) {
    Polynomial h = g.poly.substituted(target, image);
    if (h.is_zero())
      R.dropped.push_back(g.index);
    else
      R.generators.push_back({g.index, std::move(h)});
  }
  return R;
}

VanishingIdentityResult vanishing_identity_check(const Partition& lambda, int s,
                                                 int d) {
  const int n = lambda.n();
  if (s < 1 || s > n)
    throw std::out_of_range("vanishing_identity_check: 1 <= s <= n");
  if (d < 1 || d > s + 1)
    throw std::out_of_range("vanishing_identity_check: 1 <= d <= s+1");
  VariableSpace space{0, lambda.length(), 0};
  const std::vector<int> phi = lambda.phi_sequence();
  std::vector<Polynomial> prefix_s = phi_prefix(space, phi, s);
  std::vector<Polynomial> prefix_h = phi_prefix(space, phi, s + 1 - d);
  VanishingIdentityResult r{
      alternating_eh_sum(space, prefix_s, prefix_h, d),
      Polynomial::zero(space), false};
  // window positions s+2-d .. s (empty when d <= 1)
  std::vector<Polynomial> window;
  for (int pos = std::max(1, s + 2 - d); pos <= s; ++pos)
    window.push_back(Polynomial::variable(space, space.u_var(phi[pos - 1])));
  r.residual = elementary_symmetric(d, space, window);
  r.is_zero = r.sum.is_zero();
  return r;
}

bool binomial_specialization_check(int s, int d, int k, int q) {
  if (!(0 <= k && k <= d && d <= s && q >= s + 1 - d && q >= 1)) return false;
  // h_{d-k} of s+1-d ones equals C(s-k, s-d)
  VariableSpace scalar{0, 0, 0};
  std::vector<Polynomial> ones(s + 1 - d, Polynomial::constant(scalar, 1));
  Polynomial h = complete_homogeneous(d - k, scalar, ones);
  mpq_class h_val = h.is_zero() ? mpq_class(0) : h.terms()[0].coeff;
  if (h_val != mpq_class(binomial(s - k, s - d))) return false;
  // proportionality factor between the two coefficient families
  mpq_class factor = 1;
  for (int i = 1; i <= q - s - 1 + d; ++i)
    factor *= mpq_class(s - k + i) / mpq_class(s - d + i);
  mpq_class lhs(binomial(q + d - k - 1, q - 1));
  return lhs == factor * mpq_class(binomial(s - k, s - d));
}

}  // namespace springer
