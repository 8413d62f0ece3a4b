#include "springer/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "springer/fixed_points.hpp"
#include "springer/numeric.hpp"

namespace springer {

MonomialOrder MonomialOrder::grevlex(const VariableSpace& space) {
  MonomialOrder o;
  o.kind = OrderKind::Grevlex;
  o.precedence.resize(space.total());
  for (int v = 0; v < space.total(); ++v) o.precedence[v] = v;
  return o;
}

MonomialOrder MonomialOrder::lex(const VariableSpace& space) {
  MonomialOrder o = grevlex(space);
  o.kind = OrderKind::Lex;
  return o;
}

MonomialOrder MonomialOrder::of_kind(OrderKind kind, const VariableSpace& space) {
  return kind == OrderKind::Lex ? lex(space) : grevlex(space);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind == OrderKind::Lex) {
    for (int v : precedence) {
      if (a.exp(v) != b.exp(v)) return a.exp(v) < b.exp(v) ? -1 : 1;
    }
    return 0;
  }
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  /* Equal degree: the last differing variable decides, smaller exponent
   * there is larger. */
  for (auto it = precedence.rbegin(); it != precedence.rend(); ++it) {
    if (a.exp(*it) != b.exp(*it)) return a.exp(*it) > b.exp(*it) ? -1 : 1;
  }
  return 0;
}

namespace {

/* Terms sorted strictly descending in the working order. */
struct GPoly {
  std::vector<Term> t;
  const Monomial& lead() const { return t.front().mono; }
  const mpq_class& lc() const { return t.front().coeff; }
};

GPoly to_gpoly(const Polynomial& p, const MonomialOrder& ord) {
  GPoly g{p.terms()};
  std::sort(g.t.begin(), g.t.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.mono, b.mono) > 0;
  });
  return g;
}

/* p - c * q * g, all term lists descending in ord. */
std::vector<Term> subtract_scaled(const std::vector<Term>& p, const mpq_class& c,
                                  const Monomial& q, const std::vector<Term>& g,
                                  const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0, j = 0;
  Monomial gm(q.nvars());
  bool gm_valid = false;
  while (i < p.size() && j < g.size()) {
    if (!gm_valid) {
      gm = q * g[j].mono;
      gm_valid = true;
    }
    int cmp = ord.compare(p[i].mono, gm);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, -(c * g[j].coeff)});
      ++j;
      gm_valid = false;
    } else {
      mpq_class nc = p[i].coeff - c * g[j].coeff;
      if (nc != 0) out.push_back({p[i].mono, std::move(nc)});
      ++i;
      ++j;
      gm_valid = false;
    }
  }
  for (; i < p.size(); ++i) out.push_back(p[i]);
  for (; j < g.size(); ++j) out.push_back({q * g[j].mono, -(c * g[j].coeff)});
  return out;
}

std::vector<Term> reduce_full(std::vector<Term> p, const std::vector<GPoly>& G,
                              const MonomialOrder& ord) {
  std::vector<Term> done;  // irreducible head terms, descending
  while (!p.empty()) {
    const GPoly* red = nullptr;
    for (const GPoly& g : G) {
      if (g.lead().divides(p.front().mono)) {
        red = &g;
        break;
      }
    }
    if (red == nullptr) {
      done.push_back(std::move(p.front()));
      p.erase(p.begin());
      continue;
    }
    Monomial q = red->lead().divide_into(p.front().mono);
    mpq_class c = p.front().coeff / red->lc();
    p = subtract_scaled(p, c, q, red->t, ord);
  }
  return done;
}

/* Integer coefficients with content 1 and positive leading coefficient. */
void make_primitive(std::vector<Term>& t) {
  if (t.empty()) return;
  mpz_class den = 1;
  for (const Term& tm : t) den = lcm(den, tm.coeff.get_den());
  mpz_class num = 0;
  for (const Term& tm : t) {
    num = gcd(num, mpz_class(tm.coeff.get_num() * (den / tm.coeff.get_den())));
  }
  mpq_class scale(den, num);
  scale.canonicalize();
  if (t.front().coeff < 0) scale = -scale;
  for (Term& tm : t) tm.coeff *= scale;
}

std::vector<Term> s_polynomial(const GPoly& f, const GPoly& g,
                               const MonomialOrder& ord) {
  Monomial m = Monomial::lcm(f.lead(), g.lead());
  Monomial qf = f.lead().divide_into(m);
  mpq_class inv = 1 / f.lc();
  std::vector<Term> a;
  a.reserve(f.t.size());
  for (const Term& tm : f.t) a.push_back({qf * tm.mono, tm.coeff * inv});
  return subtract_scaled(a, 1 / g.lc(), g.lead().divide_into(m), g.t, ord);
}

struct SPair {
  int i = 0, j = 0;  // i < j
  Monomial lcm;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const MonomialOrder& order) {
  if (generators.empty()) {
    GroebnerBasis empty;
    empty.order = order;
    return empty;
  }
  const VariableSpace space = generators.front().space();

  std::vector<GPoly> G;
  for (const Polynomial& p : generators) {
    if (p.space() != space)
      throw std::invalid_argument("buchberger: mixed variable spaces");
    if (p.is_zero()) continue;
    GPoly g = to_gpoly(p, order);
    make_primitive(g.t);
    G.push_back(std::move(g));
  }

  std::vector<SPair> pending;
  std::set<std::pair<int, int>> pending_idx;
  auto push_pairs_for = [&](int t) {
    for (int i = 0; i < t; ++i) {
      pending.push_back({i, t, Monomial::lcm(G[i].lead(), G[t].lead())});
      pending_idx.insert({i, t});
    }
  };
  for (int t = 1; t < static_cast<int>(G.size()); ++t) push_pairs_for(t);

  while (!pending.empty()) {
    auto it = std::min_element(
        pending.begin(), pending.end(), [&](const SPair& a, const SPair& b) {
          int c = order.compare(a.lcm, b.lcm);
          if (c != 0) return c < 0;
          return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        });
    SPair pr = std::move(*it);
    pending.erase(it);
    pending_idx.erase({pr.i, pr.j});

    if (G[pr.i].lead().coprime(G[pr.j].lead())) continue;

    /* Chain criterion: some other lead divides the pair lcm and both
     * connecting pairs were already handled. */
    auto handled = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      return pending_idx.find({a, b}) == pending_idx.end();
    };
    bool chained = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (G[k].lead().divides(pr.lcm) && handled(pr.i, k) && handled(pr.j, k))
        chained = true;
    }
    if (chained) continue;

    std::vector<Term> r =
        reduce_full(s_polynomial(G[pr.i], G[pr.j], order), G, order);
    if (r.empty()) continue;
    make_primitive(r);
    int t = static_cast<int>(G.size());
    G.push_back(GPoly{std::move(r)});
    push_pairs_for(t);
  }

  /* Minimal basis: keep only leads not divisible by another kept lead. */
  std::vector<int> by_lead(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) by_lead[i] = static_cast<int>(i);
  std::sort(by_lead.begin(), by_lead.end(), [&](int a, int b) {
    int c = order.compare(G[a].lead(), G[b].lead());
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<GPoly> kept;
  for (int idx : by_lead) {
    bool dominated = false;
    for (const GPoly& k : kept) {
      if (k.lead().divides(G[idx].lead())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(G[idx]));
  }

  /* Tail reduction; leads are pairwise non-dividing so each survives. */
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<GPoly> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    if (!others.empty()) kept[i].t = reduce_full(std::move(kept[i].t), others, order);
  }

  GroebnerBasis out;
  out.space = space;
  out.order = order;
  for (GPoly& g : kept) {
    mpq_class inv = 1 / g.lc();
    for (Term& tm : g.t) tm.coeff *= inv;
    out.leads.push_back(g.lead());
    out.polys.push_back(Polynomial::from_terms(space, std::move(g.t)));
  }
  return out;
}

namespace {

std::vector<GPoly> working_basis(const GroebnerBasis& G) {
  std::vector<GPoly> W;
  W.reserve(G.polys.size());
  for (const Polynomial& p : G.polys) W.push_back(to_gpoly(p, G.order));
  return W;
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
  if (G.polys.empty() || p.is_zero()) return p;
  if (p.space() != G.space)
    throw std::invalid_argument("normal_form: variable space mismatch");
  GPoly q = to_gpoly(p, G.order);
  std::vector<Term> r = reduce_full(std::move(q.t), working_basis(G), G.order);
  return Polynomial::from_terms(G.space, std::move(r));
}

namespace {

/* Exponent caps from the pure-power leads; nullopt when some variable has
 * none (infinite quotient). An empty optional vector is also returned via
 * the caller for the unit ideal. */
std::optional<std::vector<int>> power_bounds(const GroebnerBasis& G) {
  int nv = G.space.total();
  std::vector<int> bound(nv, -1);
  for (const Monomial& m : G.leads) {
    for (int v = 0; v < nv; ++v) {
      if (m.exp(v) == m.degree() && m.degree() > 0) {
        if (bound[v] < 0 || m.exp(v) < bound[v]) bound[v] = m.exp(v);
      }
    }
  }
  for (int v = 0; v < nv; ++v) {
    if (bound[v] < 0) return std::nullopt;
  }
  return bound;
}

bool unit_ideal(const GroebnerBasis& G) {
  for (const Monomial& m : G.leads) {
    if (m.is_one()) return true;
  }
  return false;
}

void enumerate_standard(const GroebnerBasis& G, const std::vector<int>& bound,
                        const std::function<void(const Monomial&)>& emit) {
  int nv = G.space.total();
  Monomial cur(nv);
  std::function<void(int)> walk = [&](int v) {
    if (v == nv) {
      for (const Monomial& m : G.leads) {
        if (m.divides(cur)) return;
      }
      emit(cur);
      return;
    }
    for (int e = 0; e < bound[v]; ++e) {
      cur.set_exp(v, e);
      walk(v + 1);
    }
    cur.set_exp(v, 0);
  };
  walk(0);
}

}  // namespace

std::optional<long long> quotient_dimension(const GroebnerBasis& G) {
  if (unit_ideal(G)) return 0;
  if (G.space.total() == 0) return 1;  // zero ideal in the constants
  auto bound = power_bounds(G);
  if (!bound) return std::nullopt;
  long long count = 0;
  enumerate_standard(G, *bound, [&](const Monomial&) { ++count; });
  return count;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& G) {
  if (unit_ideal(G)) return {};
  if (G.space.total() == 0) return {Monomial(0)};
  auto bound = power_bounds(G);
  if (!bound)
    throw std::domain_error("standard_monomials: infinite-dimensional quotient");
  std::vector<Monomial> out;
  enumerate_standard(G, *bound, [&](const Monomial& m) { out.push_back(m); });
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return G.order.compare(a, b) < 0;
  });
  return out;
}

bool ideal_equality(const std::vector<Polynomial>& A,
                    const std::vector<Polynomial>& B,
                    const MonomialOrder& order) {
  auto all_zero = [](const std::vector<Polynomial>& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
  };
  if (A.empty() || all_zero(A)) return B.empty() || all_zero(B);
  if (B.empty() || all_zero(B)) return false;
  GroebnerBasis GA = buchberger(A, order);
  GroebnerBasis GB = buchberger(B, order);
  for (const Polynomial& b : B) {
    if (!normal_form(b, GA).is_zero()) return false;
  }
  for (const Polynomial& a : A) {
    if (!normal_form(a, GB).is_zero()) return false;
  }
  return true;
}

namespace {

/* u_j and t_k to the seeded prime tuple, x kept; results live in the x-only
 * space with identically-zero images dropped. */
std::vector<Polynomial> specialize_to_primes(const IdealPresentation& I,
                                             const std::vector<mpq_class>& vals,
                                             const VariableSpace& target) {
  int l = I.space.u_arity;
  std::vector<Polynomial> gens;
  for (const Generator& g : I.generators) {
    Polynomial q = g.poly.substituted(target, [&](int v) {
      char fam = I.space.family(v);
      int idx = I.space.family_index(v);
      if (fam == 'x') return Polynomial::variable(target, target.x_var(idx));
      if (fam == 'u') return Polynomial::constant(target, vals[idx - 1]);
      return Polynomial::constant(target, vals[l + idx - 1]);
    });
    if (!q.is_zero()) gens.push_back(std::move(q));
  }
  return gens;
}

mpq_class eval_monomial(const Monomial& m, const std::vector<mpq_class>& point) {
  mpq_class r = 1;
  for (int v = 0; v < m.nvars(); ++v) {
    for (int e = 0; e < m.exp(v); ++e) r *= point[v];
  }
  return r;
}

}  // namespace

std::optional<long long> generic_rank(const IdealPresentation& I,
                                      std::uint64_t seed, OrderKind kind) {
  auto vals = seeded_prime_values(seed, I.space.u_arity + I.space.t_arity);
  VariableSpace target{I.space.x_arity, 0, 0};
  std::vector<Polynomial> gens = specialize_to_primes(I, vals, target);
  if (gens.empty()) {
    if (target.total() == 0) return 1;
    return std::nullopt;
  }
  GroebnerBasis G = buchberger(gens, MonomialOrder::of_kind(kind, target));
  return quotient_dimension(G);
}

RankRun verified_generic_rank(const IdealPresentation& I, std::uint64_t seed,
                              int retries, OrderKind kind) {
  if (retries < 1)
    throw std::invalid_argument("verified_generic_rank: retries must be >= 1");
  for (int a = 0; a < retries; ++a) {
    std::uint64_t sa = seed + 2 * static_cast<std::uint64_t>(a);
    std::uint64_t sb = sa + 1;
    auto ra = generic_rank(I, sa, kind);
    auto rb = generic_rank(I, sb, kind);
    if (ra && rb && *ra == *rb) return {*ra, sa, sb, a + 1};
  }
  throw DegenerateSpecialization(
      "generic rank: seeded specializations stayed degenerate or disagreed "
      "after " +
      std::to_string(retries) + " attempt(s)");
}

BasisRun generic_standard_basis(const IdealPresentation& I, std::uint64_t seed,
                                int retries, OrderKind kind) {
  if (retries < 1)
    throw std::invalid_argument("generic_standard_basis: retries must be >= 1");
  VariableSpace target{I.space.x_arity, 0, 0};
  for (int a = 0; a < retries; ++a) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(a);
    auto vals = seeded_prime_values(s, I.space.u_arity + I.space.t_arity);
    std::vector<Polynomial> gens = specialize_to_primes(I, vals, target);
    if (gens.empty()) {
      if (target.total() > 0) continue;  // zero ideal, infinite quotient
      return {{Monomial(0)}, target, s, a + 1};
    }
    GroebnerBasis G = buchberger(gens, MonomialOrder::of_kind(kind, target));
    if (!quotient_dimension(G)) continue;
    return {standard_monomials(G), target, s, a + 1};
  }
  throw DegenerateSpecialization(
      "standard basis: quotient stayed infinite-dimensional after " +
      std::to_string(retries) + " attempt(s)");
}

InjectivityRun localization_injectivity(const Partition& lambda,
                                        std::uint64_t seed, int retries) {
  if (retries < 1)
    throw std::invalid_argument("localization_injectivity: retries must be >= 1");
  const IdealPresentation I = equivariant_k_ideal(lambda);
  const long long m = static_cast<long long>(lambda.multinomial().get_ui());
  const int n = lambda.n();
  VariableSpace target{n, 0, 0};

  for (int a = 0; a < retries; ++a) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(a);
    auto vals = seeded_prime_values(s, I.space.u_arity);
    std::vector<Polynomial> gens = specialize_to_primes(I, vals, target);
    if (gens.empty()) continue;
    GroebnerBasis G = buchberger(gens, MonomialOrder::grevlex(target));
    auto dim = quotient_dimension(G);
    if (!dim || *dim != m) continue;
    std::vector<Monomial> mons = standard_monomials(G);
    std::vector<Word> fps = fixed_points(lambda);

    std::vector<std::vector<mpq_class>> M(
        mons.size(), std::vector<mpq_class>(fps.size()));
    for (std::size_t c = 0; c < fps.size(); ++c) {
      std::vector<mpq_class> point(n);
      for (int i = 1; i <= n; ++i) {
        point[target.x_var(i)] = vals[lambda.block_of(fps[c][i - 1]) - 1];
      }
      for (std::size_t r = 0; r < mons.size(); ++r) {
        M[r][c] = eval_monomial(mons[r], point);
      }
    }
    long long rank = matrix_rank_fraction_free(std::move(M));
    return {rank == m, rank, m, s, a + 1};
  }
  throw DegenerateSpecialization(
      "localization matrix: no specialization with the full standard-monomial "
      "count after " +
      std::to_string(retries) + " attempt(s)");
}

long long matrix_rank_fraction_free(std::vector<std::vector<mpq_class>> M) {
  if (M.empty() || M.front().empty()) return 0;
  const std::size_t rows = M.size(), cols = M.front().size();
  std::vector<std::vector<mpz_class>> A(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class den = 1;
    for (std::size_t c = 0; c < cols; ++c) den = lcm(den, M[r][c].get_den());
    for (std::size_t c = 0; c < cols; ++c) {
      A[r][c] = M[r][c].get_num() * (den / M[r][c].get_den());
    }
  }

  mpz_class prev = 1;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
    std::size_t sel = pr;
    while (sel < rows && A[sel][pc] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(A[sel], A[pr]);
    for (std::size_t r = pr + 1; r < rows; ++r) {
      for (std::size_t c = pc + 1; c < cols; ++c) {
        mpz_class num = A[r][c] * A[pr][pc] - A[r][pc] * A[pr][c];
        mpz_divexact(A[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      A[r][pc] = 0;
    }
    prev = A[pr][pc];
    ++pr;
  }
  return static_cast<long long>(pr);
}

}  // namespace springer
