#include "springer/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "springer/fixed_points.hpp"
#include "springer/numeric.hpp"
#include "springer/presentations.hpp"
#include "springer/symmetric.hpp"

namespace springer {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

CheckResult timed(const std::string& suite, const std::string& check,
                  const Partition& lambda,
                  const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.suite = suite;
  r.check = check;
  r.lambda = lambda;
  Clock::time_point t0 = Clock::now();
  body(r);
  r.elapsed_ms = ms_since(t0);
  return r;
}

void from_report(CheckResult& r, const CheckReport& rep) {
  r.expected = "0 violations";
  r.got = std::to_string(rep.violations.size()) + " violations in " +
          std::to_string(rep.checks) + " checks";
  r.pass = rep.pass;
  if (!rep.violations.empty()) r.detail = rep.violations.front();
}

// ---- gkm ------------------------------------------------------------------

void suite_gkm(const Partition& lambda, const VerifyOptions& opt,
               std::vector<CheckResult>& out) {
  out.push_back(timed("gkm", "generators_vanish", lambda, [&](CheckResult& r) {
    from_report(r, generators_vanish_check(lambda));
  }));
  out.push_back(
      timed("gkm", "localization_injectivity", lambda, [&](CheckResult& r) {
        InjectivityRun run =
            localization_injectivity(lambda, opt.seed, opt.retries);
        r.expected = "rank " + std::to_string(run.m);
        r.got = "rank " + std::to_string(run.matrix_rank);
        r.seed = run.seed_used;
        r.pass = run.injective;
        if (!r.pass)
          r.detail = "restriction matrix is rank-deficient at seed " +
                     std::to_string(run.seed_used);
      }));
}

// ---- rank -----------------------------------------------------------------

void rank_check(const std::string& suite, const Partition& lambda,
                const IdealPresentation& I, const mpz_class& expected,
                const VerifyOptions& opt, std::vector<CheckResult>& out) {
  std::string name = "generic_rank[" + std::string(flavor_name(I.flavor)) + "]";
  out.push_back(timed(suite, name, lambda, [&](CheckResult& r) {
    RankRun run = verified_generic_rank(I, opt.seed, opt.retries, opt.order);
    r.expected = expected.get_str();
    r.got = std::to_string(run.rank);
    r.seed = run.seed_a;
    r.pass = mpz_class(static_cast<long>(run.rank)) == expected;
    if (!r.pass)
      r.detail = "agreeing seeds " + std::to_string(run.seed_a) + "," +
                 std::to_string(run.seed_b) + " gave rank " + r.got;
  }));
}

void suite_rank(const Partition& lambda, const VerifyOptions& opt,
                std::vector<CheckResult>& out) {
  const mpz_class m = lambda.multinomial();
  rank_check("rank", lambda, equivariant_k_ideal(lambda), m, opt, out);
  rank_check("rank", lambda, equivariant_cohomology_ideal(lambda), m, opt, out);
  rank_check("rank", lambda, ordinary_k_ideal(lambda), m, opt, out);
}

// ---- equivariance ---------------------------------------------------------

void suite_equivariance(const Partition& lambda, const VerifyOptions& opt,
                        std::vector<CheckResult>& out) {
  (void)opt;
  out.push_back(timed("equivariance", "action_commutes", lambda,
                      [&](CheckResult& r) {
                        from_report(r, equivariance_check(lambda));
                      }));
  out.push_back(timed(
      "equivariance", "representative_projection", lambda, [&](CheckResult& r) {
        const int n = lambda.n();
        bool regular = lambda.length() == n;  // all parts 1
        long long checks = 0, violations = 0;
        std::string first;
        Word w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        do {
          Word rep = coset_representative(lambda, w);
          ++checks;
          bool ok = is_fixed_point(lambda, rep) &&
                    coset_representative(lambda, rep) == rep &&
                    (!regular || rep == w);
          if (!ok) {
            ++violations;
            if (first.empty())
              first = "w=" + word_to_string(w) + " rep=" + word_to_string(rep);
          }
        } while (std::next_permutation(w.begin(), w.end()));
        r.expected = "0 violations";
        r.got = std::to_string(violations) + " violations in " +
                std::to_string(checks) + " checks";
        r.pass = violations == 0;
        r.detail = first;
      }));
  if (lambda.length() == lambda.n()) {
    out.push_back(timed(
        "equivariance", "regular_action_form", lambda, [&](CheckResult& r) {
          /* On the full-flag stratum every word is fixed, so the tuple action
           * must be (v.f)(w) = f(w o v) on the nose. */
          const std::vector<Word> fps = fixed_points(lambda);
          const VariableSpace uspace{0, lambda.length(), 0};
          std::vector<Polynomial> f;
          for (std::size_t k = 0; k < fps.size(); ++k)
            f.push_back(Polynomial::constant(uspace, mpq_class(static_cast<long>(k))));
          auto locate = [&](const Word& w) {
            return static_cast<std::size_t>(
                std::lower_bound(fps.begin(), fps.end(), w) - fps.begin());
          };
          long long checks = 0, violations = 0;
          std::string first;
          for (const Word& v : fps) {
            std::vector<Polynomial> acted = sn_act_tuple(lambda, v, f);
            for (const Word& w : fps) {
              ++checks;
              if (!(acted[locate(w)] == f[locate(compose(w, v))])) {
                ++violations;
                if (first.empty())
                  first = "v=" + word_to_string(v) + " w=" + word_to_string(w);
              }
            }
          }
          r.expected = "0 violations";
          r.got = std::to_string(violations) + " violations in " +
                  std::to_string(checks) + " checks";
          r.pass = violations == 0;
          r.detail = first;
        }));
  }
}

// ---- specialize -----------------------------------------------------------

void suite_specialize(const Partition& lambda, const VerifyOptions& opt,
                      std::vector<CheckResult>& out) {
  const int l = lambda.length();
  out.push_back(
      timed("specialize", "ordinary_limit", lambda, [&](CheckResult& r) {
        IdealPresentation at_one = specialize_ideal(
            equivariant_k_ideal(lambda), Specialization::all_to(1, l));
        IdealPresentation ord = ordinary_k_ideal(lambda);
        MonomialOrder o = MonomialOrder::of_kind(opt.order, ord.space);
        bool equal = ideal_equality(at_one.polys(), ord.polys(), o);
        r.expected = "equal ideals";
        r.got = equal ? "equal ideals" : "different ideals";
        r.pass = equal;
        if (!equal) r.detail = "u->1 image of the K-ideal differs from OrdK";
      }));
  out.push_back(
      timed("specialize", "classical_limit", lambda, [&](CheckResult& r) {
        IdealPresentation at_zero = specialize_ideal(
            equivariant_cohomology_ideal(lambda), Specialization::all_to(0, l));
        IdealPresentation cls = classical_tanisaki_ideal(lambda);
        bool same = at_zero.generators.size() == cls.generators.size();
        std::string first;
        if (same) {
          for (std::size_t i = 0; i < cls.generators.size(); ++i) {
            const Generator& a = at_zero.generators[i];
            const Generator& b = cls.generators[i];
            if (a.index == b.index && a.poly == b.poly) continue;
            same = false;
            first = "mismatch at s=" + std::to_string(b.index.s) +
                    " d=" + std::to_string(b.index.d);
            break;
          }
        } else {
          first = "generator counts differ: " +
                  std::to_string(at_zero.generators.size()) + " vs " +
                  std::to_string(cls.generators.size());
        }
        r.expected = "generator-wise equality";
        r.got = same ? "generator-wise equality" : "mismatch";
        r.pass = same;
        r.detail = first;
      }));
  rank_check("specialize", lambda, classical_tanisaki_ideal(lambda),
             lambda.multinomial(), opt, out);
}

// ---- powerseries ----------------------------------------------------------

void suite_powerseries(const Partition& lambda, const VerifyOptions& opt,
                       std::vector<CheckResult>& out) {
  (void)opt;
  const IdealPresentation I = equivariant_k_ideal(lambda);
  const std::vector<int> phi = lambda.phi_sequence();
  out.push_back(timed(
      "powerseries", "series_coefficient_match", lambda, [&](CheckResult& r) {
        long long checks = 0, mismatches = 0;
        std::string first;
        for (const Generator& g : I.generators) {
          std::vector<Polynomial> A, B;
          for (int i : g.index.subset)
            A.push_back(Polynomial::variable(I.space, I.space.x_var(i)));
          for (int j = 0; j < g.index.s + 1 - g.index.d; ++j)
            B.push_back(Polynomial::variable(I.space, I.space.u_var(phi[j])));
          Polynomial via_series = series_coefficient(A, B, g.index.d, I.space);
          ++checks;
          if (!(via_series == g.poly)) {
            ++mismatches;
            if (first.empty())
              first = "s=" + std::to_string(g.index.s) +
                      " d=" + std::to_string(g.index.d);
          }
        }
        r.expected = "0 mismatches";
        r.got = std::to_string(mismatches) + " mismatches in " +
                std::to_string(checks) + " checks";
        r.pass = mismatches == 0;
        r.detail = first;
      }));
  out.push_back(
      timed("powerseries", "truncation_zero", lambda, [&](CheckResult& r) {
        long long checks = 0, nonzero = 0;
        std::string first;
        const int n = lambda.n();
        for (int s = 1; s <= n; ++s) {
          std::vector<int> subset(s);
          for (int i = 0; i < s; ++i) subset[i] = i + 1;
          while (true) {
            std::vector<Polynomial> A;
            for (int i : subset)
              A.push_back(Polynomial::variable(I.space, I.space.x_var(i)));
            Polynomial beyond = alternating_eh_sum(I.space, A, {}, s + 1);
            Polynomial via_series = series_coefficient(A, {}, s + 1, I.space);
            ++checks;
            if (!beyond.is_zero() || !via_series.is_zero()) {
              ++nonzero;
              if (first.empty())
                first = "s=" + std::to_string(s) + " d=" + std::to_string(s + 1);
            }
            int i = s - 1;
            while (i >= 0 && subset[i] == n - s + i + 1) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < s; ++j) subset[j] = subset[j - 1] + 1;
          }
        }
        r.expected = "0 nonzero truncations";
        r.got = std::to_string(nonzero) + " nonzero in " +
                std::to_string(checks) + " checks";
        r.pass = nonzero == 0;
        r.detail = first;
      }));
}

// ---- identities -----------------------------------------------------------

void suite_identities(const Partition& lambda, const VerifyOptions& opt,
                      std::vector<CheckResult>& out) {
  (void)opt;
  out.push_back(
      timed("identities", "compact_equivalence", lambda, [&](CheckResult& r) {
        IdealPresentation plain = equivariant_k_ideal(lambda);
        IdealPresentation compact = equivariant_k_ideal_compact(lambda);
        bool same = plain.generators.size() == compact.generators.size() &&
                    plain.dropped == compact.dropped;
        std::string first;
        if (same) {
          for (std::size_t i = 0; i < plain.generators.size(); ++i) {
            if (plain.generators[i].index == compact.generators[i].index &&
                plain.generators[i].poly == compact.generators[i].poly)
              continue;
            same = false;
            first = "mismatch at s=" +
                    std::to_string(plain.generators[i].index.s) +
                    " d=" + std::to_string(plain.generators[i].index.d);
            break;
          }
        } else {
          first = "generator counts differ";
        }
        r.expected = "identical generator lists";
        r.got = same ? "identical generator lists" : "mismatch";
        r.pass = same;
        r.detail = first;
      }));
  out.push_back(
      timed("identities", "window_vanishing", lambda, [&](CheckResult& r) {
        long long checks = 0, failures = 0;
        std::string first;
        const Partition dualp = lambda.dual();
        for (int s = 1; s <= lambda.n(); ++s) {
          int q = dualp.p_value(s);
          for (int d = std::max(1, s + 1 - q); d <= s; ++d) {
            VanishingIdentityResult v = vanishing_identity_check(lambda, s, d);
            ++checks;
            if (!v.is_zero) {
              ++failures;
              if (first.empty())
                first = "s=" + std::to_string(s) + " d=" + std::to_string(d) +
                        " sum=" + v.sum.to_text();
            }
          }
        }
        r.expected = "0 failures";
        r.got = std::to_string(failures) + " failures in " +
                std::to_string(checks) + " checks";
        r.pass = failures == 0;
        r.detail = first;
      }));
  out.push_back(
      timed("identities", "binomial_identities", lambda, [&](CheckResult& r) {
        long long checks = 0, failures = 0;
        std::string first;
        for (int s = 1; s <= 8; ++s) {
          for (int d = 1; d <= s; ++d) {
            for (int k = 0; k <= d; ++k) {
              for (int q = std::max(1, s + 1 - d); q <= 8; ++q) {
                ++checks;
                if (!binomial_specialization_check(s, d, k, q)) {
                  ++failures;
                  if (first.empty())
                    first = "s=" + std::to_string(s) + " d=" + std::to_string(d) +
                            " k=" + std::to_string(k) + " q=" + std::to_string(q);
                }
              }
            }
          }
        }
        r.expected = "0 failures";
        r.got = std::to_string(failures) + " failures in " +
                std::to_string(checks) + " checks";
        r.pass = failures == 0;
        r.detail = first;
      }));
}

// ---- flag-consistency -------------------------------------------------------

void suite_flag(const Partition& lambda, const VerifyOptions& opt,
                std::vector<CheckResult>& out) {
  const int n = lambda.n();
  out.push_back(timed(
      "flag-consistency", "flag_ideal_equality", lambda, [&](CheckResult& r) {
        Partition ones(std::vector<int>(n, 1));
        IdealPresentation renamed = specialize_ideal(
            equivariant_k_ideal(ones), Specialization::rename_to_t(n));
        IdealPresentation flag = flag_ideal(n);
        MonomialOrder o = MonomialOrder::of_kind(opt.order, flag.space);
        bool equal = ideal_equality(renamed.polys(), flag.polys(), o);
        r.expected = "equal ideals";
        r.got = equal ? "equal ideals" : "different ideals";
        r.pass = equal;
        if (!equal)
          r.detail = "column ideal (u renamed to t) differs from the flag ideal";
      }));
  out.push_back(timed("flag-consistency", "flag_rank", lambda,
                      [&](CheckResult& r) {
                        RankRun run = verified_generic_rank(
                            flag_ideal(n), opt.seed, opt.retries, opt.order);
                        mpz_class expected = factorial(n);
                        r.expected = expected.get_str();
                        r.got = std::to_string(run.rank);
                        r.seed = run.seed_a;
                        r.pass = mpz_class(static_cast<long>(run.rank)) == expected;
                      }));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "gkm",        "rank",       "equivariance",    "specialize",
      "powerseries", "identities", "flag-consistency"};
  return names;
}

bool is_suite_name(const std::string& name) {
  if (name == "all") return true;
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckResult> run_suite(const Partition& lambda,
                                   const std::string& suite,
                                   const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  auto dispatch = [&](const std::string& s) {
    if (s == "gkm") suite_gkm(lambda, opt, out);
    else if (s == "rank") suite_rank(lambda, opt, out);
    else if (s == "equivariance") suite_equivariance(lambda, opt, out);
    else if (s == "specialize") suite_specialize(lambda, opt, out);
    else if (s == "powerseries") suite_powerseries(lambda, opt, out);
    else if (s == "identities") suite_identities(lambda, opt, out);
    else if (s == "flag-consistency") suite_flag(lambda, opt, out);
    else throw std::invalid_argument("unknown suite: " + s);
  };
  if (suite == "all") {
    for (const std::string& s : suite_names()) dispatch(s);
  } else {
    dispatch(suite);
  }
  return out;
}

}  // namespace springer
