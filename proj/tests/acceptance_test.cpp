// End-to-end acceptance run. Each numbered criterion prints one PASS/FAIL
// line; the process exits nonzero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "springer/fixed_points.hpp"
#include "springer/groebner.hpp"
#include "springer/numeric.hpp"
#include "springer/partition.hpp"
#include "springer/presentations.hpp"
#include "springer/symmetric.hpp"
#include "springer/verify.hpp"

using springer::CheckResult;
using springer::Partition;
using springer::partitions_of;
using springer::run_suite;
using springer::VerifyOptions;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& what,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::printf("[%s] criterion %d: %s (%lld ms)\n", ok ? "PASS" : "FAIL", num,
              what.c_str(), static_cast<long long>(ms));
  if (!ok) {
    ++g_failures;
    if (!detail.empty()) std::printf("       %s\n", detail.c_str());
  }
  std::fflush(stdout);
}

bool suites_pass(const std::vector<CheckResult>& results,
                 const std::string& only_check, std::string& detail) {
  bool any = false;
  for (const CheckResult& r : results) {
    if (!only_check.empty() && r.check != only_check) continue;
    any = true;
    if (!r.pass) {
      detail = r.check + " lambda=" +
               (r.lambda ? r.lambda->to_string() : std::string("-")) +
               " got=" + r.got +
               (r.detail.empty() ? "" : " [" + r.detail + "]");
      return false;
    }
  }
  if (!any) {
    detail = "no check named " + only_check + " was produced";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  const VerifyOptions opt;  // seed 17, three retries, graded order

  criterion(1, "generic quotient rank equals the fixed point count", [&](std::string& d) {
    auto deadline_small = std::chrono::minutes(5);
    auto deadline_large = std::chrono::minutes(15);
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 1; n <= 5; ++n) {
      for (const Partition& lam : partitions_of(n)) {
        auto run = springer::verified_generic_rank(
            springer::equivariant_k_ideal(lam), opt.seed, opt.retries);
        if (mpz_class(static_cast<long>(run.rank)) != lam.multinomial()) {
          d = "lambda=" + lam.to_string() + " rank=" + std::to_string(run.rank);
          return false;
        }
      }
    }
    if (std::chrono::steady_clock::now() - t0 > deadline_small) {
      d = "small sweep exceeded 5 minutes";
      return false;
    }
    auto t1 = std::chrono::steady_clock::now();
    for (const Partition& lam :
         {Partition({6}), Partition({5, 1}), Partition({4, 2}),
          Partition({3, 3}), Partition({2, 2, 2}), Partition({3, 2, 1})}) {
      auto run = springer::verified_generic_rank(
          springer::equivariant_k_ideal(lam), opt.seed, opt.retries);
      if (mpz_class(static_cast<long>(run.rank)) != lam.multinomial()) {
        d = "lambda=" + lam.to_string() + " rank=" + std::to_string(run.rank);
        return false;
      }
    }
    if (std::chrono::steady_clock::now() - t1 > deadline_large) {
      d = "six-box sweep exceeded 15 minutes";
      return false;
    }
    return true;
  });

  criterion(2, "conjugate partition and its part-count profile", [&](std::string& d) {
    Partition lam({5, 4, 4, 2, 2, 2, 1});
    Partition dual = lam.dual();
    if (dual.parts() != std::vector<int>{7, 6, 3, 3, 1}) {
      d = "dual=" + dual.to_string();
      return false;
    }
    std::vector<long long> tail{1, 4, 7, 13, 20};
    for (int s = 1; s <= 15; ++s)
      if (dual.p_value(s) != 0) {
        d = "p(" + std::to_string(s) + ") != 0";
        return false;
      }
    for (int s = 16; s <= 20; ++s)
      if (dual.p_value(s) != tail[s - 16]) {
        d = "p(" + std::to_string(s) + ") = " + std::to_string(dual.p_value(s));
        return false;
      }
    return true;
  });

  criterion(3, "every relation restricts to zero at every fixed point", [&](std::string& d) {
    for (int n = 1; n <= 6; ++n)
      for (const Partition& lam : partitions_of(n)) {
        auto rep = springer::generators_vanish_check(lam);
        if (!rep.pass) {
          d = "lambda=" + lam.to_string() + " " +
              (rep.violations.empty() ? "" : rep.violations.front());
          return false;
        }
      }
    return true;
  });

  criterion(4, "restriction to the fixed points is injective", [&](std::string& d) {
    for (int n = 1; n <= 5; ++n)
      for (const Partition& lam : partitions_of(n)) {
        auto run = springer::localization_injectivity(lam, opt.seed, opt.retries);
        if (!run.injective) {
          d = "lambda=" + lam.to_string() + " rank=" +
              std::to_string(run.matrix_rank) + "/" + std::to_string(run.m);
          return false;
        }
      }
    return true;
  });

  criterion(5, "full-flag stratum reproduces the coinvariant presentation", [&](std::string& d) {
    for (int n = 1; n <= 4; ++n) {
      std::vector<int> ones(static_cast<std::size_t>(n), 1);
      auto results = run_suite(Partition(ones), "flag-consistency", opt);
      if (!suites_pass(results, "", d)) return false;
    }
    return true;
  });

  criterion(6, "condensed and expanded relation forms agree", [&](std::string& d) {
    for (int n = 1; n <= 5; ++n)
      for (const Partition& lam : partitions_of(n)) {
        auto results = run_suite(lam, "identities", opt);
        if (!suites_pass(results, "compact_equivalence", d)) return false;
        if (!suites_pass(results, "window_vanishing", d)) return false;
      }
    return true;
  });

  criterion(7, "setting the parameters to one recovers the ordinary relations", [&](std::string& d) {
    for (int n = 1; n <= 5; ++n)
      for (const Partition& lam : partitions_of(n)) {
        auto results = run_suite(lam, "specialize", opt);
        if (!suites_pass(results, "ordinary_limit", d)) return false;
      }
    for (int s = 1; s <= 8; ++s)
      for (int dd = 1; dd <= s; ++dd)
        for (int k = 0; k <= dd; ++k)
          for (int q = std::max(1, s + 1 - dd); q <= 8; ++q)
            if (!springer::binomial_specialization_check(s, dd, k, q)) {
              d = "s=" + std::to_string(s) + " d=" + std::to_string(dd) +
                  " k=" + std::to_string(k) + " q=" + std::to_string(q);
              return false;
            }
    return true;
  });

  criterion(8, "setting the parameters to zero recovers the classical relations", [&](std::string& d) {
    for (int n = 1; n <= 5; ++n)
      for (const Partition& lam : partitions_of(n)) {
        auto results = run_suite(lam, "specialize", opt);
        if (!suites_pass(results, "classical_limit", d)) return false;
        if (!suites_pass(results, "generic_rank[ClassicalCoh]", d)) return false;
      }
    return true;
  });

  criterion(9, "relations are series coefficients of the defining fraction", [&](std::string& d) {
    for (int n = 1; n <= 4; ++n)
      for (const Partition& lam : partitions_of(n)) {
        auto results = run_suite(lam, "powerseries", opt);
        if (!suites_pass(results, "series_coefficient_match", d)) return false;
      }
    return true;
  });

  criterion(10, "the symmetric group action commutes with restriction", [&](std::string& d) {
    for (int n = 1; n <= 4; ++n)
      for (const Partition& lam : partitions_of(n)) {
        auto results = run_suite(lam, "equivariance", opt);
        if (!suites_pass(results, "", d)) return false;
        if (lam.length() == lam.n() &&
            !suites_pass(results, "regular_action_form", d))
          return false;
      }
    return true;
  });

  criterion(11, "the one-past-the-end relation vanishes identically", [&](std::string& d) {
    for (int n = 1; n <= 5; ++n)
      for (const Partition& lam : partitions_of(n)) {
        auto results = run_suite(lam, "powerseries", opt);
        if (!suites_pass(results, "truncation_zero", d)) return false;
      }
    return true;
  });

  if (g_failures == 0) {
    std::printf("acceptance: all 11 criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
