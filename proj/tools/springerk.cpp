#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "springer/fixed_points.hpp"
#include "springer/groebner.hpp"
#include "springer/json_io.hpp"
#include "springer/numeric.hpp"
#include "springer/partition.hpp"
#include "springer/presentations.hpp"
#include "springer/verify.hpp"

namespace {

using springer::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

struct RunConfig {
  std::string lambda_text;
  std::string flavor = "EqK";
  std::uint64_t seed = 17;
  std::string order = "grevlex";
  std::string format = "text";
  int retries = 3;
  bool timings = false;
  std::string suite = "all";
  std::string expect;
};

springer::OrderKind order_kind(const RunConfig& cfg) {
  return cfg.order == "lex" ? springer::OrderKind::Lex
                            : springer::OrderKind::Grevlex;
}

springer::Partition parse_lambda(const RunConfig& cfg) {
  bool reordered = false;
  springer::Partition lambda = springer::Partition::canonicalized(
      springer::Partition::parse_parts(cfg.lambda_text), &reordered);
  if (reordered) {
    std::cerr << "note: lambda reordered to " << lambda.to_string() << "\n";
  }
  return lambda;
}

springer::IdealPresentation ideal_for(const RunConfig& cfg,
                                      const springer::Partition& lambda) {
  auto parsed = springer::flavor_from_name(cfg.flavor);
  if (!parsed) throw std::invalid_argument("unknown flavor: " + cfg.flavor);
  switch (*parsed) {
    case springer::Flavor::EqK:
      return springer::equivariant_k_ideal(lambda);
    case springer::Flavor::EqKCompact:
      return springer::equivariant_k_ideal_compact(lambda);
    case springer::Flavor::EqCoh:
      return springer::equivariant_cohomology_ideal(lambda);
    case springer::Flavor::OrdK:
      return springer::ordinary_k_ideal(lambda);
    case springer::Flavor::Flag:
      return springer::flag_ideal(lambda.n());
    case springer::Flavor::ClassicalCoh:
      return springer::classical_tanisaki_ideal(lambda);
  }
  throw std::invalid_argument("unknown flavor: " + cfg.flavor);
}

mpz_class expected_rank(const RunConfig& cfg,
                        const springer::Partition& lambda) {
  if (!cfg.expect.empty()) return mpz_class(cfg.expect);
  auto parsed = springer::flavor_from_name(cfg.flavor);
  if (parsed && *parsed == springer::Flavor::Flag)
    return springer::factorial(lambda.n());
  return lambda.multinomial();
}

ordered_json result_to_json(const springer::CheckResult& r, bool timings) {
  ordered_json o = ordered_json::object();
  if (r.lambda) o["lambda"] = r.lambda->parts();
  o["suite"] = r.suite;
  o["check"] = r.check;
  o["expected"] = r.expected;
  o["got"] = r.got;
  if (r.seed) o["seed"] = *r.seed;
  o["pass"] = r.pass;
  if (!r.detail.empty()) o["detail"] = r.detail;
  if (timings) o["elapsed_ms"] = r.elapsed_ms;
  return o;
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ---- present ----------------------------------------------------------------

int cmd_present(const RunConfig& cfg) {
  springer::Partition lambda = parse_lambda(cfg);
  springer::IdealPresentation I = ideal_for(cfg, lambda);
  if (cfg.format == "json") {
    emit_json(springer::presentation_to_json(I));
    return kExitPass;
  }
  springer::NameMap names = springer::display_names(I.flavor);
  std::cout << "flavor: " << springer::flavor_name(I.flavor) << "\n";
  if (I.lambda) std::cout << "lambda: " << I.lambda->to_string() << "\n";
  std::cout << "n: " << I.n << "\n";
  std::cout << "ambient:";
  std::cout << " " << names.x_as << "1.." << names.x_as << I.space.x_arity;
  if (I.space.u_arity > 0) std::cout << "; u1..u" << I.space.u_arity;
  if (I.space.t_arity > 0) std::cout << "; t1..t" << I.space.t_arity;
  if (!I.invertible.empty()) {
    std::cout << "; invertible:";
    for (const std::string& f : I.invertible) std::cout << " " << f;
  }
  std::cout << "\n";
  if (!I.specialization.empty())
    std::cout << "specialization: " << I.specialization << "\n";
  std::cout << "generators: " << I.generators.size() << "\n";
  std::cout << "dropped: " << I.dropped.size() << "\n";
  for (const springer::Generator& g : I.generators) {
    std::cout << "[s=" << g.index.s << " subset={";
    for (std::size_t i = 0; i < g.index.subset.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << g.index.subset[i];
    }
    std::cout << "} d=" << g.index.d << "] " << g.poly.to_text(names) << "\n";
  }
  return kExitPass;
}

// ---- fixed-points -------------------------------------------------------------

int cmd_fixed_points(const RunConfig& cfg) {
  springer::Partition lambda = parse_lambda(cfg);
  std::vector<springer::Word> words = springer::fixed_points(lambda);
  if (cfg.format == "json") {
    emit_json(springer::fixed_points_to_json(lambda, words));
    return kExitPass;
  }
  std::cout << "lambda: " << lambda.to_string() << "\n";
  std::cout << "count: " << words.size() << "\n";
  for (const springer::Word& w : words)
    std::cout << springer::word_to_string(w) << "\n";
  return kExitPass;
}

// ---- rank ---------------------------------------------------------------------

int cmd_rank(const RunConfig& cfg) {
  springer::Partition lambda = parse_lambda(cfg);
  springer::IdealPresentation I = ideal_for(cfg, lambda);
  mpz_class expected = expected_rank(cfg, lambda);

  auto t0 = std::chrono::steady_clock::now();
  springer::RankRun run =
      springer::verified_generic_rank(I, cfg.seed, cfg.retries, order_kind(cfg));
  long long elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  bool pass = mpz_class(static_cast<long>(run.rank)) == expected;

  if (cfg.format == "json") {
    ordered_json o = ordered_json::object();
    o["lambda"] = lambda.parts();
    o["flavor"] = springer::flavor_name(I.flavor);
    o["check"] = "generic_rank";
    o["expected"] = expected.get_str();
    o["got"] = std::to_string(run.rank);
    o["seed"] = run.seed_a;
    o["pass"] = pass;
    if (cfg.timings) o["elapsed_ms"] = elapsed;
    emit_json(o);
  } else {
    std::cout << "check: generic_rank\n";
    std::cout << "lambda: " << lambda.to_string() << "\n";
    std::cout << "flavor: " << springer::flavor_name(I.flavor) << "\n";
    std::cout << "expected: " << expected.get_str() << "\n";
    std::cout << "got: " << run.rank << "\n";
    std::cout << "seed: " << run.seed_a << "\n";
    std::cout << "pass: " << (pass ? "true" : "false") << "\n";
    if (cfg.timings) std::cout << "elapsed_ms: " << elapsed << "\n";
  }
  return pass ? kExitPass : kExitCheckFailed;
}

// ---- verify ---------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg) {
  springer::Partition lambda = parse_lambda(cfg);
  springer::VerifyOptions opt;
  opt.seed = cfg.seed;
  opt.retries = cfg.retries;
  opt.order = order_kind(cfg);
  std::vector<springer::CheckResult> results =
      springer::run_suite(lambda, cfg.suite, opt);
  bool all_pass = true;
  for (const springer::CheckResult& r : results) all_pass = all_pass && r.pass;

  if (cfg.format == "json") {
    ordered_json o = ordered_json::object();
    o["lambda"] = lambda.parts();
    o["suite"] = cfg.suite;
    o["pass"] = all_pass;
    ordered_json arr = ordered_json::array();
    for (const springer::CheckResult& r : results)
      arr.push_back(result_to_json(r, cfg.timings));
    o["results"] = arr;
    emit_json(o);
  } else {
    for (const springer::CheckResult& r : results) {
      std::cout << "suite=" << r.suite << " check=" << r.check
                << " lambda=" << lambda.to_string() << " expected=["
                << r.expected << "] got=[" << r.got << "]";
      if (r.seed) std::cout << " seed=" << *r.seed;
      std::cout << " pass=" << (r.pass ? "true" : "false");
      if (cfg.timings) std::cout << " elapsed_ms=" << r.elapsed_ms;
      std::cout << "\n";
      if (!r.pass && !r.detail.empty())
        std::cout << "  counterexample: " << r.detail << "\n";
    }
    std::size_t passed = 0;
    for (const springer::CheckResult& r : results) passed += r.pass ? 1 : 0;
    std::cout << "result: " << (all_pass ? "PASS" : "FAIL") << " (" << passed
              << "/" << results.size() << " checks)\n";
  }
  return all_pass ? kExitPass : kExitCheckFailed;
}

// ---- basis ---------------------------------------------------------------------

int cmd_basis(const RunConfig& cfg) {
  springer::Partition lambda = parse_lambda(cfg);
  springer::IdealPresentation I = ideal_for(cfg, lambda);
  springer::BasisRun run = springer::generic_standard_basis(
      I, cfg.seed, cfg.retries, order_kind(cfg));
  springer::NameMap names = springer::display_names(I.flavor);

  if (cfg.format == "json") {
    ordered_json o = ordered_json::object();
    o["lambda"] = lambda.parts();
    o["flavor"] = springer::flavor_name(I.flavor);
    o["check"] = "standard_monomial_basis";
    o["seed"] = run.seed_used;
    o["count"] = run.monomials.size();
    ordered_json arr = ordered_json::array();
    for (const springer::Monomial& m : run.monomials)
      arr.push_back(springer::monomial_to_text(run.space, m, names));
    o["basis"] = arr;
    emit_json(o);
  } else {
    std::cout << "check: standard_monomial_basis\n";
    std::cout << "lambda: " << lambda.to_string() << "\n";
    std::cout << "flavor: " << springer::flavor_name(I.flavor) << "\n";
    std::cout << "seed: " << run.seed_used << "\n";
    std::cout << "count: " << run.monomials.size() << "\n";
    for (const springer::Monomial& m : run.monomials)
      std::cout << springer::monomial_to_text(run.space, m, names) << "\n";
  }
  return kExitPass;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_flavor = true) {
  sub->add_option("--lambda", cfg.lambda_text,
                  "partition as comma-separated parts, e.g. 5,4,4,2,2,2,1")
      ->required();
  if (with_flavor) {
    sub->add_option("--flavor", cfg.flavor, "presentation flavor")
        ->check(CLI::IsMember({"EqK", "EqK-compact", "EqCoh", "OrdK", "Flag",
                               "ClassicalCoh"}))
        ->capture_default_str();
  }
  sub->add_option("--seed", cfg.seed, "seed for generic specializations")
      ->envname("SPRINGER_K_SEED")
      ->capture_default_str();
  sub->add_option("--order", cfg.order, "monomial order")
      ->check(CLI::IsMember({"grevlex", "lex"}))
      ->capture_default_str();
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sub->add_option("--retries", cfg.retries,
                  "attempt budget for degenerate specializations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_flag("--timings", cfg.timings, "include elapsed_ms in reports");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Presentations and checks for equivariant K-rings and cohomology rings "
      "of nilpotent Springer fibers in type A"};
  app.require_subcommand(1);

  RunConfig cfg;

  CLI::App* present =
      app.add_subcommand("present", "print a generators-and-relations ideal");
  add_common(present, cfg);

  CLI::App* rank = app.add_subcommand(
      "rank", "quotient rank at seed-generic coefficients, twice-checked");
  add_common(rank, cfg);
  rank->add_option("--expect", cfg.expect,
                   "override the expected rank (decimal integer)");

  CLI::App* fixed = app.add_subcommand(
      "fixed-points", "torus-fixed permutation words for lambda");
  add_common(fixed, cfg, /*with_flavor=*/false);

  CLI::App* verify =
      app.add_subcommand("verify", "run a named verification suite");
  add_common(verify, cfg);
  verify
      ->add_option("--suite", cfg.suite,
                   "gkm | rank | equivariance | specialize | powerseries | "
                   "identities | flag-consistency | all")
      ->check(CLI::IsMember({"gkm", "rank", "equivariance", "specialize",
                             "powerseries", "identities", "flag-consistency",
                             "all"}))
      ->capture_default_str();

  CLI::App* basis = app.add_subcommand(
      "basis", "standard-monomial basis at a seed-generic specialization");
  add_common(basis, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (present->parsed()) return cmd_present(cfg);
    if (rank->parsed()) return cmd_rank(cfg);
    if (fixed->parsed()) return cmd_fixed_points(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (basis->parsed()) return cmd_basis(cfg);
  } catch (const springer::DegenerateSpecialization& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
