#ifndef SPRINGER_VERIFY_HPP
#define SPRINGER_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "springer/groebner.hpp"
#include "springer/partition.hpp"

namespace springer {

struct CheckResult {
  std::string suite;
  std::string check;
  std::optional<Partition> lambda;
  std::string expected;
  std::string got;
  std::optional<std::uint64_t> seed;
  bool pass = false;
  std::string detail;  // first counterexample, empty when passing
  long long elapsed_ms = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 17;
  int retries = 3;
  OrderKind order = OrderKind::Grevlex;
};

const std::vector<std::string>& suite_names();  // excludes "all"
bool is_suite_name(const std::string& name);    // accepts "all" too

/* Runs one named suite (or "all") for lambda. Results come in a fixed order;
 * degenerate-specialization exhaustion propagates as the exception. */
std::vector<CheckResult> run_suite(const Partition& lambda,
                                   const std::string& suite,
                                   const VerifyOptions& opt);

}  // namespace springer

#endif
