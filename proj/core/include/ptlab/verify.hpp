#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ptlab/recognizers.hpp"

namespace ptlab {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  /// One line per falsified invariant, naming the instance.
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Recognizers under test; empty members fall back to the library ones.
/// Tests swap in a mutant to confirm the suites notice.
struct VerifyOptions {
  std::size_t seeds = 200;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  Recognizer cograph;
  Recognizer comparability;
  Recognizer perfect;
};

/// recognizers, packing, gadgets, testers, decomposition
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

/// `all` or a single suite name.
std::vector<SuiteResult> run_verify_suite(const std::string& name, const VerifyOptions& options);

nlohmann::json to_json(const SuiteResult& r);

}  // namespace ptlab
