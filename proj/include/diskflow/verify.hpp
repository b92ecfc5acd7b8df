#pragma once

// Invariant suites shared by the `verify` command and the test binaries.
//
// Report schema (JSON):
//   {"suite": "graph", "max_n": 8, "passed": true,
//    "checks": [{"name": "...", "passed": true, "detail": "..."}],
//    "first_failure": null}

#include <optional>
#include <string>
#include <vector>

namespace diskflow {

enum class Suite { all, identities, graph, census, orbits };

const char* to_string(Suite s);
/// Parses a suite name; nullopt if unknown.
std::optional<Suite> parse_suite(const std::string& name);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  Suite suite = Suite::all;
  int max_n = 0;
  std::vector<Check> checks;

  bool passed() const;
  const Check* first_failure() const;
  std::string to_json() const;
};

struct VerifyOptions {
  int max_n = 10;
  int workers = 1;
};

VerifyReport run_suite(Suite suite, const VerifyOptions& options);

}  // namespace diskflow
