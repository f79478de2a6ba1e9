#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace frobword {

enum class Suite { Pf, Phi, Ternary, All };

/// "pf", "phi", "ternary", "all"; DomainError otherwise.
Suite parse_suite(const std::string& name);
std::string to_string(Suite s);

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

using Progress = std::function<void(const std::string&)>;

/// Runs the bounded property checks of a suite. `quick` shrinks the ranges.
std::vector<CheckResult> run_suite(Suite s, bool quick, const Progress& progress = {});

/// Weight triples used for the g-value oracle comparison.
std::vector<std::array<std::int64_t, 3>> oracle_triples();

}  // namespace frobword
