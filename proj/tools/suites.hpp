#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace blockrank::verify {

struct SuiteOptions {
  std::size_t count = 100;
  std::size_t max_n = 10;
  std::uint64_t seed = 0;
};

struct Failure {
  std::size_t instance = 0;
  std::string graph;  // text format, replayable through the parser
  std::optional<std::size_t> expected;
  std::optional<std::size_t> actual;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::size_t instances = 0;
  std::vector<Failure> failures;
  double wall_seconds = 0.0;

  [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
};

std::span<const std::string_view> suite_names() noexcept;

/// Runs `count` seeded instances of the suite; instance i depends only on
/// (seed, i). Throws Error(UnknownSuite).
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

/// Summary line, then one block per failure with the graph indented by two
/// spaces.
std::string format_report(const SuiteReport& report);
nlohmann::json to_json(const SuiteReport& report);

}  // namespace blockrank::verify
