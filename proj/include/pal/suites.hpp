#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pal/io.hpp"
#include "pal/lattice.hpp"

namespace pal::suites {

struct SuiteConfig {
  std::string suite = "all";
  /// Exhaustive corpus: every poset up to isomorphism with 1..max_size elements.
  std::size_t max_size = 5;
  /// Random cases; each suite has its own default when unset.
  std::optional<std::size_t> samples;
  std::uint64_t seed = 42;
  std::size_t horizon = 12;
  Strictness strictness = Strictness::Inclusive;
  /// Size of the random posets that extend the exhaustive corpus.
  std::size_t random_size = 8;
};

struct SuiteReport {
  std::string suite;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double elapsed_ms = 0;
  io::Json records = io::Json::array();
  io::Json first_failure;  // null when none
  io::Json extra = io::Json::object();
  std::vector<SuiteReport> children;  // only for "all"

  bool ok() const { return failures == 0; }
  io::Json to_json() const;
  std::string to_human() const;
};

/// Suite ids accepted by run_suite, without "all".
const std::vector<std::string>& suite_names();

/// Throws Error{Parse} on an unknown suite id.
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace pal::suites
