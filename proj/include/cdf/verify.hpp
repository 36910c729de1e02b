#pragma once

#include "cdf/config.hpp"

namespace cdf {

/// Deterministic 64-bit linear congruential generator (Knuth's multiplier).
/// Draws take the high bits: below(n) = (next() >> 33) % n.
struct Lcg64 {
  uint64_t state;
  explicit Lcg64(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state;
  }
  uint64_t below(uint64_t n) { return (next() >> 33) % n; }
};

enum class CheckStatus { Pass, Fail, Skip };

/// One verification check: an identity instantiated on concrete data.
struct CheckRecord {
  std::string suite;
  int idx = 0;
  std::string desc;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // counterexample rendering, or the skip reason
  long long ms = 0;
};

struct Report {
  std::vector<CheckRecord> records;

  bool all_pass() const;
  int count(CheckStatus s) const;
  /// One "check ..." line per record plus a trailing "summary ..." line.
  /// Timings can be suppressed for byte-stable output.
  std::string machine_text(bool timings = true) const;
};

/// Canonical suite order; run_suites reports in this order regardless of
/// the order requested.
const std::vector<std::string>& suite_names();

/// Run the requested suites (all of them when cfg.suites is empty) and
/// collect one record per check.  Unknown suite names raise UsageError.
/// Checks never throw: resource exhaustion becomes a skip, any other
/// error a failure with the message as witness.
Report run_suites(const SuiteConfig& cfg);

}  // namespace cdf
