#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "realblocks/corpus.hpp"
#include "realblocks/verify.hpp"

namespace realblocks {

inline constexpr const char* kToolVersion = "0.3.0";
inline constexpr int kReportSchema = 1;

/// Check groups selectable on the command line.
inline const std::vector<std::string> kCheckNames{"A", "B", "C", "loc", "gm", "podd", "hhs", "solv", "star", "props"};

struct SuiteOptions {
  /// Overrides the per-entry primes when non-empty.
  std::vector<std::uint32_t> primes;
  /// Subset of kCheckNames; empty means all.
  std::set<std::string> checks;
  unsigned jobs = 1;
  unsigned generator_choice = 0;
};

/// Parses "A,B,loc"; throws InputError on unknown names.
std::set<std::string> parse_checks(const std::string& text);

/// Every applicable verdict for one block, filtered by `checks`.
std::vector<VerdictRecord> verify_block(const BlockAnalysis& a, const std::set<std::string>& checks);

/// Analysis of one group: inventory and verdicts, as a JSON object.
nlohmann::json analyze_group(const std::string& name, const PermGroup& g, const std::vector<std::uint32_t>& primes,
                             const SuiteOptions& options);

/// Runs the corpus; per-entry failures become error records.
nlohmann::json run_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& options);

/// Counts of fail verdicts and entry errors in a report.
std::size_t count_failures(const nlohmann::json& report);

/// Writes the report with a trailing newline; "-" means stdout.
void emit_report(const nlohmann::json& report, const std::string& path);

}  // namespace realblocks
