#pragma once

// Batch runs over enumerated or seeded instances. Every processed instance
// with something to say becomes one line of an append-only JSONL log; the
// provenance of each line carries the campaign index, which is the resume
// cursor.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gerst/generate.hpp"
#include "gerst/io.hpp"

namespace gerst {

enum class CampaignMode { VerifyTheorem, CrossCheck, HuntN4, CertifyCorpus };

std::string_view to_string(CampaignMode mode);
CampaignMode parse_campaign_mode(const std::string& name);

struct CampaignConfig {
  CampaignMode mode = CampaignMode::VerifyTheorem;
  /// Plan bounds for verify-theorem and certify-corpus. For hunt-n4,
  /// bounds.box is the largest coordinate of the searched {0..box}^4.
  PlanBounds bounds;
  int max_boxes = 40;
  /// Random instances: added after the enumeration in verify-theorem, the
  /// whole workload otherwise (hunt-n4 ignores it).
  long count = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  /// JSONL log. Empty means no log and no witness file.
  std::filesystem::path output;
  /// Continue after the last index already in `output`.
  bool resume = false;
};

/// Throws PreconditionFailed on nonpositive bounds or workers.
void check_config(const CampaignConfig& config);

struct CampaignSummary {
  CampaignMode mode{};
  std::uint64_t seed = 0;
  long total = 0;      // size of the index space
  long processed = 0;  // indices handled by this run
  long skipped = 0;    // indices already in the log
  long records = 0;    // log lines written by this run
  long anomalies = 0;  // invariant breaches, or confirmed finds in hunt-n4
  std::optional<long> min_deficiency;
  double wall_seconds = 0;
  std::vector<InstanceRecord> witnesses;
  std::filesystem::path witness_path;

  Json to_json() const;
};

/// Deterministic for a given config, whatever the worker count.
CampaignSummary run_campaign(const CampaignConfig& config);

/// `<log>.witness.json`, holding the first anomalous record.
std::filesystem::path witness_path_for(const std::filesystem::path& log);

/// Reads a campaign log; an unterminated final line is ignored.
std::vector<InstanceRecord> read_log(const std::filesystem::path& log);

/// Recomputes a logged record's results from its payload. Returns an empty
/// string when the payload validates and the results agree.
std::string replay_problem(const InstanceRecord& record);

/// Down-sets of {0..box}^n in the order of an include/exclude search over
/// the lex order.
std::vector<YoungDiagram> down_sets_in_box(int n, int box);

}  // namespace gerst
