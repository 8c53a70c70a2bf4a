#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "xtint/sweep.hpp"

namespace xtint {

/// One JSON object on a single line, keys in a fixed order:
/// {"n","k","s","i","t","T_num","T_den","checks":{...},"values":{...}}.
std::string format_record(const VerificationRecord& r);

/// Inverse of format_record. Throws IntegrityError mentioning line_no.
VerificationRecord parse_record(const std::string& line, std::uint64_t line_no = 0);

struct CheckTally {
  std::string name;
  std::uint64_t holds = 0;
  std::uint64_t excluded = 0;
  std::uint64_t violated = 0;
  std::optional<Rational> min_value;  ///< over records where the check is not excluded
  friend bool operator==(const CheckTally&, const CheckTally&) = default;
};

struct RecordSummary {
  std::uint64_t records = 0;
  std::vector<CheckTally> checks;  ///< in order of first appearance
  std::uint64_t violated() const;
  void add(const VerificationRecord& r);
  friend bool operator==(const RecordSummary&, const RecordSummary&) = default;
};

RecordSummary summarize(const std::vector<VerificationRecord>& records);
/// Reads JSON lines, skipping blank ones. Throws IntegrityError with the
/// line number of a malformed record.
RecordSummary summarize_stream(std::istream& in);

/// check,holds,excluded,violated,min_value
void emit_summary_csv(std::ostream& out, const RecordSummary& summary);
void emit_summary_json(std::ostream& out, const RecordSummary& summary);

/// Path of the resume marker that accompanies a campaign output file.
std::string marker_path(const std::string& out_path);

struct CampaignResult {
  SweepSummary run;        ///< what this invocation computed
  RecordSummary totals;    ///< recomputed from the whole output file
  bool resumed = false;
};

/// Runs the sweep into out_path as JSON lines, keeping a marker with the
/// last completed tuple. With resume, the output is first cut back to the
/// records at or before the marker and the sweep continues after it; the
/// final file is byte-identical to a fresh run. Throws IoError on I/O failure.
CampaignResult run_sweep_campaign(const SweepConfig& config, const std::string& out_path,
                                  bool resume);

}  // namespace xtint
