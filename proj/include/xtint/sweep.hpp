#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xtint/inequality.hpp"

namespace xtint {

struct CheckValue {
  std::string name;
  Status status = Status::holds;
  std::string value;  ///< exact rational, "p/q" or "p"
  friend bool operator==(const CheckValue&, const CheckValue&) = default;
};

struct VerificationRecord {
  SectionParams params;
  Rational T;
  std::vector<CheckValue> checks;

  const CheckValue* find(const std::string& name) const;
  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

/// Canonical sweep order: lexicographic in (t, k, n, s, i).
bool canonical_less(const SectionParams& a, const SectionParams& b);

/// Runs every check at one point. Always present: dual_forms, thm32,
/// ratio_identity, lemma33..lemma36. Added when relevant: appendix, and
/// chain_equa1 .. chain_equac3 on points where the chain applies.
VerificationRecord verify_point(const SectionParams& p);

struct SweepConfig {
  std::int64_t t_min = 3;
  std::int64_t t_max = 8;
  std::int64_t k_span = 12;
  std::int64_t n_span = 40;
  /// Stop after this many records; used to interrupt a campaign on purpose.
  std::optional<std::uint64_t> limit;

  /// Throws UsageError for an empty or out-of-domain window.
  void validate() const;
};

/// Visits every valid point of the window in canonical order:
/// t in [t_min, t_max], k in [t, t+k_span],
/// n in [(t+1)(k-t+1), (t+1)(k-t+1)+n_span], then all valid s and i.
void for_each_grid_point(const SweepConfig& config,
                         const std::function<void(const SectionParams&)>& fn);

struct SweepSummary {
  std::uint64_t checked = 0;  ///< points visited by this call
  std::uint64_t holds = 0;    ///< individual checks that held
  std::uint64_t excluded = 0;
  std::uint64_t violated = 0;
  std::vector<std::string> violations;  ///< "check at (n,k,s,i,t)=(...)"
  bool complete = true;                 ///< false when the limit cut the sweep short
  std::optional<SectionParams> last;    ///< last point emitted
};

using RecordSink = std::function<void(const VerificationRecord&)>;

/// Streams records for the window to sink, skipping points up to and
/// including resume_after.
SweepSummary sweep(const SweepConfig& config, const RecordSink& sink,
                   const std::optional<SectionParams>& resume_after = std::nullopt);

}  // namespace xtint
