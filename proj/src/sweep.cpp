#include "xtint/sweep.hpp"

#include <tuple>

#include "xtint/errors.hpp"

namespace xtint {

const CheckValue* VerificationRecord::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool canonical_less(const SectionParams& a, const SectionParams& b) {
  return std::tie(a.t, a.k, a.n, a.s, a.i) < std::tie(b.t, b.k, b.n, b.s, b.i);
}

namespace {

Status of(bool ok) { return ok ? Status::holds : Status::violated; }

void add_lemma(VerificationRecord& r, const char* name, const LemmaCheck& c) {
  r.checks.push_back({name, c.status, to_string(c.value)});
}

}  // namespace

VerificationRecord verify_point(const SectionParams& p) {
  VerificationRecord r;
  r.params = p;
  p.validate();
  const CoreForms forms = core_forms(p);
  const BigInt drift = abs(forms.S1_sum - forms.S1_diff) + abs(forms.S2_sum - forms.S2_diff);
  r.checks.push_back({"dual_forms", of(forms.agree()), to_string(drift)});

  const KeyInequality key = check_key_inequality(p);
  r.T = key.ratio;
  r.checks.push_back({"thm32", key.status, to_string(key.ratio)});

  const BigInt k = p.k, i = p.i, s = p.s, t = p.t, n = p.n;
  const Rational unit((k - i + 1) * (k + i + 1 - s - t), (n + i - k - s) * (n + t - k - i));
  r.checks.push_back({"ratio_identity", of(check_ratio_identity(p)), to_string(unit)});

  add_lemma(r, "lemma33", lemma_f(p));
  add_lemma(r, "lemma34", lemma_g(p));
  add_lemma(r, "lemma35", lemma_h(p));
  add_lemma(r, "lemma36", lemma_phi(p));

  if (is_appendix_triple(p.s, p.i, p.t)) {
    const AppendixCheck a = appendix_case(p);
    r.checks.push_back({"appendix", of(a.exceeds_one), to_string(a.specialized)});
  }

  const ChainCheck chain = chain_check(p);
  if (chain.applicable) {
    for (std::size_t j = 0; j < chain.slack.size(); ++j) {
      r.checks.push_back({std::string("chain_") + ChainCheck::kLabels[j], of(chain.holds(j)),
                          to_string(chain.slack[j])});
    }
  }
  return r;
}

void SweepConfig::validate() const {
  if (t_min < 3) throw UsageError("sweep needs t_min >= 3");
  if (t_max < t_min) throw UsageError("sweep needs t_min <= t_max");
  if (k_span < 0 || n_span < 0) throw UsageError("sweep spans must be nonnegative");
}

void for_each_grid_point(const SweepConfig& config,
                         const std::function<void(const SectionParams&)>& fn) {
  config.validate();
  for (std::int64_t t = config.t_min; t <= config.t_max; ++t) {
    for (std::int64_t k = t; k <= t + config.k_span; ++k) {
      const std::int64_t n0 = (t + 1) * (k - t + 1);
      for (std::int64_t n = n0; n <= n0 + config.n_span; ++n) {
        for (std::int64_t s = t + 3; s <= 2 * k - t; ++s) {
          const std::int64_t lo = std::max(t + 1, s + t - k);
          const std::int64_t hi = std::min(k, (s + t) / 2);
          for (std::int64_t i = lo; i <= hi; ++i) fn({n, k, s, i, t});
        }
      }
    }
  }
}

namespace {

struct StopSweep {};

}  // namespace

SweepSummary sweep(const SweepConfig& config, const RecordSink& sink,
                   const std::optional<SectionParams>& resume_after) {
  SweepSummary summary;
  try {
    for_each_grid_point(config, [&](const SectionParams& p) {
      if (resume_after && !canonical_less(*resume_after, p)) return;
      if (config.limit && summary.checked >= *config.limit) {
        summary.complete = false;
        throw StopSweep{};
      }
      const VerificationRecord r = verify_point(p);
      sink(r);
      ++summary.checked;
      summary.last = p;
      for (const auto& c : r.checks) {
        switch (c.status) {
          case Status::holds: ++summary.holds; break;
          case Status::excluded: ++summary.excluded; break;
          case Status::violated:
            ++summary.violated;
            summary.violations.push_back(c.name + " at " + to_string(p));
            break;
        }
      }
    });
  } catch (const StopSweep&) {
  }
  return summary;
}

}  // namespace xtint
