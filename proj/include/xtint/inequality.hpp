#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "xtint/bigint.hpp"

namespace xtint {

/// The five integers (n,k,s,i,t) indexing every quantity below.
struct SectionParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t s = 0;
  std::int64_t i = 0;
  std::int64_t t = 0;

  /// Throws DomainError naming the first failed constraint:
  /// t >= 3, (t+1)(k-t+1) <= n, t+3 <= s <= 2k-t,
  /// max(t+1, s+t-k) <= i <= min(k, floor((s+t)/2)).
  void validate() const;
  bool valid() const;

  friend bool operator==(const SectionParams&, const SectionParams&) = default;
};

std::string to_string(const SectionParams& p);

struct CoreQuantities {
  BigInt S1, S2, T1, T2;
};

/// S1, S2 in both expanded forms plus T1, T2, without consistency checks.
struct CoreForms {
  BigInt S1_sum, S1_diff;  ///< i(n-k-s+i+1)+(s-i)(n-s+1) and s(n-s+1)-i(k-i)
  BigInt S2_sum, S2_diff;
  BigInt T1, T2;
  bool agree() const { return S1_sum == S1_diff && S2_sum == S2_diff; }
};

CoreForms core_forms(const SectionParams& p);

/// Validates p, checks that both forms of S1 and S2 agree (IntegrityError
/// otherwise) and that all four quantities are positive.
CoreQuantities eval_core(const SectionParams& p);

enum class Status { holds, violated, excluded };

std::string to_string(Status s);
Status parse_status(const std::string& text);

/// T(n,k,s,i,t) = (n+i-k-s)(n+t-k-i) S1 S2 / ((n-s+1)^2 T1 T2).
Rational key_ratio(const SectionParams& p);

struct KeyInequality {
  Status status = Status::holds;
  bool raw_holds = false;  ///< truth value of T > 1 regardless of exclusion
  Rational ratio;
};

/// T > 1 by integer cross-multiplication. (s,i,t) = (6,4,3) reports
/// Status::excluded with the value still computed.
KeyInequality check_key_inequality(const SectionParams& p);

/// C(n-s,k-i) C(n-s,k+i-s-t) (n+i-k-s)(n+t-k-i)
///   == C(n-s,k-i+1) C(n-s,k+i+1-s-t) (k-i+1)(k+i+1-s-t).
bool check_ratio_identity(const SectionParams& p);

struct LemmaCheck {
  Status status = Status::holds;
  bool raw_holds = false;
  bool strict = false;
  BigInt value;  ///< slack: the claim is value > 0 (strict) or value >= 0
};

/// f = S1+S2-T1-T2-s(2k-s-t+2) >= 0.
LemmaCheck lemma_f(const SectionParams& p);
/// g = S1-T1-s(k-i+1) > 0.
LemmaCheck lemma_g(const SectionParams& p);
/// h = S2-(T1+s(k+i-s-t+1)-(S2-T2)) > 0.
LemmaCheck lemma_h(const SectionParams& p);
/// phi = s(n-s+1)-T2-s(k+i-s-t+1) >= 0.
LemmaCheck lemma_phi(const SectionParams& p);

bool lemma_f_excluded(std::int64_t s, std::int64_t i, std::int64_t t);
bool lemma_g_excluded(std::int64_t s, std::int64_t i, std::int64_t t);
bool key_excluded(std::int64_t s, std::int64_t i, std::int64_t t);

/// The closed forms of f, g, h, phi after substituting S1..T2; used as a
/// second computation of each slack.
BigInt lemma_f_closed(const SectionParams& p);
BigInt lemma_g_closed(const SectionParams& p);
BigInt lemma_h_closed(const SectionParams& p);
BigInt lemma_phi_closed(const SectionParams& p);

/// The triples with a hand-specialized expression for T.
bool is_appendix_triple(std::int64_t s, std::int64_t i, std::int64_t t);

struct AppendixCheck {
  Rational generic;
  Rational specialized;
  bool exceeds_one = false;
};

/// Evaluates both forms for (s,i,t) in {(7,5,4),(8,5,3),(8,4,3),(7,5,3),
/// (7,4,3),(8,6,5)}. Throws UsageError for other triples and IntegrityError
/// when the forms differ.
AppendixCheck appendix_case(const SectionParams& p);

/// Intermediate steps used when S2-T2 < s(k+i-s-t+1), with
/// m = s(k+i-s-t+1). Each slack is lhs - rhs of the named comparison.
struct ChainCheck {
  bool applicable = false;  ///< equa3 holds and (s,i,t) is not lemma_f-excluded
  static constexpr std::array<const char*, 5> kLabels = {"equa1", "equac2", "st", "equac1",
                                                         "equac3"};
  std::array<BigInt, 5> slack;
  std::array<bool, 5> strict = {true, false, true, true, false};
  bool holds(std::size_t j) const { return strict[j] ? slack[j] > 0 : slack[j] >= 0; }
  bool all_hold() const;
};

ChainCheck chain_check(const SectionParams& p);

/// (A+a)(B-b) < AB and B/(A+a) < b/a. Throws DomainError unless all inputs
/// are positive.
std::pair<bool, bool> basefact(const Rational& A, const Rational& B, const Rational& a,
                               const Rational& b);

/// C(m,j) > 3 C(m,j-1). Throws UsageError unless 1 <= j <= m.
bool eq2_ratio(std::int64_t m, std::int64_t j);

}  // namespace xtint
