#include "xtint/inequality.hpp"

#include <algorithm>

#include "xtint/errors.hpp"

namespace xtint {

namespace {

struct Triple {
  std::int64_t s, i, t;
};

bool in_list(std::initializer_list<Triple> list, std::int64_t s, std::int64_t i, std::int64_t t) {
  return std::any_of(list.begin(), list.end(),
                     [&](const Triple& x) { return x.s == s && x.i == i && x.t == t; });
}

std::string failed_constraint(const SectionParams& p) {
  const auto [n, k, s, i, t] = p;
  if (t < 3) return "t >= 3";
  if ((t + 1) * (k - t + 1) > n) return "(t+1)(k-t+1) <= n";
  if (s < t + 3) return "t+3 <= s";
  if (s > 2 * k - t) return "s <= 2k-t";
  if (i < t + 1) return "t+1 <= i";
  if (i < s + t - k) return "s+t-k <= i";
  if (i > k) return "i <= k";
  if (2 * i > s + t) return "i <= (s+t)/2";
  return {};
}

LemmaCheck make_check(BigInt value, bool strict, bool excluded) {
  LemmaCheck c;
  c.value = std::move(value);
  c.strict = strict;
  c.raw_holds = strict ? c.value > 0 : c.value >= 0;
  c.status = excluded ? Status::excluded : (c.raw_holds ? Status::holds : Status::violated);
  return c;
}

void require_same(const BigInt& a, const BigInt& b, const char* what, const SectionParams& p) {
  if (a != b) {
    throw IntegrityError(std::string(what) + ": closed form disagrees at " + to_string(p));
  }
}

}  // namespace

void SectionParams::validate() const {
  if (auto c = failed_constraint(*this); !c.empty()) {
    throw DomainError("parameters " + to_string(*this) + " violate " + c);
  }
}

bool SectionParams::valid() const { return failed_constraint(*this).empty(); }

std::string to_string(const SectionParams& p) {
  return "(n,k,s,i,t)=(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," +
         std::to_string(p.s) + "," + std::to_string(p.i) + "," + std::to_string(p.t) + ")";
}

CoreForms core_forms(const SectionParams& p) {
  const BigInt n = p.n, k = p.k, s = p.s, i = p.i, t = p.t;
  CoreForms f;
  f.S1_sum = i * (n - k - s + i + 1) + (s - i) * (n - s + 1);
  f.S1_diff = s * (n - s + 1) - i * (k - i);
  f.S2_sum = (s + t - i) * (n - k - i + t + 1) + (i - t) * (n - s + 1);
  f.S2_diff = s * (n - s + 1) - (s + t - i) * (k + i - s - t);
  f.T1 = i * (n - k - s + i + 1) + (s - i) * (k - i + 1);
  f.T2 = (s + t - i) * (n - k - i + t + 1) + (i - t) * (k - s - t + i + 1);
  return f;
}

CoreQuantities eval_core(const SectionParams& p) {
  p.validate();
  const CoreForms f = core_forms(p);
  if (!f.agree()) throw IntegrityError("S1/S2 forms disagree at " + to_string(p));
  CoreQuantities q{f.S1_sum, f.S2_sum, f.T1, f.T2};
  if (q.S1 <= 0 || q.S2 <= 0 || q.T1 <= 0 || q.T2 <= 0) {
    throw IntegrityError("nonpositive S/T quantity at " + to_string(p));
  }
  return q;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::violated: return "violated";
    case Status::excluded: return "excluded";
  }
  return "?";
}

Status parse_status(const std::string& text) {
  if (text == "holds") return Status::holds;
  if (text == "violated") return Status::violated;
  if (text == "excluded") return Status::excluded;
  throw IntegrityError("unknown status '" + text + "'");
}

bool lemma_f_excluded(std::int64_t s, std::int64_t i, std::int64_t t) {
  return in_list({{8, 6, 5}, {7, 5, 4}, {8, 5, 3}, {8, 4, 3}, {7, 5, 3}, {7, 4, 3}, {6, 4, 3}}, s,
                 i, t);
}

bool lemma_g_excluded(std::int64_t s, std::int64_t i, std::int64_t t) {
  return in_list({{7, 5, 3}, {7, 4, 3}, {6, 4, 3}}, s, i, t);
}

bool key_excluded(std::int64_t s, std::int64_t i, std::int64_t t) {
  return s == 6 && i == 4 && t == 3;
}

namespace {

struct RatioParts {
  BigInt num, den;
};

RatioParts key_parts(const SectionParams& p) {
  const CoreQuantities q = eval_core(p);
  const BigInt n = p.n, k = p.k, s = p.s, i = p.i, t = p.t;
  const BigInt a = n + i - k - s;
  const BigInt b = n + t - k - i;
  if (a <= 0 || b <= 0) throw IntegrityError("nonpositive ratio factor at " + to_string(p));
  return {a * b * q.S1 * q.S2, (n - s + 1) * (n - s + 1) * q.T1 * q.T2};
}

}  // namespace

Rational key_ratio(const SectionParams& p) {
  const RatioParts r = key_parts(p);
  return Rational(r.num, r.den);
}

KeyInequality check_key_inequality(const SectionParams& p) {
  const RatioParts r = key_parts(p);
  KeyInequality out;
  out.raw_holds = r.num > r.den;
  out.ratio = Rational(r.num, r.den);
  if (key_excluded(p.s, p.i, p.t)) {
    out.status = Status::excluded;
  } else {
    out.status = out.raw_holds ? Status::holds : Status::violated;
  }
  return out;
}

bool check_ratio_identity(const SectionParams& p) {
  p.validate();
  const auto [n, k, s, i, t] = p;
  const BigInt lhs = binomial(n - s, k - i) * binomial(n - s, k + i - s - t) *
                     BigInt(n + i - k - s) * BigInt(n + t - k - i);
  const BigInt rhs = binomial(n - s, k - i + 1) * binomial(n - s, k + i + 1 - s - t) *
                     BigInt(k - i + 1) * BigInt(k + i + 1 - s - t);
  return lhs == rhs;
}

BigInt lemma_f_closed(const SectionParams& p) {
  const BigInt n = p.n, k = p.k, s = p.s, i = p.i, t = p.t;
  return (s - i) * (n + i - k - s) + (i - t) * (n + t - k - i) - s * (2 * k - s - t + 2);
}

BigInt lemma_g_closed(const SectionParams& p) {
  const BigInt n = p.n, k = p.k, s = p.s, i = p.i;
  return (s - i) * (n + i - k - s) - s * (k - i + 1);
}

BigInt lemma_h_closed(const SectionParams& p) {
  const BigInt n = p.n, k = p.k, s = p.s, i = p.i, t = p.t;
  const BigInt first = (s + t - 2 * i) * (n + t + i - 2 * k) +
                       (i - t) * (2 * n + t - 2 * k - s) - s * (k + i - s - t + 1);
  const BigInt second = s * s + s * (n + 3 * t - 3 * k - i - 1) + i * (2 * k - 2 * i) - t * n;
  if (first != second) throw IntegrityError("h closed forms disagree at " + to_string(p));
  return first;
}

BigInt lemma_phi_closed(const SectionParams& p) {
  const BigInt n = p.n, k = p.k, s = p.s, i = p.i, t = p.t;
  return (i - t) * (n - 2 * k + s + 2 * t - 2 * i) - s;
}

LemmaCheck lemma_f(const SectionParams& p) {
  const CoreQuantities q = eval_core(p);
  const BigInt s = p.s;
  BigInt f = q.S1 + q.S2 - q.T1 - q.T2 - s * (2 * p.k - p.s - p.t + 2);
  require_same(f, lemma_f_closed(p), "f", p);
  return make_check(std::move(f), false, lemma_f_excluded(p.s, p.i, p.t));
}

LemmaCheck lemma_g(const SectionParams& p) {
  const CoreQuantities q = eval_core(p);
  const BigInt s = p.s;
  BigInt g = q.S1 - q.T1 - s * (p.k - p.i + 1);
  require_same(g, lemma_g_closed(p), "g", p);
  return make_check(std::move(g), true, lemma_g_excluded(p.s, p.i, p.t));
}

LemmaCheck lemma_h(const SectionParams& p) {
  const CoreQuantities q = eval_core(p);
  const BigInt s = p.s;
  BigInt h = q.S2 - (q.T1 + s * (p.k + p.i - p.s - p.t + 1) - (q.S2 - q.T2));
  require_same(h, lemma_h_closed(p), "h", p);
  return make_check(std::move(h), true, false);
}

LemmaCheck lemma_phi(const SectionParams& p) {
  const CoreQuantities q = eval_core(p);
  const BigInt s = p.s;
  BigInt phi = s * (p.n - p.s + 1) - q.T2 - s * (p.k + p.i - p.s - p.t + 1);
  require_same(phi, lemma_phi_closed(p), "phi", p);
  return make_check(std::move(phi), false, false);
}

bool is_appendix_triple(std::int64_t s, std::int64_t i, std::int64_t t) {
  return in_list({{7, 5, 4}, {8, 5, 3}, {8, 4, 3}, {7, 5, 3}, {7, 4, 3}, {8, 6, 5}}, s, i, t);
}

AppendixCheck appendix_case(const SectionParams& p) {
  if (!is_appendix_triple(p.s, p.i, p.t)) {
    throw UsageError("no specialized form for " + to_string(p));
  }
  const RatioParts generic = key_parts(p);
  const BigInt n = p.n, k = p.k;
  BigInt num, den;
  const auto sq = [](const BigInt& x) { return x * x; };
  if (p.s == 8 && p.i == 5) {
    num = (n - k - 3) * (n - k - 2) * (8 * n - 5 * k - 31) * (8 * n - 6 * k - 20);
    den = sq(n - 7) * (5 * n - 2 * k - 22) * (6 * n - 4 * k - 16);
  } else if (p.s == 8 && p.i == 4) {
    num = (n - k - 4) * (n - k - 1) * (8 * n - 4 * k - 40) * (8 * n - 7 * k - 7);
    den = sq(n - 7) * (4 * n - 24) * (7 * n - 6 * k - 6);
  } else if (p.s == 7 && p.i == 5 && p.t == 4) {
    num = (n - k - 2) * (n - k - 1) * (7 * n - 5 * k - 17) * (7 * n - 6 * k - 6);
    den = sq(n - 6) * (5 * n - 3 * k - 13) * (6 * n - 5 * k - 5);
  } else if (p.s == 7 && p.i == 5) {
    num = sq(n - k - 2) * sq(7 * n - 5 * k - 17);
    den = sq(n - 6) * sq(5 * n - 3 * k - 13);
  } else if (p.s == 7 && p.i == 4) {
    num = (n - k - 3) * (n - k - 1) * (7 * n - 4 * k - 26) * (7 * n - 6 * k - 6);
    den = sq(n - 6) * (4 * n - k - 17) * (6 * n - 5 * k - 5);
  } else {
    num = (n - k - 2) * (n - k - 1) * (8 * n - 6 * k - 20) * (8 * n - 7 * k - 7);
    den = sq(n - 7) * (6 * n - 4 * k - 16) * (7 * n - 6 * k - 6);
  }
  if (den == 0 || num * generic.den != den * generic.num) {
    throw IntegrityError("specialized ratio disagrees with T at " + to_string(p));
  }
  AppendixCheck out;
  out.generic = Rational(generic.num, generic.den);
  out.specialized = Rational(num, den);
  out.exceeds_one = out.specialized > 1;
  return out;
}

bool ChainCheck::all_hold() const {
  for (std::size_t j = 0; j < slack.size(); ++j) {
    if (!holds(j)) return false;
  }
  return true;
}

ChainCheck chain_check(const SectionParams& p) {
  const CoreQuantities q = eval_core(p);
  const BigInt n = p.n, k = p.k, s = p.s, i = p.i, t = p.t;
  const BigInt m = s * (k + i - s - t + 1);
  ChainCheck c;
  c.applicable = q.S2 - q.T2 < m && !lemma_f_excluded(p.s, p.i, p.t);
  const BigInt low = q.T1 + m - (q.S2 - q.T2);
  const BigInt g = q.S1 - s * (k - i + 1);
  c.slack[0] = (n - k - s + i) * q.S1 - (n - s + 1) * g;
  c.slack[1] = g - low;
  c.slack[2] = std::min<BigInt>(q.S2 - low, q.T2 + m - q.S2);
  c.slack[3] = low * q.S2 - q.T1 * (q.T2 + m);
  c.slack[4] = (n - k - i + t) * (q.T2 + m) - (n - s + 1) * q.T2;
  return c;
}

std::pair<bool, bool> basefact(const Rational& A, const Rational& B, const Rational& a,
                               const Rational& b) {
  if (A <= 0 || B <= 0 || a <= 0 || b <= 0) {
    throw DomainError("basefact needs positive arguments");
  }
  const bool lhs = (A + a) * (B - b) < A * B;
  // B/(A+a) < b/a with positive denominators.
  const bool rhs = B * a < b * (A + a);
  return {lhs, rhs};
}

bool eq2_ratio(std::int64_t m, std::int64_t j) {
  if (j < 1 || j > m) throw UsageError("eq2_ratio needs 1 <= j <= m");
  return binomial(m, j) > 3 * binomial(m, j - 1);
}

}  // namespace xtint
