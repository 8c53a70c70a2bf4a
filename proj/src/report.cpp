#include "xtint/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "xtint/errors.hpp"

namespace xtint {

using ojson = nlohmann::ordered_json;

std::string format_record(const VerificationRecord& r) {
  ojson j;
  j["n"] = r.params.n;
  j["k"] = r.params.k;
  j["s"] = r.params.s;
  j["i"] = r.params.i;
  j["t"] = r.params.t;
  j["T_num"] = to_string(BigInt(numerator(r.T)));
  j["T_den"] = to_string(BigInt(denominator(r.T)));
  ojson checks = ojson::object();
  ojson values = ojson::object();
  for (const auto& c : r.checks) {
    checks[c.name] = to_string(c.status);
    values[c.name] = c.value;
  }
  j["checks"] = std::move(checks);
  j["values"] = std::move(values);
  return j.dump();
}

VerificationRecord parse_record(const std::string& line, std::uint64_t line_no) {
  const std::string where = "record on line " + std::to_string(line_no);
  try {
    const ojson j = ojson::parse(line);
    VerificationRecord r;
    r.params = {j.at("n").get<std::int64_t>(), j.at("k").get<std::int64_t>(),
                j.at("s").get<std::int64_t>(), j.at("i").get<std::int64_t>(),
                j.at("t").get<std::int64_t>()};
    const BigInt num(j.at("T_num").get<std::string>());
    const BigInt den(j.at("T_den").get<std::string>());
    if (den <= 0) throw IntegrityError(where + ": nonpositive T_den");
    r.T = Rational(num, den);
    const ojson& values = j.at("values");
    for (const auto& [name, status] : j.at("checks").items()) {
      CheckValue c{name, parse_status(status.get<std::string>()),
                   values.at(name).get<std::string>()};
      parse_rational(c.value);
      r.checks.push_back(std::move(c));
    }
    return r;
  } catch (const IntegrityError& e) {
    throw IntegrityError(where + ": " + e.what());
  } catch (const std::exception& e) {
    throw IntegrityError(where + ": " + e.what());
  }
}

std::uint64_t RecordSummary::violated() const {
  std::uint64_t total = 0;
  for (const auto& c : checks) total += c.violated;
  return total;
}

void RecordSummary::add(const VerificationRecord& r) {
  ++records;
  for (const auto& c : r.checks) {
    auto it = std::find_if(checks.begin(), checks.end(),
                           [&](const CheckTally& x) { return x.name == c.name; });
    if (it == checks.end()) {
      CheckTally tally;
      tally.name = c.name;
      checks.push_back(std::move(tally));
      it = std::prev(checks.end());
    }
    switch (c.status) {
      case Status::holds: ++it->holds; break;
      case Status::excluded: ++it->excluded; continue;
      case Status::violated: ++it->violated; break;
    }
    const Rational v = parse_rational(c.value);
    if (!it->min_value || v < *it->min_value) it->min_value = v;
  }
}

RecordSummary summarize(const std::vector<VerificationRecord>& records) {
  RecordSummary s;
  for (const auto& r : records) s.add(r);
  return s;
}

RecordSummary summarize_stream(std::istream& in) {
  RecordSummary s;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    s.add(parse_record(line, line_no));
  }
  return s;
}

void emit_summary_csv(std::ostream& out, const RecordSummary& summary) {
  out << "check,holds,excluded,violated,min_value\n";
  for (const auto& c : summary.checks) {
    out << c.name << ',' << c.holds << ',' << c.excluded << ',' << c.violated << ','
        << (c.min_value ? to_string(*c.min_value) : "") << '\n';
  }
}

void emit_summary_json(std::ostream& out, const RecordSummary& summary) {
  ojson j;
  j["records"] = summary.records;
  j["violated"] = summary.violated();
  ojson checks = ojson::object();
  for (const auto& c : summary.checks) {
    ojson e;
    e["holds"] = c.holds;
    e["excluded"] = c.excluded;
    e["violated"] = c.violated;
    e["min_value"] = c.min_value ? ojson(to_string(*c.min_value)) : ojson(nullptr);
    checks[c.name] = std::move(e);
  }
  j["checks"] = std::move(checks);
  out << j.dump(2) << '\n';
}

std::string marker_path(const std::string& out_path) { return out_path + ".marker"; }

namespace {

constexpr std::uint64_t kMarkerEvery = 1000;

std::string format_marker(const SectionParams& p) {
  ojson j;
  j["t"] = p.t;
  j["k"] = p.k;
  j["n"] = p.n;
  j["s"] = p.s;
  j["i"] = p.i;
  return j.dump();
}

std::optional<SectionParams> read_marker(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const ojson j = ojson::parse(buf.str());
    return SectionParams{j.at("n").get<std::int64_t>(), j.at("k").get<std::int64_t>(),
                         j.at("s").get<std::int64_t>(), j.at("i").get<std::int64_t>(),
                         j.at("t").get<std::int64_t>()};
  } catch (const std::exception& e) {
    throw IntegrityError("unreadable resume marker " + path + ": " + e.what());
  }
}

void write_marker(const std::string& path, const SectionParams& p) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << format_marker(p) << '\n';
    if (!out) throw IoError("cannot write marker " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move marker into place: " + ec.message());
}

/// Keeps complete records at or before the marker; returns the kept bytes.
std::string kept_prefix(const std::string& out_path, const SectionParams& marker) {
  std::ifstream in(out_path, std::ios::binary);
  if (!in) return {};
  std::string kept, line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (in.eof()) break;  // no trailing newline: a partial write
    VerificationRecord r;
    try {
      r = parse_record(line, line_no);
    } catch (const IntegrityError&) {
      break;
    }
    if (canonical_less(marker, r.params)) break;
    kept += line;
    kept += '\n';
  }
  return kept;
}

}  // namespace

CampaignResult run_sweep_campaign(const SweepConfig& config, const std::string& out_path,
                                  bool resume) {
  config.validate();
  CampaignResult result;
  const std::string marker = marker_path(out_path);
  std::optional<SectionParams> resume_after;
  std::string prefix;
  if (resume) {
    resume_after = read_marker(marker);
    if (resume_after) {
      prefix = kept_prefix(out_path, *resume_after);
      result.resumed = true;
    }
  }
  {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + out_path);
    out << prefix;
    std::uint64_t since_marker = 0;
    result.run = sweep(
        config,
        [&](const VerificationRecord& r) {
          out << format_record(r) << '\n';
          if (!out) throw IoError("write failed on " + out_path);
          if (++since_marker == kMarkerEvery) {
            out.flush();
            write_marker(marker, r.params);
            since_marker = 0;
          }
        },
        resume_after);
    out.flush();
    if (!out) throw IoError("write failed on " + out_path);
    if (result.run.last) write_marker(marker, *result.run.last);
  }
  std::ifstream in(out_path, std::ios::binary);
  if (!in) throw IoError("cannot reopen " + out_path);
  result.totals = summarize_stream(in);
  return result;
}

}  // namespace xtint
