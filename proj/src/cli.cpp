#include "xtint/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "xtint/compression.hpp"
#include "xtint/errors.hpp"
#include "xtint/frankl.hpp"
#include "xtint/gensets.hpp"
#include "xtint/report.hpp"
#include "xtint/search.hpp"
#include "xtint/section4.hpp"
#include "xtint/sweep.hpp"
#include "xtint/text_format.hpp"

namespace xtint::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolation = 2;

std::string default_path(const std::string& name) {
  const char* dir = std::getenv("XTINT_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return name;
  return (std::filesystem::path(dir) / name).string();
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

/// Writes text to path, or to out when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path);
  file << text;
  if (!file) throw IoError("write failed on " + path);
}

// ---- sweep-inequalities ----------------------------------------------------

struct SweepArgs {
  SweepConfig config;
  std::string out_path;
  bool resume = false;
  std::uint64_t limit = 0;
  std::string summary_csv;
  std::string summary_json;
};

int run_sweep(const SweepArgs& args, std::ostream& err) {
  SweepConfig config = args.config;
  if (args.limit > 0) config.limit = args.limit;
  const std::string path = args.out_path.empty() ? default_path("sweep.jsonl") : args.out_path;
  const CampaignResult r = run_sweep_campaign(config, path, args.resume);
  if (!args.summary_csv.empty()) {
    std::ostringstream csv;
    emit_summary_csv(csv, r.totals);
    emit(args.summary_csv, csv.str(), err);
  }
  if (!args.summary_json.empty()) {
    std::ostringstream js;
    emit_summary_json(js, r.totals);
    emit(args.summary_json, js.str(), err);
  }
  err << "sweep t=[" << config.t_min << "," << config.t_max << "] k_span=" << config.k_span
      << " n_span=" << config.n_span << (r.resumed ? " (resumed)" : "") << '\n';
  err << "records: " << r.totals.records << " (this run " << r.run.checked << ")"
      << (r.run.complete ? "" : ", stopped at limit") << '\n';
  emit_summary_csv(err, r.totals);
  for (const auto& v : r.run.violations) err << "VIOLATION " << v << '\n';
  return r.totals.violated() == 0 ? kOk : kViolation;
}

// ---- search ----------------------------------------------------------------

struct SearchArgs {
  int n = 0, k = 0, t = 0;
  std::string objective = "product";
  std::string method;
  int s_max = 0;
  std::uint64_t node_cap = kDefaultNodeCap;
  std::string out_path;
  std::uint64_t seed = 1;
  int shift_trials = 0;
};

ojson witness_json(const Witness& w) {
  ojson j;
  j["size_a"] = to_string(w.size_a);
  j["size_b"] = to_string(w.size_b);
  if (w.ga) j["genset_a"] = format_genset(*w.ga);
  if (w.gb) j["genset_b"] = format_genset(*w.gb);
  if (w.a) j["family_a"] = format_family(*w.a);
  if (w.b) j["family_b"] = format_family(*w.b);
  return j;
}

ojson result_json(const SearchResult& r) {
  ojson j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["t"] = r.t;
  j["objective"] = to_string(r.objective);
  j["method"] = to_string(r.method);
  if (r.method == Method::genset) j["s_max"] = r.s_max;
  j["value"] = to_string(r.value);
  j["nodes"] = r.stats.nodes;
  j["pruned"] = r.stats.pruned;
  j["witness_count"] = r.stats.witnesses_total;
  j["witnesses_truncated"] = r.stats.witnesses_truncated;
  ojson ws = ojson::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
  j["witnesses"] = std::move(ws);
  return j;
}

BigInt objective_of(const UniformFamily& a, const UniformFamily& b, Objective o) {
  return o == Objective::product ? BigInt(a.size()) * b.size() : BigInt(a.size() + b.size());
}

/// Applies random shifts to witness pairs; returns the number of trials in
/// which the pair stopped being cross-intersecting or the objective dropped.
int shift_trials(const SearchResult& r, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (const auto& w : r.witnesses) {
    if (!w.a) continue;
    std::uniform_int_distribution<int> pick(1, r.n);
    for (int trial = 0; trial < trials; ++trial) {
      int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      const UniformFamily a = shift_family(*w.a, i, j);
      const UniformFamily b = shift_family(*w.b, i, j);
      if (!is_cross_t_intersecting(a, b, r.t) ||
          objective_of(a, b, r.objective) < objective_of(*w.a, *w.b, r.objective)) {
        ++failures;
      }
    }
  }
  return failures;
}

int run_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  const Objective objective = parse_objective(args.objective);
  Method method;
  if (args.method.empty()) {
    method = binomial(args.n, args.k) <= kBruteForceCap ? Method::brute : Method::genset;
  } else {
    method = parse_method(args.method);
  }
  if (method == Method::genset && objective != Objective::product) {
    throw UsageError("the genset search maximizes the product only");
  }
  SearchResult r;
  bool partial = false;
  try {
    r = method == Method::brute
            ? brute_force_best(args.n, args.k, args.t, objective)
            : genset_search_best_product(args.n, args.k, args.t,
                                         args.s_max > 0 ? std::optional<int>(args.s_max)
                                                        : std::nullopt,
                                         args.node_cap);
  } catch (const SearchBudgetExceeded& e) {
    r = e.partial();
    partial = true;
    err << e.what() << "; reporting the best found so far\n";
  }
  ojson j = result_json(r);
  j["complete"] = !partial;
  int status = partial ? kViolation : kOk;
  if (args.shift_trials > 0) {
    const int failures = shift_trials(r, args.shift_trials, args.seed);
    j["shift_trials"] = args.shift_trials;
    j["shift_failures"] = failures;
    if (failures > 0) status = kViolation;
  }
  emit(args.out_path, j.dump(2) + "\n", out);
  err << to_string(objective) << " (" << to_string(r.method) << ") n=" << args.n
      << " k=" << args.k << " t=" << args.t << ": " << to_string(r.value) << ", "
      << r.stats.witnesses_total << " witness pair(s)\n";
  return status;
}

// ---- frankl ------------------------------------------------------------------

int run_frankl(std::int64_t n, std::int64_t k, std::int64_t t, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  const FranklMax best = frankl_max(n, k, t);
  const bool tie = best.argmax.size() > 1;
  std::ostringstream csv;
  csv << "n,k,t,r,size,regime\n";
  for (std::int64_t r = 0; t + 2 * r <= n; ++r) {
    const bool is_max =
        std::find(best.argmax.begin(), best.argmax.end(), r) != best.argmax.end();
    csv << n << ',' << k << ',' << t << ',' << r << ',' << to_string(frankl_size({n, k, t, r}))
        << ',' << (is_max ? (tie ? "tie" : "max") : "") << '\n';
  }
  emit(out_path, csv.str(), out);
  int status = kOk;
  try {
    const AkRegime regime = ak_regime(n, k, t);
    std::vector<std::int64_t> predicted{regime.r};
    if (regime.boundary) predicted.push_back(regime.r + 1);
    const bool agree = predicted == best.argmax;
    err << "threshold regime r=" << regime.r << (regime.boundary ? " (boundary with r+1)" : "")
        << "; enumeration " << (agree ? "agrees" : "DISAGREES") << '\n';
    if (!agree) status = kViolation;
  } catch (const OutOfScopeError& e) {
    err << e.what() << "; no regime prediction\n";
  }
  return status;
}

// ---- compress ----------------------------------------------------------------

int run_compress(const std::string& in_path, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  auto in = open_in(in_path);
  const UniformFamily f = read_family(in);
  const UniformFamily g = left_compress(f);
  emit(out_path, format_family(g), out);
  err << "compressed " << f.size() << " sets; already left-compressed: "
      << (f == g ? "yes" : "no") << '\n';
  return g.size() == f.size() && is_left_compressed(g) ? kOk : kViolation;
}

// ---- genset ------------------------------------------------------------------

struct GensetArgs {
  std::string in_path;
  std::string b_path;
  std::string out_path;
  std::int64_t n_target = 0;
  int i = 0;
  int t = 0;
  std::string direction = "up-down";
};

int run_genset_expand(const GensetArgs& a, std::ostream& out, std::ostream& err) {
  auto in = open_in(a.in_path);
  const GenSet g = read_genset(in);
  const UniformFamily f = upset_k(g);
  emit(a.out_path, format_family(f), out);
  err << "expanded " << g.size() << " generators to " << f.size() << " sets\n";
  return kOk;
}

int run_genset_size(const GensetArgs& a, std::ostream& out, std::ostream& err) {
  auto in = open_in(a.in_path);
  const GenSet g = read_genset(in);
  const std::int64_t n = a.n_target > 0 ? a.n_target : g.n();
  const BigInt size = size_from_genset(g, n, g.k(), n == g.n() ? Validation::automatic
                                                              : Validation::never);
  out << to_string(size) << '\n';
  err << "size at n=" << n << ", k=" << g.k() << '\n';
  return kOk;
}

int run_genset_minimal(const GensetArgs& a, std::ostream& out, std::ostream& err) {
  auto in = open_in(a.in_path);
  const UniformFamily f = read_family(in);
  const GenSet g = minimal_genset(f);
  emit(a.out_path, format_genset(g), out);
  err << g.size() << " generators; cells partition: " << (cells_partition(g) ? "yes" : "no")
      << '\n';
  return kOk;
}

int run_genset_slices(const GensetArgs& a, std::ostream& out, std::ostream&) {
  auto in = open_in(a.in_path);
  const GenSet g = read_genset(in);
  const int top = s_plus(g);
  ojson j;
  j["s_plus"] = top;
  ojson slices = ojson::object();
  for (int i = 1; i <= g.k(); ++i) {
    const GenSet slice = slice_top(g, i, top);
    if (slice.empty()) continue;
    ojson members = ojson::array();
    for (const auto& e : slice.elements()) members.push_back(to_string(e));
    slices[std::to_string(i)] = std::move(members);
  }
  j["slices"] = std::move(slices);
  emit(a.out_path, j.dump(2) + "\n", out);
  return kOk;
}

int run_genset_perturb(const GensetArgs& a, std::ostream& out, std::ostream& err) {
  auto in_a = open_in(a.in_path);
  const UniformFamily fa = read_family(in_a);
  const GenSet ga = minimal_genset(fa);
  ojson j;
  PerturbResult r;
  if (a.b_path.empty()) {
    r = perturb_single(fa, ga, a.i, a.t);
  } else {
    auto in_b = open_in(a.b_path);
    const UniformFamily fb = read_family(in_b);
    const GenSet gb = minimal_genset(fb);
    Direction d;
    if (a.direction == "up-down") {
      d = Direction::up_down;
    } else if (a.direction == "down-up") {
      d = Direction::down_up;
    } else {
      throw UsageError("unknown direction '" + a.direction + "' (up-down|down-up)");
    }
    r = perturb_pair(fa, fb, ga, gb, a.i, a.t, d);
    j["direction"] = to_string(d);
  }
  j["top"] = r.top;
  j["delta_first"] = to_string(r.delta_first);
  j["delta_second"] = to_string(r.delta_second);
  if (r.measured_first) j["measured_first"] = to_string(*r.measured_first);
  if (r.measured_second) j["measured_second"] = to_string(*r.measured_second);
  if (r.intersecting) j["intersecting"] = *r.intersecting;
  j["flags"] = r.flags;
  j["deltas_consistent"] = r.deltas_consistent();
  emit(a.out_path, j.dump(2) + "\n", out);
  const bool ok = r.deltas_consistent() && r.intersecting.value_or(true);
  if (!ok) err << "perturbation broke the intersection property or its size formula\n";
  return ok ? kOk : kViolation;
}

// ---- verify-case4 / verify-main-small -------------------------------------------

int run_case4(std::int64_t n, std::int64_t k, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  const Section4Report r = verify_section4_constructions(n, k);
  ojson j;
  j["n"] = n;
  j["k"] = k;
  j["sizes"] = r.sizes.size();
  j["identities"] = r.identities.size();
  j["pairs"] = r.pairs.size();
  ojson cmp = ojson::array();
  for (const auto& c : r.comparisons) {
    ojson e;
    e["construction"] = c.construction;
    e["claim"] = c.claim;
    e["holds"] = c.holds;
    e["in_domain"] = c.in_domain;
    cmp.push_back(std::move(e));
  }
  j["comparisons"] = std::move(cmp);
  j["split"] = {{"max_sum", r.split.max_sum},
                {"product_bound", r.split.product_bound},
                {"equality_pairs", r.split.equality_pairs},
                {"equality_characterized", r.split.equality_characterized}};
  const auto failures = r.failures();
  j["failures"] = failures;
  emit(out_path, j.dump(2) + "\n", out);
  err << "n=" << n << " k=" << k << ": " << r.sizes.size() << " sizes, " << r.pairs.size()
      << " pairs, " << r.comparisons.size() << " comparisons; " << failures.size()
      << " failure(s)\n";
  for (const auto& f : failures) err << "FAIL " << f << '\n';
  return failures.empty() ? kOk : kViolation;
}

int run_main_small(int n, int k, int t, const std::string& out_path, std::ostream& out,
                   std::ostream& err) {
  const MainTheoremReport r = verify_main_theorem_small(n, k, t);
  ojson j = result_json(r.search);
  j["bound"] = to_string(r.bound);
  j["bound_holds"] = r.bound_holds;
  j["uniqueness_checked"] = r.uniqueness_checked;
  j["star_only"] = r.star_only;
  emit(out_path, j.dump(2) + "\n", out);
  err << "n=" << n << " k=" << k << " t=" << t << ": max product " << to_string(r.search.value)
      << ", bound " << to_string(r.bound) << (r.bound_holds ? " holds" : " FAILS");
  if (r.uniqueness_checked) err << "; star-only witnesses: " << (r.star_only ? "yes" : "NO");
  err << '\n';
  const bool ok = r.bound_holds && (!r.uniqueness_checked || r.star_only);
  return ok ? kOk : kViolation;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification toolkit for cross-t-intersecting families"};
  app.require_subcommand(1);

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep-inequalities", "Exact sweep of the inequality checks");
  sweep_cmd->add_option("--t-min", sweep_args.config.t_min)->capture_default_str();
  sweep_cmd->add_option("--t-max", sweep_args.config.t_max)->capture_default_str();
  sweep_cmd->add_option("--k-span", sweep_args.config.k_span)->capture_default_str();
  sweep_cmd->add_option("--n-span", sweep_args.config.n_span)->capture_default_str();
  sweep_cmd->add_option("--out", sweep_args.out_path, "JSON-lines output (default sweep.jsonl)");
  sweep_cmd->add_flag("--resume", sweep_args.resume, "Continue after the resume marker");
  sweep_cmd->add_option("--limit", sweep_args.limit, "Stop after this many records");
  sweep_cmd->add_option("--summary", sweep_args.summary_csv, "Write the CSV summary here");
  sweep_cmd->add_option("--summary-json", sweep_args.summary_json, "Write the JSON summary here");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive extremal search");
  search_cmd->add_option("--n", search_args.n)->required();
  search_cmd->add_option("--k", search_args.k)->required();
  search_cmd->add_option("--t", search_args.t)->required();
  search_cmd->add_option("--objective", search_args.objective)->capture_default_str();
  search_cmd->add_option("--method", search_args.method, "brute|genset (default by size)");
  search_cmd->add_option("--s-max", search_args.s_max, "Genset ground set (default 2k-t)");
  search_cmd->add_option("--node-cap", search_args.node_cap)->capture_default_str();
  search_cmd->add_option("--out", search_args.out_path);
  search_cmd->add_option("--seed", search_args.seed)->capture_default_str();
  search_cmd->add_option("--shift-trials", search_args.shift_trials,
                         "Random shifts applied to each witness");

  std::int64_t fn = 0, fk = 0, ft = 0;
  std::string frankl_out;
  auto* frankl_cmd = app.add_subcommand("frankl", "Sizes of F(n,k,t,r) for every r");
  frankl_cmd->add_option("--n", fn)->required();
  frankl_cmd->add_option("--k", fk)->required();
  frankl_cmd->add_option("--t", ft)->required();
  frankl_cmd->add_option("--out", frankl_out);

  std::string compress_in, compress_out;
  auto* compress_cmd = app.add_subcommand("compress", "Left-compress a family file");
  compress_cmd->add_option("--in", compress_in)->required();
  compress_cmd->add_option("--out", compress_out);

  GensetArgs genset_args;
  auto* genset_cmd = app.add_subcommand("genset", "Generating-set utilities");
  genset_cmd->require_subcommand(1);
  auto* g_expand = genset_cmd->add_subcommand("expand", "Expand a generating set");
  auto* g_size = genset_cmd->add_subcommand("size", "Size from the cell formula");
  auto* g_minimal = genset_cmd->add_subcommand("minimal", "Minimal generating set of a family");
  auto* g_slices = genset_cmd->add_subcommand("slices", "Top slices g*_i");
  auto* g_perturb = genset_cmd->add_subcommand("perturb", "Slice perturbation of families");
  for (auto* sub : {g_expand, g_size, g_minimal, g_slices, g_perturb}) {
    sub->add_option("--in", genset_args.in_path)->required();
    sub->add_option("--out", genset_args.out_path);
  }
  g_size->add_option("--n", genset_args.n_target, "Evaluate at this ground set size");
  g_perturb->add_option("--b", genset_args.b_path, "Partner family (omit for a single family)");
  g_perturb->add_option("--i", genset_args.i)->required();
  g_perturb->add_option("--t", genset_args.t)->required();
  g_perturb->add_option("--direction", genset_args.direction)->capture_default_str();

  std::int64_t cn = 0, ck = 0;
  std::string case4_out;
  auto* case4_cmd = app.add_subcommand("verify-case4", "Check the explicit constructions");
  case4_cmd->add_option("--n", cn)->required();
  case4_cmd->add_option("--k", ck)->required();
  case4_cmd->add_option("--out", case4_out);

  int mn = 0, mk = 0, mt = 0;
  std::string main_out;
  auto* main_cmd = app.add_subcommand("verify-main-small", "Product bound at desk scale");
  main_cmd->add_option("--n", mn)->required();
  main_cmd->add_option("--k", mk)->required();
  main_cmd->add_option("--t", mt)->required();
  main_cmd->add_option("--out", main_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (*sweep_cmd) return run_sweep(sweep_args, err);
    if (*search_cmd) return run_search(search_args, out, err);
    if (*frankl_cmd) return run_frankl(fn, fk, ft, frankl_out, out, err);
    if (*compress_cmd) return run_compress(compress_in, compress_out, out, err);
    if (*g_expand) return run_genset_expand(genset_args, out, err);
    if (*g_size) return run_genset_size(genset_args, out, err);
    if (*g_minimal) return run_genset_minimal(genset_args, out, err);
    if (*g_slices) return run_genset_slices(genset_args, out, err);
    if (*g_perturb) return run_genset_perturb(genset_args, out, err);
    if (*case4_cmd) return run_case4(cn, ck, case4_out, out, err);
    if (*main_cmd) return run_main_small(mn, mk, mt, main_out, out, err);
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << '\n';
    return kViolation;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace xtint::cli
