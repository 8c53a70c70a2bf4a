#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "xtint/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "xtint");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = xtint::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "xtint_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"search", "--n", "9", "--k", "4"}).code == 1);
  CHECK(run({"search", "--n", "9", "--k", "4", "--t", "3", "--objective", "max"}).code == 1);
  CHECK(run({"frankl", "--n", "5", "--k", "6", "--t", "3"}).code == 1);
  CHECK(run({"sweep-inequalities", "--t-min", "2", "--out", "/dev/null"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("frankl table") {
  const Outcome o = run({"frankl", "--n", "9", "--k", "4", "--t", "3"});
  CHECK(o.code == 0);
  CHECK(o.out.rfind("n,k,t,r,size,regime\n9,4,3,0,6,max\n9,4,3,1,5,\n", 0) == 0);
  CHECK(o.err.find("agrees") != std::string::npos);
}

TEST_CASE("search emits JSON") {
  const Outcome o = run({"search", "--n", "9", "--k", "4", "--t", "3"});
  REQUIRE(o.code == 0);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["value"] == "36");
  CHECK(j["method"] == "genset");
  CHECK(j["witnesses"].size() == 1);

  const Outcome b = run({"search", "--n", "5", "--k", "3", "--t", "2", "--objective", "sum"});
  REQUIRE(b.code == 0);
  CHECK(nlohmann::json::parse(b.out)["value"] == "8");
  CHECK(nlohmann::json::parse(b.out)["method"] == "brute");
}

TEST_CASE("sweep exit codes and summaries") {
  const fs::path out = write_temp("clean.jsonl", "");
  const fs::path csv = out.string() + ".csv";
  const Outcome clean = run({"sweep-inequalities", "--t-min", "3", "--t-max", "3", "--k-span", "3",
                             "--n-span", "3", "--out", out.string(), "--summary", csv.string()});
  CHECK(clean.code == 0);
  CHECK(slurp(csv).rfind("check,holds,excluded,violated,min_value\n", 0) == 0);

  const fs::path bad = write_temp("bad.jsonl", "");
  const Outcome red = run({"sweep-inequalities", "--t-min", "4", "--t-max", "4", "--k-span", "2",
                           "--n-span", "0", "--out", bad.string()});
  CHECK(red.code == 2);
  CHECK(red.err.find("lemma34 at (n,k,s,i,t)=(15,6,7,5,4)") != std::string::npos);
}

TEST_CASE("compress and genset files") {
  const fs::path f = write_temp("f.txt", "n=5 k=2\n1,5\n2,5\n3,5\n");
  const Outcome c = run({"compress", "--in", f.string()});
  CHECK(c.code == 0);
  CHECK(c.out == "n=5 k=2\n1,2\n1,3\n1,4\n");
  CHECK(run({"compress", "--in", "/nonexistent/family.txt"}).code == 2);

  const fs::path g = write_temp("g.txt", "n=10 k=6\n1,2,3,4,5\n1,2,3,4,6\n");
  const Outcome s = run({"genset", "size", "--in", g.string(), "--n", "10"});
  CHECK(s.code == 0);
  CHECK(s.out.find('9') != std::string::npos);
  CHECK(run({"genset", "size", "--in", write_temp("m.txt", "n=3 k=2\nx\n").string()}).code == 1);
}

TEST_CASE("construction and product checks") {
  CHECK(run({"verify-case4", "--n", "20", "--k", "6"}).code == 0);
  const Outcome low = run({"verify-case4", "--n", "16", "--k", "6"});
  CHECK(low.code == 2);
  CHECK(low.err.find("C(n-6,k-3) > 3 C(n-6,k-4)") != std::string::npos);
  const Outcome m = run({"verify-main-small", "--n", "9", "--k", "4", "--t", "3"});
  CHECK(m.code == 0);
  CHECK(nlohmann::json::parse(m.out)["bound_holds"] == true);
}
