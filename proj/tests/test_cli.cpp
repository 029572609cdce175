#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  int code = grhopf::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("invariant command") {
  Run r = run({"invariant", "--which", "tutte", "Bw"});
  CHECK(r.code == 0);
  CHECK(r.out == "Bw tutte X^2 + X + Y\n");

  Run j = run({"invariant", "--which", "tutte", "--format", "json", "Bw"});
  REQUIRE(j.code == 0);
  nlohmann::json obj = nlohmann::json::parse(j.out);
  CHECK(obj["graph"] == "Bw");
  CHECK(obj["invariant"] == "tutte");
  CHECK(obj["terms"].size() == 3);
  CHECK(obj["terms"][0] == nlohmann::json({{"dx", 0}, {"dy", 1}, {"coeff", 1}}));

  Run c = run({"invariant", "--which", "chromatic", "--format", "csv", "Bw"});
  CHECK(c.out == "graph,invariant,dx,dy,coeff\nBw,chromatic,1,0,2\nBw,chromatic,2,0,-3\nBw,chromatic,3,0,1\n");

  Run fk = run({"invariant", "--which", "fk"}, "A_\n\nB?\n");
  CHECK(fk.code == 0);
  CHECK(fk.out == "A_ fk X^2 + X*Y\nB? fk X^3\n");
}

TEST_CASE("invariant input handling") {
  Run empty = run({"invariant"}, "");
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());

  Run bad = run({"invariant"}, "Bx!\n");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 1") != std::string::npos);

  Run later = run({"invariant"}, "Bw\nA_\n!!\n");
  CHECK(later.code == 2);
  CHECK(later.out.empty());
  CHECK(later.err.find("line 3") != std::string::npos);

  std::filesystem::path file = std::filesystem::temp_directory_path() / "grhopf_cli_test.g6";
  {
    std::ofstream f(file);
    f << "Bw\nA_\n";
  }
  Run from_file = run({"invariant", "--which", "rank-gen", file.string()});
  CHECK(from_file.code == 0);
  CHECK(from_file.out == "Bw rank-gen X^2 + 3*X + Y + 3\nA_ rank-gen X + 1\n");
  std::filesystem::remove(file);

  CHECK(run({"invariant", "--which", "nonsense", "Bw"}).code == 2);
  CHECK(run({"invariant", "&AG"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("coproduct command") {
  Run d = run({"coproduct", "--which", "contraction", "A_"});
  CHECK(d.code == 0);
  CHECK(d.out.find("2 terms") != std::string::npos);
  Run D = run({"coproduct", "--which", "bipartition", "@"});
  CHECK(D.out.find("2 terms") != std::string::npos);
  Run e = run({"coproduct", "--which", "contraction", "B?"});
  CHECK(e.out.find("1 term\n") != std::string::npos);

  Run j = run({"coproduct", "--which", "contraction", "--format", "json", "Bw"});
  nlohmann::json obj = nlohmann::json::parse(j.out);
  CHECK(obj["terms"].size() == 3);
  CHECK(obj["flavor"] == "simple");

  Run o = run({"coproduct", "--which", "bipartition", "--format", "json", "&AG"});
  REQUIRE(o.code == 0);
  nlohmann::json oo = nlohmann::json::parse(o.out);
  CHECK(oo["flavor"] == "oriented");
  CHECK(oo["terms"].size() == 3);
}

TEST_CASE("antipode and orientations commands") {
  Run s = run({"antipode", "--format", "json", "A_"});
  nlohmann::json obj = nlohmann::json::parse(s.out);
  CHECK(obj["terms"].size() == 2);
  for (const std::string method : {"recursive", "orientations", "contraction"}) {
    Run m = run({"antipode", "--which", method, "Bw"});
    CHECK(m.code == 0);
    CHECK(m.out == run({"antipode", "Bw"}).out);
  }
  CHECK(run({"orientations", "--which", "acyclic", "--count", "Bw"}).out == "acyclic orientations of Bw: 6\n");
  CHECK(run({"orientations", "--which", "strong", "--count", "Bw"}).out == "strong orientations of Bw: 2\n");
  CHECK(run({"orientations", "--which", "partial", "--count", "Bw"}).out == "partial orientations of Bw: 13\n");
  Run all = run({"orientations", "--format", "json", "A_"});
  nlohmann::json ao = nlohmann::json::parse(all.out);
  CHECK(ao["count"] == 2);
  CHECK(ao["members"].size() == 2);
}

TEST_CASE("verify command") {
  Run r = run({"verify", "--suite", "all", "--max-vertices", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("seconds") == std::string::npos);
  Run again = run({"verify", "--suite", "all", "--max-vertices", "2", "--jobs", "3"});
  CHECK(again.out == r.out);

  Run single = run({"verify", "--check", "antipode-law", "--graph", "Bw"});
  CHECK(single.code == 0);
  CHECK(single.out.find("checked=1") != std::string::npos);
  Run oriented = run({"verify", "--check", "mu-sc-Delta-inverse", "--graph", "&AG"});
  CHECK(oriented.code == 0);

  Run json_report = run({"verify", "--suite", "colorings", "--max-vertices", "3", "--format", "json"});
  nlohmann::json obj = nlohmann::json::parse(json_report.out);
  CHECK(obj["passed"] == true);
  CHECK(obj["max_edges"].is_null());

  CHECK(run({"verify", "--max-vertices", "8"}).code == 2);
  CHECK(run({"verify", "--max-vertices", "0"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--check", "nope"}).code == 2);
}
