#include <doctest.h>

#include <algorithm>

#include "grhopf/canonical.hpp"
#include "grhopf/enumeration.hpp"
#include "grhopf/graph6.hpp"
#include "grhopf/verify.hpp"

using namespace grhopf;

TEST_CASE("every check passes on graphs up to four vertices") {
  verify::Options options;
  options.max_vertices = 4;
  options.jobs = 2;
  verify::RunReport report = verify::run_suite("all", options);
  for (const verify::CheckResult& c : report.checks) {
    INFO(c.suite << "/" << c.name << " " << c.counterexample << " " << c.detail);
    CHECK(c.status == verify::Status::kPass);
  }
  CHECK(report.passed());
}

TEST_CASE("axioms suite up to five vertices and antipode suite up to four") {
  verify::Options five;
  five.max_vertices = 5;
  CHECK(verify::run_suite("axioms", five).passed());
  verify::Options four;
  four.max_vertices = 4;
  CHECK(verify::run_suite("antipode", four).passed());
}

TEST_CASE("connected isoclasses by edge count") {
  const std::size_t by_edges[] = {1, 1, 1, 3, 5, 12, 30, 79, 227};
  std::vector<SimpleGraph> connected = verify::connected_isoclasses_by_edges(8);
  std::size_t total = 0;
  for (int m = 0; m <= 8; ++m) {
    std::size_t count = std::count_if(connected.begin(), connected.end(), [m](const SimpleGraph& g) { return g.size() == m; });
    CHECK(count == by_edges[m]);
    total += count;
  }
  CHECK(connected.size() == total);
  std::vector<SimpleGraph> small = verify::simple_isoclasses(6, 5);
  std::erase_if(small, [](const SimpleGraph& g) { return g.order() == 0 || connected_components(g).block_count() != 1; });
  std::vector<SimpleGraph> mine = verify::connected_isoclasses_by_edges(5);
  CHECK(small.size() == mine.size());
  CHECK(std::equal(small.begin(), small.end(), mine.begin(), mine.end(),
                   [](const SimpleGraph& a, const SimpleGraph& b) { return canonical_key(a) == canonical_key(b); }));
}

TEST_CASE("reports are deterministic across thread counts") {
  verify::Options one;
  one.max_vertices = 4;
  one.jobs = 1;
  verify::Options many = one;
  many.jobs = 4;
  CHECK(verify::format_report(verify::run_suite("morphisms", one), false) ==
        verify::format_report(verify::run_suite("morphisms", many), false));
}

TEST_CASE("a failing property carries the first counterexample in universe order") {
  verify::Check check{"custom", "no-triangles", nullptr,
                      [](const SimpleGraph& g) -> std::optional<std::string> {
                        for (int u = 0; u < g.order(); ++u)
                          for (int v = u + 1; v < g.order(); ++v)
                            for (int w = v + 1; w < g.order(); ++w)
                              if (g.adjacent(u, v) && g.adjacent(v, w) && g.adjacent(u, w)) return "triangle";
                        return std::nullopt;
                      },
                      nullptr, nullptr};
  std::vector<SimpleGraph> universe = verify::simple_isoclasses(4);
  verify::CheckResult r1 = verify::run_check(check, universe, {}, 1);
  verify::CheckResult r3 = verify::run_check(check, universe, {}, 3);
  CHECK(r1.status == verify::Status::kFail);
  CHECK(r1.counterexample == "Bw");
  CHECK(r3.counterexample == r1.counterexample);
  CHECK(r1.checked == universe.size());
  CHECK(parse_graph6(r1.counterexample).size() == 3);
}

TEST_CASE("scope and resource caps turn into skips") {
  verify::Check scoped{"custom", "small-only", [](int n, int) { return n <= 2; },
                       [](const SimpleGraph&) -> std::optional<std::string> { return std::nullopt; }, nullptr,
                       nullptr};
  verify::CheckResult r = verify::run_check(scoped, verify::simple_isoclasses(3), {}, 1);
  CHECK(r.status == verify::Status::kPass);
  CHECK(r.checked == 4);
  CHECK(r.skipped == 4);

  verify::Check capped{"custom", "capped", nullptr,
                       [](const SimpleGraph& g) -> std::optional<std::string> {
                         count_totally_acyclic_partial_orientations(g);
                         return std::nullopt;
                       },
                       nullptr, nullptr};
  std::vector<SimpleGraph> big{SimpleGraph::complete(7), SimpleGraph::complete(3)};
  verify::CheckResult s = verify::run_check(capped, big, {}, 1);
  CHECK(s.status == verify::Status::kPass);
  CHECK(s.checked == 1);
  CHECK(s.skipped == 1);
  verify::CheckResult only_big = verify::run_check(capped, {SimpleGraph::complete(7)}, {}, 1);
  CHECK(only_big.status == verify::Status::kSkipped);
}

TEST_CASE("suite registry") {
  CHECK(verify::suite_names().size() == 6);
  CHECK_THROWS_AS(verify::checks_for("unknown"), std::invalid_argument);
  std::size_t total = 0;
  for (const std::string& s : verify::suite_names()) total += verify::checks_for(s).size();
  CHECK(total == verify::checks_for("all").size());
  CHECK(verify::find_check("theta-delta-defect-K3").fixed != nullptr);
  CHECK_THROWS_AS(verify::find_check("missing"), std::invalid_argument);
}
