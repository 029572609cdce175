#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grhopf/graph.hpp"

namespace grhopf::verify {

/// One canonical representative per isoclass, ordered by (order, size, key).
/// max_edges < 0 means no edge bound.
std::vector<SimpleGraph> simple_isoclasses(int max_vertices, int max_edges = -1);
/// Connected isoclasses with at most max_edges edges (so at most max_edges + 1
/// vertices), same ordering. The empty graph is not included.
std::vector<SimpleGraph> connected_isoclasses_by_edges(int max_edges);
/// Oriented graphs (2-cycles allowed), same ordering.
std::vector<OrientedGraph> oriented_isoclasses(int max_vertices);

enum class Status { kPass, kFail, kSkipped };
std::string to_string(Status s);

struct CheckResult {
  std::string suite;
  std::string name;
  Status status = Status::kPass;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  /// graph6 (simple) or digraph6 (oriented) of the first failing graph.
  std::string counterexample;
  std::string detail;
};

struct Options {
  int max_vertices = 5;
  int max_edges = -1;
  int jobs = 1;
  /// Oriented universes are further capped at this order.
  int oriented_max_vertices = 4;
};

struct RunReport {
  std::string suite;
  Options options;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
};

/// A property returns std::nullopt on success or a failure description.
using SimpleProperty = std::function<std::optional<std::string>(const SimpleGraph&)>;
using OrientedProperty = std::function<std::optional<std::string>(const OrientedGraph&)>;
using FixedProperty = std::function<std::optional<std::string>()>;
/// Graphs (order, size) outside the scope count as skipped.
using Scope = std::function<bool(int order, int size)>;

/// Exactly one of simple / oriented / fixed is set.
struct Check {
  std::string suite;
  std::string name;
  Scope scope;
  SimpleProperty simple;
  OrientedProperty oriented;
  FixedProperty fixed;
};

/// axioms, antipode, morphisms, specializations, colorings, orientations.
const std::vector<std::string>& suite_names();
/// Checks of one suite, or of every suite for "all". Throws
/// std::invalid_argument for an unknown suite.
std::vector<Check> checks_for(const std::string& suite);
/// The check with this name from any suite.
Check find_check(const std::string& name);

/// Runs one check over the universes on `jobs` threads. The result does not
/// depend on the thread count.
CheckResult run_check(const Check& check, const std::vector<SimpleGraph>& simple,
                      const std::vector<OrientedGraph>& oriented, int jobs);

RunReport run_suite(const std::string& suite, const Options& options);

/// One line per check plus a summary line; timing only when asked.
std::string format_report(const RunReport& report, bool timing);

}  // namespace grhopf::verify
