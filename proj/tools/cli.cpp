#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "grhopf/enumeration.hpp"
#include "grhopf/graph6.hpp"
#include "grhopf/hopf.hpp"
#include "grhopf/invariants.hpp"
#include "grhopf/verify.hpp"

namespace grhopf::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputLine {
  std::string source;
  int line = 0;
  std::string text;
};

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

void read_lines(std::istream& in, const std::string& source, std::vector<InputLine>& out) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string t = trim(line);
    if (!t.empty()) out.push_back({source, number, t});
  }
}

// A positional naming an existing file is read line by line; anything else
// is an inline graph string.
std::vector<InputLine> collect_inputs(const std::vector<std::string>& positionals, std::istream& in) {
  std::vector<InputLine> out;
  if (positionals.empty()) {
    read_lines(in, "stdin", out);
    return out;
  }
  int arg = 0;
  for (const std::string& p : positionals) {
    ++arg;
    std::error_code ec;
    if (std::filesystem::is_regular_file(p, ec)) {
      std::ifstream file(p);
      if (!file) throw UsageError("cannot read " + p);
      read_lines(file, p, out);
    } else {
      std::string t = trim(p);
      if (!t.empty()) out.push_back({"argument " + std::to_string(arg), 1, t});
    }
  }
  return out;
}

[[noreturn]] void parse_failure(const InputLine& line, const std::string& what) {
  throw ParseError("line " + std::to_string(line.line) + " of " + line.source + ": " + what);
}

bool is_digraph6(const std::string& text) { return text.starts_with("&") || text.starts_with(">>digraph6<<"); }

SimpleGraph parse_simple(const InputLine& line) {
  if (is_digraph6(line.text)) parse_failure(line, "expected a graph6 simple graph, got digraph6");
  try {
    return parse_graph6(line.text);
  } catch (const std::exception& e) {
    parse_failure(line, e.what());
  }
}

OrientedGraph parse_oriented(const InputLine& line) {
  try {
    return parse_digraph6(line.text);
  } catch (const std::exception& e) {
    parse_failure(line, e.what());
  }
}

json coefficient_json(const Rational& c) {
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) return json(c.get_num().get_si());
  return json(to_string(c));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string graph_code(const SimpleGraph& g) { return emit_graph6(g); }
std::string graph_code(const OrientedGraph& g) { return emit_digraph6(g); }

// --- invariant ---------------------------------------------------------------

BiPoly compute_invariant(const std::string& which, const SimpleGraph& g) {
  if (which == "chromatic") return BiPoly::from_x(chromatic_polynomial(g));
  if (which == "tutte") return tutte_polynomial(g);
  if (which == "fk") return fk_polynomial(g);
  if (which == "rank-gen") return rank_generating_polynomial(g);
  throw UsageError("unknown invariant '" + which + "'");
}

std::string render_invariant(const std::string& which, const BiPoly& p) {
  if (which == "chromatic") return p.specialize_y(0).to_string("X");
  return p.to_string();
}

int cmd_invariant(const std::string& which, const std::string& format, const std::vector<std::string>& inputs,
                  std::istream& in, std::ostream& out) {
  std::vector<InputLine> lines = collect_inputs(inputs, in);
  std::vector<std::pair<std::string, SimpleGraph>> graphs;
  for (const InputLine& line : lines) graphs.emplace_back(line.text, parse_simple(line));
  bool header = false;
  for (const auto& [text, g] : graphs) {
    BiPoly p = compute_invariant(which, g);
    if (format == "json") {
      json terms = json::array();
      for (const auto& [e, c] : p.terms()) terms.push_back({{"dx", e.first}, {"dy", e.second}, {"coeff", coefficient_json(c)}});
      json obj = {{"graph", text}, {"invariant", which}, {"terms", terms}};
      out << obj.dump() << '\n';
    } else if (format == "csv") {
      if (!header) out << "graph,invariant,dx,dy,coeff\n";
      header = true;
      for (const auto& [e, c] : p.terms()) {
        out << csv_field(text) << ',' << which << ',' << e.first << ',' << e.second << ',' << to_string(c) << '\n';
      }
    } else {
      out << text << ' ' << which << ' ' << render_invariant(which, p) << '\n';
    }
  }
  return kOk;
}

// --- tensors -----------------------------------------------------------------

template <class G>
void emit_tensor(const std::string& graph, const std::string& operation, const TensorSum<G>& t,
                 const std::string& format, std::ostream& out) {
  if (format == "json") {
    json terms = json::array();
    for (const auto& [key, term] : t.terms()) {
      json codes = json::array();
      json renders = json::array();
      for (const G& f : term.factors) {
        codes.push_back(graph_code(f));
        renders.push_back(to_string(f));
      }
      terms.push_back({{"factors", codes}, {"render", renders}, {"coeff", coefficient_json(term.coeff)}});
    }
    json obj = {{"graph", graph}, {"operation", operation}, {"flavor", to_string(t.flavor())}, {"terms", terms}};
    out << obj.dump() << '\n';
    return;
  }
  if (format == "csv") {
    out << "graph,operation,coeff";
    for (int i = 0; i < t.arity(); ++i) out << ",factor" << i << ",render" << i;
    out << '\n';
    for (const auto& [key, term] : t.terms()) {
      out << csv_field(graph) << ',' << operation << ',' << to_string(term.coeff);
      for (const G& f : term.factors) out << ',' << csv_field(graph_code(f)) << ',' << csv_field(to_string(f));
      out << '\n';
    }
    return;
  }
  out << operation << '(' << graph << "): " << t.term_count() << " term" << (t.term_count() == 1 ? "" : "s") << '\n';
  for (const auto& [key, term] : t.terms()) {
    out << "  " << to_string(term.coeff) << " *";
    for (std::size_t i = 0; i < term.factors.size(); ++i) {
      out << (i == 0 ? " " : " (x) ") << graph_code(term.factors[i]) << " [" << to_string(term.factors[i]) << ']';
    }
    out << '\n';
  }
}

InputLine single_input(const std::vector<std::string>& inputs, std::istream& in) {
  std::vector<InputLine> lines = collect_inputs(inputs, in);
  if (lines.size() != 1) throw UsageError("expected exactly one graph, got " + std::to_string(lines.size()));
  return lines.front();
}

int cmd_coproduct(const std::string& which, const std::string& format, const std::vector<std::string>& inputs,
                  std::istream& in, std::ostream& out) {
  InputLine line = single_input(inputs, in);
  bool bipartition = which == "bipartition" || which == "Delta";
  if (!bipartition && which != "contraction" && which != "delta") throw UsageError("unknown coproduct '" + which + "'");
  std::string op = bipartition ? "Delta" : "delta";
  if (is_digraph6(line.text)) {
    OrientedGraph g = parse_oriented(line);
    emit_tensor(line.text, op, bipartition ? coproduct_ideal(g) : coproduct_contraction(g), format, out);
  } else {
    SimpleGraph g = parse_simple(line);
    emit_tensor(line.text, op, bipartition ? coproduct_bipartition(g) : coproduct_contraction(g), format, out);
  }
  return kOk;
}

int cmd_antipode(const std::string& method, const std::string& format, const std::vector<std::string>& inputs,
                 std::istream& in, std::ostream& out) {
  InputLine line = single_input(inputs, in);
  SimpleGraph g = parse_simple(line);
  GraphSum<SimpleGraph> s;
  if (method == "recursive") {
    s = antipode_recursive(g);
  } else if (method == "orientations") {
    s = antipode_orientation_formula(g);
  } else if (method == "contraction") {
    s = antipode_from_contraction(g);
  } else {
    throw UsageError("unknown antipode method '" + method + "'");
  }
  emit_tensor(line.text, "S", s, format, out);
  return kOk;
}

int cmd_orientations(const std::string& which, const std::string& format, bool count_only,
                     const std::vector<std::string>& inputs, std::istream& in, std::ostream& out) {
  InputLine line = single_input(inputs, in);
  SimpleGraph g = parse_simple(line);
  std::vector<std::string> codes;
  std::vector<std::string> renders;
  std::int64_t count = 0;
  if (which == "partial") {
    if (count_only) {
      count = count_totally_acyclic_partial_orientations(g);
    } else {
      for (const MixedGraph& h : totally_acyclic_partial_orientations(g)) {
        codes.push_back(emit_mixed_json(h));
        renders.push_back(to_string(h));
      }
      count = static_cast<std::int64_t>(codes.size());
    }
  } else {
    std::vector<OrientedGraph> list;
    if (which == "all") {
      list = orientations(g);
    } else if (which == "acyclic") {
      list = acyclic_orientations(g);
    } else if (which == "strong") {
      list = strongly_connected_orientations(g);
    } else {
      throw UsageError("unknown orientation family '" + which + "'");
    }
    count = static_cast<std::int64_t>(list.size());
    for (const OrientedGraph& h : list) {
      codes.push_back(emit_digraph6(h));
      renders.push_back(to_string(h));
    }
  }
  if (format == "json") {
    json obj = {{"graph", line.text}, {"family", which}, {"count", count}};
    if (!count_only) {
      json members = json::array();
      for (std::size_t i = 0; i < codes.size(); ++i) {
        members.push_back({{"code", which == "partial" ? json::parse(codes[i]) : json(codes[i])}, {"render", renders[i]}});
      }
      obj["members"] = members;
    }
    out << obj.dump() << '\n';
  } else if (format == "csv") {
    if (count_only) {
      out << "graph,family,count\n" << csv_field(line.text) << ',' << which << ',' << count << '\n';
    } else {
      out << "code,render\n";
      for (std::size_t i = 0; i < codes.size(); ++i) out << csv_field(codes[i]) << ',' << csv_field(renders[i]) << '\n';
    }
  } else {
    if (!count_only) {
      for (std::size_t i = 0; i < codes.size(); ++i) out << codes[i] << ' ' << renders[i] << '\n';
    }
    out << which << " orientations of " << line.text << ": " << count << '\n';
  }
  return kOk;
}

// --- verify ------------------------------------------------------------------

json report_json(const verify::RunReport& report, bool timing) {
  json checks = json::array();
  for (const verify::CheckResult& c : report.checks) {
    json item = {{"suite", c.suite},
                 {"name", c.name},
                 {"status", verify::to_string(c.status)},
                 {"checked", c.checked},
                 {"skipped", c.skipped}};
    if (c.status == verify::Status::kFail) {
      item["counterexample"] = c.counterexample;
      item["detail"] = c.detail;
    }
    checks.push_back(item);
  }
  json obj = {{"suite", report.suite},
              {"max_vertices", report.options.max_vertices},
              {"max_edges", report.options.max_edges < 0 ? json(nullptr) : json(report.options.max_edges)},
              {"passed", report.passed()},
              {"checks", checks}};
  if (timing) obj["seconds"] = report.seconds;
  return obj;
}

int cmd_verify(const std::string& suite, const std::string& check_name, const std::string& graph,
               const verify::Options& options, const std::string& format, bool timing, std::ostream& out) {
  if (options.max_vertices < 1 || options.max_vertices > 7) throw UsageError("--max-vertices must be in 1..7");
  if (options.jobs < 1) throw UsageError("--jobs must be positive");
  verify::RunReport report;
  if (!check_name.empty()) {
    verify::Check check;
    try {
      check = verify::find_check(check_name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::vector<SimpleGraph> simple;
    std::vector<OrientedGraph> oriented;
    if (!graph.empty()) {
      InputLine line{"--graph", 1, graph};
      if (is_digraph6(graph)) {
        oriented.push_back(parse_oriented(line));
      } else {
        simple.push_back(parse_simple(line));
      }
    } else {
      simple = verify::simple_isoclasses(options.max_vertices, options.max_edges);
      oriented = verify::oriented_isoclasses(std::min(options.max_vertices, options.oriented_max_vertices));
    }
    auto start = std::chrono::steady_clock::now();
    report.suite = check.suite;
    report.options = options;
    report.checks.push_back(verify::run_check(check, simple, oriented, options.jobs));
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  } else {
    if (!graph.empty()) throw UsageError("--graph needs --check");
    try {
      verify::checks_for(suite);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    report = verify::run_suite(suite, options);
  }
  if (format == "json") {
    out << report_json(report, timing).dump(2) << '\n';
  } else {
    out << verify::format_report(report, timing);
  }
  return report.passed() ? kOk : kCheckFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact double-bialgebra computations on graphs and oriented graphs", "grhopf"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string format = "text";
  std::vector<std::string> inputs;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("graphs", inputs, "graph6/digraph6 strings or files (default: stdin)");
  };

  std::string invariant = "tutte";
  auto* inv = app.add_subcommand("invariant", "Chromatic, Tutte, Fortuin-Kasteleyn or rank-generating polynomial");
  inv->add_option("--which", invariant, "chromatic|tutte|fk|rank-gen")
      ->check(CLI::IsMember({"chromatic", "tutte", "fk", "rank-gen"}));
  add_common(inv);

  std::string coproduct = "contraction";
  auto* cop = app.add_subcommand("coproduct", "Bipartition (Delta) or contraction-extraction (delta) coproduct");
  cop->add_option("--which", coproduct, "bipartition|contraction")
      ->check(CLI::IsMember({"bipartition", "contraction", "Delta", "delta"}));
  add_common(cop);

  std::string method = "recursive";
  auto* ant = app.add_subcommand("antipode", "Antipode of a simple graph");
  ant->add_option("--which", method, "recursive|orientations|contraction")
      ->check(CLI::IsMember({"recursive", "orientations", "contraction"}));
  add_common(ant);

  std::string family = "all";
  bool count_only = false;
  auto* ori = app.add_subcommand("orientations", "Orientations and totally acyclic partial orientations");
  ori->add_option("--which", family, "all|acyclic|strong|partial")
      ->check(CLI::IsMember({"all", "acyclic", "strong", "partial"}));
  ori->add_flag("--count", count_only, "Print only the number of members");
  add_common(ori);

  std::string suite = "all";
  std::string check_name;
  std::string graph;
  bool timing = false;
  verify::Options options;
  options.jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  auto* ver = app.add_subcommand("verify", "Run property suites over all small isoclasses");
  ver->add_option("--suite", suite, "axioms|antipode|morphisms|specializations|colorings|orientations|all");
  ver->add_option("--max-vertices", options.max_vertices, "Largest order enumerated (1..7)");
  ver->add_option("--max-edges", options.max_edges, "Largest size enumerated (-1: unbounded)");
  ver->add_option("--jobs", options.jobs, "Worker threads");
  ver->add_option("--check", check_name, "Run a single named check");
  ver->add_option("--graph", graph, "With --check: run on this graph6/digraph6 graph only");
  ver->add_flag("--timing", timing, "Append wall-clock seconds to the report");
  ver->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariant(invariant, format, inputs, in, out);
    if (cop->parsed()) return cmd_coproduct(coproduct, format, inputs, in, out);
    if (ant->parsed()) return cmd_antipode(method, format, inputs, in, out);
    if (ori->parsed()) return cmd_orientations(family, format, count_only, inputs, in, out);
    return cmd_verify(suite, check_name, graph, options, format, timing, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace grhopf::cli
