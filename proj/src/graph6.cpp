#include "grhopf/graph6.hpp"

#include <json.hpp>

#include <vector>

namespace grhopf {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kDigraph6Header = ">>digraph6<<";

std::string_view trim_line(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int sextet(char c) {
  if (c < 63 || c > 126) {
    throw ParseError(std::string("invalid graph6 character '") + c + "'");
  }
  return c - 63;
}

// N(n) per the format; consumes from s.
int read_order(std::string_view& s) {
  if (s.empty()) throw ParseError("missing vertex count");
  if (s[0] != 126) {
    int n = sextet(s[0]);
    s.remove_prefix(1);
    return n;
  }
  long long n = 0;
  std::size_t width = 3;
  std::size_t start = 1;
  if (s.size() >= 2 && s[1] == 126) {
    width = 6;
    start = 2;
  }
  if (s.size() < start + width) throw ParseError("truncated vertex count");
  for (std::size_t i = 0; i < width; ++i) n = (n << 6) | sextet(s[start + i]);
  s.remove_prefix(start + width);
  if (n > kMaxVertices) {
    throw ParseError("vertex count " + std::to_string(n) + " exceeds the 64-vertex limit");
  }
  return static_cast<int>(n);
}

void write_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
    return;
  }
  out.push_back(126);
  for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
}

std::vector<bool> read_bits(std::string_view s, std::size_t count) {
  std::size_t need = (count + 5) / 6;
  if (s.size() < need) throw ParseError("truncated bit stream");
  if (s.size() > need) throw ParseError("trailing characters after bit stream");
  std::vector<bool> bits;
  bits.reserve(need * 6);
  for (char c : s) {
    int x = sextet(c);
    for (int k = 5; k >= 0; --k) bits.push_back((x >> k) & 1);
  }
  for (std::size_t i = count; i < bits.size(); ++i) {
    if (bits[i]) throw ParseError("nonzero padding bits");
  }
  bits.resize(count);
  return bits;
}

void write_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int x = 0;
    for (std::size_t k = 0; k < 6; ++k) {
      x <<= 1;
      if (i + k < bits.size() && bits[i + k]) x |= 1;
    }
    out.push_back(static_cast<char>(x + 63));
  }
}

}  // namespace

SimpleGraph parse_graph6(std::string_view text) {
  std::string_view s = trim_line(text);
  if (s.starts_with(kGraph6Header)) s.remove_prefix(kGraph6Header.size());
  if (s.empty()) throw ParseError("empty graph6 string");
  if (s[0] == '&' || s[0] == ':' || s[0] == ';') {
    throw ParseError("not a graph6 string (digraph6/sparse6 header)");
  }
  int n = read_order(s);
  std::size_t count = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<bool> bits = read_bits(s, count);
  SimpleGraph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits[k++]) g.add_edge(i, j);
    }
  }
  return g;
}

std::string emit_graph6(const SimpleGraph& g) {
  std::string out;
  int n = g.order();
  write_order(out, n);
  std::vector<bool> bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j));
  }
  write_bits(out, bits);
  return out;
}

OrientedGraph parse_digraph6(std::string_view text) {
  std::string_view s = trim_line(text);
  if (s.starts_with(kDigraph6Header)) s.remove_prefix(kDigraph6Header.size());
  if (s.empty() || s[0] != '&') throw ParseError("digraph6 string must start with '&'");
  s.remove_prefix(1);
  int n = read_order(s);
  std::vector<bool> bits = read_bits(s, static_cast<std::size_t>(n) * n);
  OrientedGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!bits[static_cast<std::size_t>(i) * n + j]) continue;
      if (i == j) throw ParseError("digraph6 loop at vertex " + std::to_string(i));
      g.add_arc(i, j);
    }
  }
  return g;
}

std::string emit_digraph6(const OrientedGraph& g) {
  std::string out = "&";
  int n = g.order();
  write_order(out, n);
  std::vector<bool> bits;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) bits.push_back(i != j && g.has_arc(i, j));
  }
  write_bits(out, bits);
  return out;
}

MixedGraph parse_mixed_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("mixed graph JSON: ") + e.what());
  }
  try {
    int n = doc.at("n").get<int>();
    if (n < 0 || n > kMaxVertices) throw ParseError("mixed graph JSON: n out of range");
    MixedGraph h(n);
    if (doc.contains("edges")) {
      for (const auto& e : doc["edges"]) h.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    }
    if (doc.contains("arcs")) {
      for (const auto& a : doc["arcs"]) h.add_arc(a.at(0).get<int>(), a.at(1).get<int>());
    }
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("mixed graph JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("mixed graph JSON: ") + e.what());
  }
}

std::string emit_mixed_json(const MixedGraph& h) {
  nlohmann::json doc;
  doc["n"] = h.order();
  doc["edges"] = nlohmann::json::array();
  doc["arcs"] = nlohmann::json::array();
  for (const Edge& e : h.edges()) doc["edges"].push_back({e.u, e.v});
  for (const Arc& a : h.arcs()) doc["arcs"].push_back({a.tail, a.head});
  return doc.dump();
}

}  // namespace grhopf
