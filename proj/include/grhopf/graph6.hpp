#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "grhopf/graph.hpp"

namespace grhopf {

/// Raised for malformed graph6 / digraph6 / mixed-graph JSON text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph6 / digraph6 as specified by B. McKay's formats.txt. Optional
// ">>graph6<<" / ">>digraph6<<" headers are accepted on input and never
// emitted. Trailing '\n' / '\r' are ignored.
SimpleGraph parse_graph6(std::string_view text);
std::string emit_graph6(const SimpleGraph& g);
OrientedGraph parse_digraph6(std::string_view text);
std::string emit_digraph6(const OrientedGraph& g);

/// Mixed graphs: {"n": 3, "edges": [[0,1]], "arcs": [[1,2],[2,0]]}.
MixedGraph parse_mixed_json(std::string_view text);
std::string emit_mixed_json(const MixedGraph& h);

}  // namespace grhopf
