#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "haul/model.hpp"

namespace haul {

/// Ordered key=value list. Order and unknown keys survive a parse/render
/// round trip untouched.
using DotAttrs = std::vector<std::pair<std::string, std::string>>;

struct DotNodeStatement {
  std::string id;
  DotAttrs attrs;
};

struct DotEdgeStatement {
  std::string a;
  std::string b;
  DotAttrs attrs;
};

/// Syntax tree of the supported DOT subset: an undirected graph with
/// graph-level attributes, node statements, and `--` edge statements.
struct DotDocument {
  std::string graph_name;
  DotAttrs graph_attributes;
  std::vector<DotNodeStatement> node_statements;
  std::vector<DotEdgeStatement> edge_statements;
};

/// Tokenizer-level failure, with 1-based position in the input text.
class DotParseError : public std::runtime_error {
 public:
  DotParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// The text is syntactically fine but does not carry a valid instance:
/// a required attribute is missing or malformed, an id is bad, or an
/// edge names an undefined node.
class DotSchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const DotAttrs::value_type* find_attr(const DotAttrs& attrs,
                                      std::string_view key);

DotDocument document_from_graph(const TransportGraph& g);
std::string render_dot(const DotDocument& doc);

/// Canonical instance emission: nodes by id, edges by (min id, max id),
/// integers bare, reals in shortest round-trip form. Byte-identical for
/// equal graphs.
std::string emit_dot(const TransportGraph& g);

DotDocument parse_dot_document(std::string_view text);

/// Schema interpretation of a parsed document; checks structure but not
/// instance semantics (use validate() for that).
TransportGraph graph_from_document(const DotDocument& doc);

/// Full inverse of emit_dot: parse, interpret, then validate; any
/// violation is raised as DotSchemaError.
TransportGraph parse_dot(std::string_view text);

}  // namespace haul
