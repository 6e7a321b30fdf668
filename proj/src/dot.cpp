#include "haul/dot.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "haul/numfmt.hpp"

namespace haul {

DotParseError::DotParseError(int line, int column, const std::string& message)
    : std::runtime_error("dot parse error at line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

const DotAttrs::value_type* find_attr(const DotAttrs& attrs,
                                      std::string_view key) {
  for (const auto& attr : attrs) {
    if (attr.first == key) return &attr;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Emission

namespace {

bool needs_quoting(std::string_view value) {
  if (value.empty()) return true;
  for (char c : value) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
          c == '.' || c == '-' || c == '+')) {
      return true;
    }
  }
  return false;
}

void append_value(std::string& out, const std::string& value) {
  if (!needs_quoting(value)) {
    out += value;
    return;
  }
  out += '"';
  for (char c : value) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
}

void append_attrs(std::string& out, const DotAttrs& attrs) {
  if (attrs.empty()) return;
  out += " [";
  bool first = true;
  for (const auto& [key, value] : attrs) {
    if (!first) out += ", ";
    first = false;
    out += key;
    out += '=';
    append_value(out, value);
  }
  out += ']';
}

}  // namespace

DotDocument document_from_graph(const TransportGraph& g) {
  DotDocument doc;
  doc.graph_name = "transport";
  doc.graph_attributes.emplace_back("map_size", format_real(g.map_size()));

  for (const Node& n : g.nodes()) {
    DotNodeStatement stmt;
    stmt.id = std::to_string(n.id);
    stmt.attrs.emplace_back(
        "label", "{" + std::to_string(n.id) + "," + to_string(n.kind) + "}");
    stmt.attrs.emplace_back("kind", to_string(n.kind));
    stmt.attrs.emplace_back("x", format_real(n.x));
    stmt.attrs.emplace_back("y", format_real(n.y));
    stmt.attrs.emplace_back("supply", std::to_string(n.supply));
    stmt.attrs.emplace_back("demand", std::to_string(n.demand));
    doc.node_statements.push_back(std::move(stmt));
  }

  std::vector<Edge> sorted = g.edges();
  std::sort(sorted.begin(), sorted.end(), [](const Edge& l, const Edge& r) {
    return std::pair(std::min(l.a, l.b), std::max(l.a, l.b)) <
           std::pair(std::min(r.a, r.b), std::max(r.a, r.b));
  });
  for (const Edge& e : sorted) {
    DotEdgeStatement stmt;
    stmt.a = std::to_string(std::min(e.a, e.b));
    stmt.b = std::to_string(std::max(e.a, e.b));
    stmt.attrs.emplace_back("distance", format_real(e.distance_km));
    stmt.attrs.emplace_back("velocity", std::to_string(e.velocity_kmh));
    stmt.attrs.emplace_back("time", std::to_string(e.time_min));
    doc.edge_statements.push_back(std::move(stmt));
  }
  return doc;
}

std::string render_dot(const DotDocument& doc) {
  std::string out = "graph";
  if (!doc.graph_name.empty()) {
    out += ' ';
    out += doc.graph_name;
  }
  out += " {\n";
  for (const auto& [key, value] : doc.graph_attributes) {
    out += "  " + key + "=";
    append_value(out, value);
    out += ";\n";
  }
  for (const auto& stmt : doc.node_statements) {
    out += "  " + stmt.id;
    append_attrs(out, stmt.attrs);
    out += ";\n";
  }
  for (const auto& stmt : doc.edge_statements) {
    out += "  " + stmt.a + " -- " + stmt.b;
    append_attrs(out, stmt.attrs);
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string emit_dot(const TransportGraph& g) {
  return render_dot(document_from_graph(g));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class TokenKind {
  Identifier,  // bare word or number
  String,      // was quoted in the source
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Equals,
  Semicolon,
  Comma,
  EdgeOp,  // --
  End,
};

struct Token {
  TokenKind kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    const int line = line_;
    const int column = column_;
    if (pos_ >= text_.size()) return {TokenKind::End, "", line, column};
    const char c = text_[pos_];
    switch (c) {
      case '{':
        advance();
        return {TokenKind::LBrace, "{", line, column};
      case '}':
        advance();
        return {TokenKind::RBrace, "}", line, column};
      case '[':
        advance();
        return {TokenKind::LBracket, "[", line, column};
      case ']':
        advance();
        return {TokenKind::RBracket, "]", line, column};
      case '=':
        advance();
        return {TokenKind::Equals, "=", line, column};
      case ';':
        advance();
        return {TokenKind::Semicolon, ";", line, column};
      case ',':
        advance();
        return {TokenKind::Comma, ",", line, column};
      case '"':
        return lex_string();
      default:
        break;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
      advance();
      advance();
      return {TokenKind::EdgeOp, "--", line, column};
    }
    if (is_word_char(c)) return lex_word();
    throw DotParseError(line, column,
                        std::string("unexpected character '") + c + "'");
  }

 private:
  static bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '.' || c == '-' || c == '+';
  }

  void advance() {
    if (pos_ < text_.size()) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void skip_blank() {
    for (;;) {
      while (pos_ < text_.size() &&
             std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      }
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
          text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
          text_[pos_ + 1] == '*') {
        const int line = line_;
        const int column = column_;
        advance();
        advance();
        while (pos_ + 1 < text_.size() &&
               !(text_[pos_] == '*' && text_[pos_ + 1] == '/')) {
          advance();
        }
        if (pos_ + 1 >= text_.size()) {
          throw DotParseError(line, column, "unterminated comment");
        }
        advance();
        advance();
        continue;
      }
      return;
    }
  }

  Token lex_string() {
    const int line = line_;
    const int column = column_;
    advance();  // opening quote
    std::string value;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance();
      value += text_[pos_];
      advance();
    }
    if (pos_ >= text_.size()) {
      throw DotParseError(line, column, "unterminated string");
    }
    advance();  // closing quote
    return {TokenKind::String, value, line, column};
  }

  Token lex_word() {
    const int line = line_;
    const int column = column_;
    std::string value;
    // A '--' run is the edge operator, never part of a word.
    while (pos_ < text_.size() && is_word_char(text_[pos_])) {
      if (text_[pos_] == '-' && pos_ + 1 < text_.size() &&
          text_[pos_ + 1] == '-') {
        break;
      }
      value += text_[pos_];
      advance();
    }
    return {TokenKind::Identifier, value, line, column};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  DotDocument parse() {
    DotDocument doc;
    expect_keyword("graph");
    if (current_.kind == TokenKind::Identifier) {
      doc.graph_name = current_.text;
      shift();
    }
    expect(TokenKind::LBrace, "'{'");
    while (current_.kind != TokenKind::RBrace) {
      if (current_.kind == TokenKind::End) {
        throw DotParseError(current_.line, current_.column,
                            "unexpected end of input, expected '}'");
      }
      parse_statement(doc);
    }
    shift();  // '}'
    if (current_.kind != TokenKind::End) {
      throw DotParseError(current_.line, current_.column,
                          "trailing content after '}'");
    }
    return doc;
  }

 private:
  void shift() { current_ = lexer_.next(); }

  void expect(TokenKind kind, const std::string& what) {
    if (current_.kind != kind) {
      throw DotParseError(current_.line, current_.column,
                          "expected " + what + ", got '" + current_.text + "'");
    }
    shift();
  }

  void expect_keyword(const std::string& word) {
    if (current_.kind != TokenKind::Identifier || current_.text != word) {
      throw DotParseError(current_.line, current_.column,
                          "expected '" + word + "', got '" + current_.text +
                              "'");
    }
    shift();
  }

  std::string take_value() {
    if (current_.kind != TokenKind::Identifier &&
        current_.kind != TokenKind::String) {
      throw DotParseError(current_.line, current_.column,
                          "expected a value, got '" + current_.text + "'");
    }
    std::string value = current_.text;
    shift();
    return value;
  }

  DotAttrs parse_attr_list() {
    DotAttrs attrs;
    shift();  // '['
    while (current_.kind != TokenKind::RBracket) {
      if (current_.kind == TokenKind::Comma) {
        shift();
        continue;
      }
      if (current_.kind != TokenKind::Identifier) {
        throw DotParseError(current_.line, current_.column,
                            "expected an attribute name, got '" +
                                current_.text + "'");
      }
      std::string key = current_.text;
      shift();
      expect(TokenKind::Equals, "'='");
      attrs.emplace_back(std::move(key), take_value());
    }
    shift();  // ']'
    return attrs;
  }

  void parse_statement(DotDocument& doc) {
    if (current_.kind != TokenKind::Identifier) {
      throw DotParseError(current_.line, current_.column,
                          "expected a statement, got '" + current_.text + "'");
    }
    std::string first = current_.text;
    shift();

    if (current_.kind == TokenKind::Equals) {  // graph attribute
      shift();
      doc.graph_attributes.emplace_back(std::move(first), take_value());
    } else if (current_.kind == TokenKind::EdgeOp) {  // edge statement
      shift();
      DotEdgeStatement stmt;
      stmt.a = std::move(first);
      if (current_.kind != TokenKind::Identifier) {
        throw DotParseError(current_.line, current_.column,
                            "expected an edge endpoint, got '" +
                                current_.text + "'");
      }
      stmt.b = current_.text;
      shift();
      if (current_.kind == TokenKind::LBracket) stmt.attrs = parse_attr_list();
      doc.edge_statements.push_back(std::move(stmt));
    } else {  // node statement
      DotNodeStatement stmt;
      stmt.id = std::move(first);
      if (current_.kind == TokenKind::LBracket) stmt.attrs = parse_attr_list();
      doc.node_statements.push_back(std::move(stmt));
    }
    if (current_.kind == TokenKind::Semicolon) shift();
  }

  Lexer lexer_;
  Token current_{TokenKind::End, "", 0, 0};
};

NodeId parse_node_ref(const std::string& text, const char* what,
                      std::size_t node_count) {
  std::int64_t value = 0;
  try {
    value = parse_int(text);
  } catch (const std::invalid_argument&) {
    throw DotSchemaError(std::string(what) + " '" + text +
                         "' is not an integer node id");
  }
  if (value < 0 || static_cast<std::size_t>(value) >= node_count) {
    throw DotSchemaError(std::string(what) + " '" + text +
                         "': dangling edge endpoint");
  }
  return static_cast<NodeId>(value);
}

const std::string& require_attr(const DotAttrs& attrs, std::string_view key,
                                const std::string& context) {
  const auto* attr = find_attr(attrs, key);
  if (attr == nullptr) {
    throw DotSchemaError(context + ": missing attribute '" + std::string(key) +
                         "'");
  }
  return attr->second;
}

double attr_real(const DotAttrs& attrs, std::string_view key,
                 const std::string& context) {
  try {
    return parse_real(require_attr(attrs, key, context));
  } catch (const std::invalid_argument&) {
    throw DotSchemaError(context + ": attribute '" + std::string(key) +
                         "' is not a number");
  }
}

std::int64_t attr_int(const DotAttrs& attrs, std::string_view key,
                      const std::string& context) {
  try {
    return parse_int(require_attr(attrs, key, context));
  } catch (const std::invalid_argument&) {
    throw DotSchemaError(context + ": attribute '" + std::string(key) +
                         "' is not an integer");
  }
}

}  // namespace

DotDocument parse_dot_document(std::string_view text) {
  return Parser(text).parse();
}

TransportGraph graph_from_document(const DotDocument& doc) {
  double map_size = 1000.0;
  if (const auto* attr = find_attr(doc.graph_attributes, "map_size")) {
    try {
      map_size = parse_real(attr->second);
    } catch (const std::invalid_argument&) {
      throw DotSchemaError("graph attribute 'map_size' is not a number");
    }
  }

  // Node statements may arrive in any order but must cover ids 0..n-1.
  const std::size_t n = doc.node_statements.size();
  std::vector<const DotNodeStatement*> by_id(n, nullptr);
  for (const auto& stmt : doc.node_statements) {
    std::int64_t id = 0;
    try {
      id = parse_int(stmt.id);
    } catch (const std::invalid_argument&) {
      throw DotSchemaError("node id '" + stmt.id + "' is not an integer");
    }
    if (id < 0 || static_cast<std::size_t>(id) >= n) {
      throw DotSchemaError("node id " + stmt.id +
                           " is outside the dense range 0.." +
                           std::to_string(n == 0 ? 0 : n - 1));
    }
    if (by_id[static_cast<std::size_t>(id)] != nullptr) {
      throw DotSchemaError("duplicate node id " + stmt.id);
    }
    by_id[static_cast<std::size_t>(id)] = &stmt;
  }

  TransportGraph g(map_size);
  for (std::size_t id = 0; id < n; ++id) {
    const DotNodeStatement& stmt = *by_id[id];
    const std::string context = "node " + stmt.id;
    const std::string& kind_text = require_attr(stmt.attrs, "kind", context);
    NodeKind kind;
    if (kind_text == "store") {
      kind = NodeKind::Store;
    } else if (kind_text == "warehouse") {
      kind = NodeKind::Warehouse;
    } else if (kind_text == "joint") {
      kind = NodeKind::Joint;
    } else {
      throw DotSchemaError(context + ": attribute 'kind' must be one of "
                                     "store/warehouse/joint, got '" +
                           kind_text + "'");
    }
    g.add_node(kind, attr_real(stmt.attrs, "x", context),
               attr_real(stmt.attrs, "y", context),
               attr_int(stmt.attrs, "supply", context),
               attr_int(stmt.attrs, "demand", context));
  }

  for (const auto& stmt : doc.edge_statements) {
    const std::string context = "edge " + stmt.a + " -- " + stmt.b;
    Edge e;
    e.a = parse_node_ref(stmt.a, "edge endpoint", n);
    e.b = parse_node_ref(stmt.b, "edge endpoint", n);
    e.distance_km = attr_real(stmt.attrs, "distance", context);
    const std::int64_t velocity = attr_int(stmt.attrs, "velocity", context);
    e.velocity_kmh = static_cast<int>(velocity);
    e.time_min = attr_int(stmt.attrs, "time", context);
    g.add_edge(e);
  }
  return g;
}

TransportGraph parse_dot(std::string_view text) {
  TransportGraph g = graph_from_document(parse_dot_document(text));
  const std::vector<std::string> violations = validate(g);
  if (!violations.empty()) {
    std::ostringstream message;
    message << "instance fails validation (" << violations.size()
            << " violation" << (violations.size() == 1 ? "" : "s") << "):";
    for (const std::string& v : violations) message << "\n  - " << v;
    throw DotSchemaError(message.str());
  }
  return g;
}

}  // namespace haul
