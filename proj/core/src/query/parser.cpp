// Copyright 2026 The Plexflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "plexflow/query/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "plexflow/vocab/terms.hpp"
#include "rdf/text_cursor.hpp"

namespace plexflow::query {
namespace {

using detail::TextCursor;

constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool is_name_char(char c) {
  return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) ||
         c == '-';
}

bool is_var_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

// Keywords that are valid SPARQL but deliberately outside the subset.
const std::set<std::string>& aggregate_names() {
  static const std::set<std::string> kNames = {
      "COUNT", "SUM", "AVG", "MIN", "MAX", "SAMPLE", "GROUP_CONCAT"};
  return kNames;
}

class QueryParser {
 public:
  QueryParser(std::string_view text, const rdf::PrefixMap& predeclared)
      : in_(text) {
    query_.prefixes = predeclared;
  }

  Query parse() {
    prologue();
    select_clause();
    skip_ws();
    if (accept_keyword("WHERE")) skip_ws();
    if (in_.peek() != '{') in_.fail("expected '{' to open the WHERE clause");
    query_.where = group();
    solution_modifiers();
    skip_ws();
    if (!in_.eof()) {
      std::string word = upper(peek_word());
      if (word == "VALUES") in_.unsupported("trailing VALUES block");
      in_.fail("unexpected content after query");
    }
    check_projection();
    return std::move(query_);
  }

 private:
  // ---- lexical helpers -------------------------------------------------

  void skip_ws() {
    while (!in_.eof()) {
      char c = in_.peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        in_.get();
      } else if (c == '#') {
        while (!in_.eof() && in_.peek() != '\n') in_.get();
      } else {
        break;
      }
    }
  }

  std::string_view peek_word() const {
    std::string_view rest = in_.text().substr(in_.position());
    std::size_t n = 0;
    while (n < rest.size() && (std::isalnum(static_cast<unsigned char>(rest[n])) ||
                               rest[n] == '_')) {
      ++n;
    }
    return rest.substr(0, n);
  }

  // A bare keyword: the word must not continue as a prefixed name.
  bool at_keyword(std::string_view kw) const {
    std::string_view word = peek_word();
    if (upper(word) != kw) return false;
    char next = in_.peek(word.size());
    return next != ':' && !is_name_char(next);
  }

  bool at_prefixed_name() const {
    std::string_view rest = in_.text().substr(in_.position());
    std::size_t n = 0;
    while (n < rest.size() && (is_name_char(rest[n]) || rest[n] == '.')) ++n;
    return n < rest.size() && rest[n] == ':';
  }

  bool accept_keyword(std::string_view kw) {
    if (!at_keyword(kw)) return false;
    in_.advance(kw.size());
    return true;
  }

  void expect(char c) {
    skip_ws();
    if (in_.peek() != c) {
      if (in_.eof()) in_.fail(std::string("expected '") + c + "' before end of query");
      in_.fail(std::string("expected '") + c + "', found '" + in_.peek() + "'");
    }
    in_.get();
  }

  // ---- prologue and projection ------------------------------------------

  void prologue() {
    for (;;) {
      skip_ws();
      if (accept_keyword("PREFIX")) {
        skip_ws();
        std::string prefix;
        while (!in_.eof() && in_.peek() != ':') {
          char c = in_.peek();
          if (!is_name_char(c) && c != '.') in_.fail("invalid prefix name");
          prefix += in_.get();
        }
        if (in_.eof()) in_.fail("expected ':' in PREFIX declaration");
        in_.get();
        skip_ws();
        query_.prefixes[prefix] = read_iriref();
      } else if (at_keyword("BASE")) {
        in_.unsupported("BASE");
      } else {
        return;
      }
    }
  }

  void select_clause() {
    for (std::string_view form : {"CONSTRUCT", "ASK", "DESCRIBE"}) {
      if (at_keyword(form)) in_.unsupported(std::string(form) + " query form");
    }
    if (!accept_keyword("SELECT")) in_.fail("expected SELECT");
    skip_ws();
    if (accept_keyword("DISTINCT")) {
      query_.distinct = true;
    } else if (at_keyword("REDUCED")) {
      in_.unsupported("REDUCED");
    }
    skip_ws();
    if (in_.peek() == '*') {
      in_.get();
      query_.select_all = true;
    } else {
      for (;;) {
        skip_ws();
        char c = in_.peek();
        if (c == '?' || c == '$') {
          query_.projection.push_back(read_variable());
        } else if (c == '(') {
          in_.unsupported("projection expression (aggregate or AS)");
        } else {
          break;
        }
      }
      if (query_.projection.empty()) in_.fail("expected variables or '*' after SELECT");
    }
    skip_ws();
    if (at_keyword("FROM")) in_.unsupported("FROM dataset clause");
  }

  void solution_modifiers() {
    skip_ws();
    if (at_keyword("GROUP")) in_.unsupported("GROUP BY");
    if (at_keyword("HAVING")) in_.unsupported("HAVING");
    if (accept_keyword("ORDER")) {
      skip_ws();
      if (!accept_keyword("BY")) in_.fail("expected BY after ORDER");
      for (;;) {
        skip_ws();
        if (accept_keyword("ASC") || at_keyword("DESC")) {
          bool descending = accept_keyword("DESC");
          expect('(');
          skip_ws();
          if (in_.peek() != '?' && in_.peek() != '$') {
            in_.unsupported("ORDER BY expression");
          }
          query_.order_by.push_back({read_variable(), descending});
          expect(')');
        } else if (in_.peek() == '?' || in_.peek() == '$') {
          query_.order_by.push_back({read_variable(), false});
        } else if (in_.peek() == '(') {
          in_.unsupported("ORDER BY expression");
        } else {
          break;
        }
      }
      if (query_.order_by.empty()) in_.fail("expected a variable after ORDER BY");
    }
    skip_ws();
    if (at_keyword("LIMIT")) in_.unsupported("LIMIT");
    if (at_keyword("OFFSET")) in_.unsupported("OFFSET");
  }

  void check_projection() {
    std::vector<std::string> vars = pattern_variables(query_.where);
    if (query_.select_all) return;
    for (const std::string& v : query_.projection) {
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
        throw ParseError("projected variable ?" + v +
                             " does not appear in the WHERE pattern",
                         0, 0);
      }
    }
  }

  // ---- group graph patterns ---------------------------------------------

  std::vector<Element> group() {
    expect('{');
    std::vector<Element> elements;
    for (;;) {
      skip_ws();
      if (in_.eof()) in_.fail("unterminated group: expected '}'");
      char c = in_.peek();
      if (c == '}') {
        in_.get();
        return elements;
      }
      if (c == '.') {
        in_.get();
        continue;
      }
      if (c == '{') {
        group();
        skip_ws();
        if (at_keyword("UNION")) in_.unsupported("UNION");
        in_.unsupported("nested group pattern");
      }
      if (accept_keyword("FILTER")) {
        Element e;
        e.kind = ElementKind::kFilter;
        skip_ws();
        e.filter = in_.peek() == '(' ? bracketed() : primary();
        elements.push_back(std::move(e));
        continue;
      }
      if (accept_keyword("OPTIONAL") || at_keyword("MINUS")) {
        bool minus = accept_keyword("MINUS");
        Element e;
        e.kind = minus ? ElementKind::kMinus : ElementKind::kOptional;
        skip_ws();
        e.group = group();
        elements.push_back(std::move(e));
        continue;
      }
      if (accept_keyword("VALUES")) {
        elements.push_back(values());
        continue;
      }
      for (std::string_view kw : {"UNION", "BIND", "GRAPH", "SERVICE"}) {
        if (at_keyword(kw)) in_.unsupported(std::string(kw));
      }
      if (at_keyword("SELECT")) in_.unsupported("subquery");
      triples_block(elements);
    }
  }

  Element values() {
    Element e;
    e.kind = ElementKind::kValues;
    ValuesClause clause;
    skip_ws();
    if (in_.peek() == '(') in_.unsupported("multi-variable VALUES");
    clause.variable = read_variable();
    expect('{');
    for (;;) {
      skip_ws();
      if (in_.peek() == '}') {
        in_.get();
        break;
      }
      if (in_.eof()) in_.fail("unterminated VALUES block");
      if (accept_keyword("UNDEF")) {
        clause.rows.push_back(std::nullopt);
      } else {
        clause.rows.push_back(constant_term());
      }
    }
    e.values = std::move(clause);
    return e;
  }

  void triples_block(std::vector<Element>& out) {
    PatternTerm subject = subject_term();
    for (;;) {
      skip_ws();
      bool closure = false;
      PatternTerm predicate = predicate_term(closure);
      for (;;) {
        skip_ws();
        PatternTerm object = object_term();
        Element e;
        e.kind = ElementKind::kTriple;
        e.triple = TriplePatternNode{subject, predicate, object, closure};
        out.push_back(std::move(e));
        skip_ws();
        if (in_.peek() != ',') break;
        in_.get();
      }
      skip_ws();
      if (in_.peek() != ';') break;
      while (in_.peek() == ';') {
        in_.get();
        skip_ws();
      }
      if (in_.peek() == '.' || in_.peek() == '}') break;
    }
    skip_ws();
    if (in_.peek() == '.') {
      in_.get();
    } else if (in_.peek() != '}' && !starts_keyword_element()) {
      in_.fail("expected '.', ';', ',' or '}' after triple pattern");
    }
  }

  bool starts_keyword_element() const {
    for (std::string_view kw :
         {"FILTER", "OPTIONAL", "MINUS", "VALUES", "UNION", "BIND", "GRAPH",
          "SERVICE"}) {
      if (at_keyword(kw)) return true;
    }
    return in_.peek() == '{';
  }

  PatternTerm subject_term() {
    skip_ws();
    char c = in_.peek();
    if (c == '?' || c == '$') return Variable{read_variable()};
    if (c == '[') in_.unsupported("blank node property list '[ ]'");
    if (c == '(') in_.unsupported("collection '( )'");
    if (in_.starts_with("_:")) in_.unsupported("blank node in query pattern");
    if (c == '"' || c == '\'') in_.fail("literal cannot be a subject");
    return iri_term();
  }

  PatternTerm predicate_term(bool& closure) {
    char c = in_.peek();
    if (c == '^') in_.unsupported("inverse property path '^'");
    if (c == '(') in_.unsupported("property path group");
    if (c == '!') in_.unsupported("negated property set");
    PatternTerm p;
    bool is_variable = false;
    if (c == '?' || c == '$') {
      p = Variable{read_variable()};
      is_variable = true;
    } else if (c == 'a' && !is_name_char(in_.peek(1)) && in_.peek(1) != ':') {
      in_.get();
      p = rdf::Term::iri(vocab::rdf::kType);
    } else {
      p = iri_term();
    }
    char m = in_.peek();
    if (m == '+') {
      if (is_variable) in_.fail("'+' requires an IRI predicate");
      in_.get();
      closure = true;
    } else if (m == '*') {
      in_.unsupported("property path '*'");
    } else if (m == '?' && !is_var_char(in_.peek(1))) {
      in_.unsupported("property path '?'");
    } else if (m == '/') {
      in_.unsupported("sequence property path '/'");
    } else if (m == '|') {
      in_.unsupported("alternative property path '|'");
    }
    skip_ws();
    if (in_.peek() == '/' ) in_.unsupported("sequence property path '/'");
    if (in_.peek() == '|') in_.unsupported("alternative property path '|'");
    return p;
  }

  PatternTerm object_term() {
    char c = in_.peek();
    if (c == '?' || c == '$') return Variable{read_variable()};
    if (c == '[') in_.unsupported("blank node property list '[ ]'");
    if (c == '(') in_.unsupported("collection '( )'");
    if (in_.starts_with("_:")) in_.unsupported("blank node in query pattern");
    return constant_term();
  }

  // ---- terms -----------------------------------------------------------

  std::string read_variable() {
    char sigil = in_.peek();
    if (sigil != '?' && sigil != '$') in_.fail("expected a variable");
    in_.get();
    std::string name;
    while (!in_.eof() && is_var_char(in_.peek())) name += in_.get();
    if (name.empty()) in_.fail("empty variable name");
    return name;
  }

  std::string read_iriref() {
    if (in_.peek() != '<') in_.fail("expected IRI");
    std::size_t line = in_.line();
    std::size_t column = in_.column();
    in_.get();
    std::string iri;
    for (;;) {
      if (in_.eof() || in_.peek() == '\n') in_.fail("unterminated IRI");
      char c = in_.get();
      if (c == '>') break;
      if (c == '\\') {
        char kind = in_.eof() ? '\0' : in_.get();
        if (kind == 'u') {
          detail::read_uchar(in_, 4, iri);
        } else if (kind == 'U') {
          detail::read_uchar(in_, 8, iri);
        } else {
          in_.fail("bad escape sequence in IRI");
        }
        continue;
      }
      if (c == ' ' || c == '"' || c == '{' || c == '}' || c == '|' ||
          c == '^' || c == '`' || c == '<') {
        in_.fail("invalid character in IRI");
      }
      iri += c;
    }
    if (!rdf::is_absolute_iri(iri)) {
      throw UnsupportedError("relative IRI reference <" + iri + ">", line,
                             column);
    }
    return iri;
  }

  rdf::Term iri_term() {
    if (in_.peek() == '<') return rdf::Term::iri(read_iriref());
    std::size_t line = in_.line();
    std::size_t column = in_.column();
    std::string prefix;
    while (!in_.eof() && in_.peek() != ':' &&
           (is_name_char(in_.peek()) || in_.peek() == '.')) {
      prefix += in_.get();
    }
    if (in_.peek() != ':') {
      if (prefix.empty()) {
        if (in_.eof()) in_.fail("unexpected end of query");
        in_.fail(std::string("unexpected character '") + in_.peek() + "'");
      }
      in_.fail("expected an IRI or prefixed name, found '" + prefix + "'");
    }
    in_.get();
    auto it = query_.prefixes.find(prefix);
    if (it == query_.prefixes.end()) {
      throw ParseError("unknown prefix '" + prefix + ":'", line, column);
    }
    // Local part; a trailing '.' ends the triple instead.
    std::string_view rest = in_.text().substr(in_.position());
    std::size_t i = 0;
    std::size_t end = 0;
    while (i < rest.size()) {
      char c = rest[i];
      if (is_name_char(c) || c == ':') {
        end = ++i;
      } else if (c == '.') {
        ++i;
      } else if (c == '%' && i + 2 < rest.size() && detail::is_hex(rest[i + 1]) &&
                 detail::is_hex(rest[i + 2])) {
        i += 3;
        end = i;
      } else {
        break;
      }
    }
    std::string local(rest.substr(0, end));
    in_.advance(end);
    return rdf::Term::iri(it->second + local);
  }

  rdf::Term constant_term() {
    char c = in_.peek();
    if (c == '"' || c == '\'') return string_literal();
    if (c == '+' || c == '-' || c == '.' ||
        std::isdigit(static_cast<unsigned char>(c))) {
      return number();
    }
    if (at_keyword("TRUE")) {
      in_.advance(4);
      return rdf::Term::typed_literal("true", std::string(kXsd) + "boolean");
    }
    if (at_keyword("FALSE")) {
      in_.advance(5);
      return rdf::Term::typed_literal("false", std::string(kXsd) + "boolean");
    }
    return iri_term();
  }

  rdf::Term string_literal() {
    char quote = in_.peek();
    std::string triple(3, quote);
    bool long_form = in_.starts_with(triple);
    in_.advance(long_form ? 3 : 1);
    std::string lexical;
    for (;;) {
      if (in_.eof()) in_.fail("unterminated string literal");
      if (long_form) {
        if (in_.starts_with(triple) && in_.peek(3) != quote) {
          in_.advance(3);
          break;
        }
      } else {
        char c = in_.peek();
        if (c == '\n' || c == '\r') in_.fail("newline in string literal");
        if (c == quote) {
          in_.get();
          break;
        }
      }
      char c = in_.get();
      if (c == '\\') {
        detail::read_string_escape(in_, lexical);
      } else {
        lexical += c;
      }
    }
    if (in_.peek() == '@') {
      in_.get();
      std::string tag;
      while (!in_.eof() && (std::isalnum(static_cast<unsigned char>(in_.peek())) ||
                            in_.peek() == '-')) {
        tag += in_.get();
      }
      if (!rdf::is_valid_language_tag(tag)) in_.fail("invalid language tag");
      return rdf::Term::lang_literal(lexical, tag);
    }
    if (in_.starts_with("^^")) {
      in_.advance(2);
      rdf::Term datatype = iri_term();
      return rdf::Term::typed_literal(lexical, datatype.value());
    }
    return rdf::Term::literal(lexical);
  }

  rdf::Term number() {
    std::string text;
    auto digits = [&] {
      std::size_t n = 0;
      while (std::isdigit(static_cast<unsigned char>(in_.peek()))) {
        text += in_.get();
        ++n;
      }
      return n;
    };
    if (in_.peek() == '+' || in_.peek() == '-') text += in_.get();
    std::size_t int_digits = digits();
    bool decimal = false;
    if (in_.peek() == '.' && std::isdigit(static_cast<unsigned char>(in_.peek(1)))) {
      text += in_.get();
      digits();
      decimal = true;
    }
    bool exponent = false;
    if ((in_.peek() == 'e' || in_.peek() == 'E') && (int_digits > 0 || decimal)) {
      text += in_.get();
      if (in_.peek() == '+' || in_.peek() == '-') text += in_.get();
      if (digits() == 0) in_.fail("malformed exponent");
      exponent = true;
    }
    if (int_digits == 0 && !decimal) in_.fail("malformed number");
    const char* type = exponent ? "double" : decimal ? "decimal" : "integer";
    return rdf::Term::typed_literal(text, std::string(kXsd) + type);
  }

  // ---- FILTER expressions ------------------------------------------------

  Expr bracketed() {
    expect('(');
    Expr e = or_expr();
    expect(')');
    return e;
  }

  static Expr node(ExprKind kind, std::vector<Expr> args) {
    Expr e;
    e.kind = kind;
    e.args = std::move(args);
    return e;
  }

  Expr or_expr() {
    Expr left = and_expr();
    for (;;) {
      skip_ws();
      if (!in_.starts_with("||")) return left;
      in_.advance(2);
      left = node(ExprKind::kOr, {std::move(left), and_expr()});
    }
  }

  Expr and_expr() {
    Expr left = relational();
    for (;;) {
      skip_ws();
      if (!in_.starts_with("&&")) return left;
      in_.advance(2);
      left = node(ExprKind::kAnd, {std::move(left), relational()});
    }
  }

  Expr relational() {
    Expr left = unary();
    skip_ws();
    ExprKind kind;
    if (in_.starts_with("!=")) {
      in_.advance(2);
      kind = ExprKind::kNotEqual;
    } else if (in_.starts_with("<=")) {
      in_.advance(2);
      kind = ExprKind::kLessEqual;
    } else if (in_.starts_with(">=")) {
      in_.advance(2);
      kind = ExprKind::kGreaterEqual;
    } else if (in_.peek() == '=') {
      in_.get();
      kind = ExprKind::kEqual;
    } else if (in_.peek() == '<') {
      in_.get();
      kind = ExprKind::kLess;
    } else if (in_.peek() == '>') {
      in_.get();
      kind = ExprKind::kGreater;
    } else {
      if (at_keyword("IN") || at_keyword("NOT")) in_.unsupported("IN / NOT IN");
      char c = in_.peek();
      if (c == '+' || c == '-' || c == '*' || c == '/') {
        in_.unsupported("arithmetic expression");
      }
      return left;
    }
    return node(kind, {std::move(left), unary()});
  }

  Expr unary() {
    skip_ws();
    if (in_.peek() == '!' && in_.peek(1) != '=') {
      in_.get();
      return node(ExprKind::kNot, {unary()});
    }
    return primary();
  }

  Expr primary() {
    skip_ws();
    char c = in_.peek();
    if (c == '(') return bracketed();
    if (c == '?' || c == '$') {
      Expr e;
      e.kind = ExprKind::kVariable;
      e.variable = read_variable();
      return e;
    }
    if (c == '-' && !std::isdigit(static_cast<unsigned char>(in_.peek(1)))) {
      in_.unsupported("arithmetic expression");
    }
    std::string word = upper(peek_word());
    if (!word.empty() && !at_prefixed_name() &&
        !std::isdigit(static_cast<unsigned char>(c))) {
      if (word == "TRUE" || word == "FALSE") {
        Expr e;
        e.term = constant_term();
        return e;
      }
      if (word == "BOUND") {
        in_.advance(5);
        expect('(');
        skip_ws();
        Expr e;
        e.kind = ExprKind::kBound;
        e.variable = read_variable();
        expect(')');
        return e;
      }
      if (word == "REGEX") {
        in_.advance(5);
        expect('(');
        std::vector<Expr> args;
        args.push_back(or_expr());
        expect(',');
        args.push_back(or_expr());
        skip_ws();
        if (in_.peek() == ',') {
          in_.get();
          args.push_back(or_expr());
        }
        expect(')');
        return node(ExprKind::kRegex, std::move(args));
      }
      if (word == "STR") {
        in_.advance(3);
        expect('(');
        Expr arg = or_expr();
        expect(')');
        return node(ExprKind::kStr, {std::move(arg)});
      }
      if (word == "EXISTS" || word == "NOT") in_.unsupported("EXISTS / NOT EXISTS");
      if (aggregate_names().count(word) != 0) {
        in_.unsupported("aggregate " + word);
      }
      in_.unsupported("function " + word);
    }
    Expr e;
    e.term = constant_term();
    skip_ws();
    if (in_.peek() == '(') in_.unsupported("IRI function call");
    return e;
  }

  TextCursor in_;
  Query query_;
};

}  // namespace

Query parse_query(std::string_view text, const rdf::PrefixMap& predeclared) {
  return QueryParser(text, predeclared).parse();
}

}  // namespace plexflow::query
