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

#include "plexflow/rdf/turtle.hpp"

#include <cctype>
#include <optional>

#include "rdf/text_cursor.hpp"

namespace plexflow::rdf {
namespace {

using detail::TextCursor;

constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool is_local_escape(char c) {
  static constexpr std::string_view kChars = "_~.-!$&'()*+,;=/?#@%";
  return kChars.find(c) != std::string_view::npos;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::toupper(static_cast<unsigned char>(a[i])) !=
        std::toupper(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

class TurtleReader {
 public:
  TurtleReader(std::string_view text, const PrefixMap& predeclared)
      : in_(text), prefixes_(predeclared) {}

  Graph read() {
    for (;;) {
      skip_ws();
      if (in_.eof()) break;
      statement();
    }
    return std::move(graph_);
  }

 private:
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

  void expect(char c) {
    skip_ws();
    if (in_.peek() != c) {
      in_.fail(std::string("expected '") + c + "'");
    }
    in_.get();
  }

  // Bare word at the cursor (letters only), without consuming it.
  std::string_view peek_keyword() const {
    std::size_t n = 0;
    std::string_view rest = in_.text().substr(in_.position());
    while (n < rest.size() && std::isalpha(static_cast<unsigned char>(rest[n])))
      ++n;
    if (n < rest.size() && (is_name_char(rest[n]) || rest[n] == ':')) return {};
    return rest.substr(0, n);
  }

  void statement() {
    if (in_.starts_with("@prefix")) {
      in_.advance(7);
      prefix_directive();
      expect('.');
      return;
    }
    if (in_.starts_with("@base")) in_.unsupported("@base directive");
    std::string_view word = peek_keyword();
    if (iequals(word, "PREFIX")) {
      in_.advance(6);
      prefix_directive();
      return;
    }
    if (iequals(word, "BASE")) in_.unsupported("BASE directive");
    if (iequals(word, "GRAPH")) in_.unsupported("GRAPH block");
    if (in_.peek() == '{') in_.unsupported("GRAPH block");
    triples();
    expect('.');
  }

  void prefix_directive() {
    skip_ws();
    std::string prefix;
    while (!in_.eof() && in_.peek() != ':') {
      char c = in_.peek();
      if (!is_name_char(c) && c != '.') in_.fail("invalid prefix name");
      prefix += in_.get();
    }
    if (in_.eof()) in_.fail("expected ':' after prefix name");
    if (!prefix.empty() && (prefix.back() == '.' || !std::isalpha(static_cast<unsigned char>(prefix.front())))) {
      in_.fail("invalid prefix name '" + prefix + "'");
    }
    in_.get();  // ':'
    skip_ws();
    std::string iri = read_iriref();
    prefixes_[prefix] = iri;
  }

  void triples() {
    if (in_.peek() == '[') in_.unsupported("anonymous blank node '[ ]'");
    if (in_.peek() == '(') in_.unsupported("collection '( )'");
    if (in_.peek() == '"' || in_.peek() == '\'') {
      in_.fail("literal cannot be a subject");
    }
    Term subject = in_.starts_with("_:") ? read_blank() : read_iri();
    predicate_object_list(subject);
  }

  void predicate_object_list(const Term& subject) {
    skip_ws();
    Term verb = read_verb();
    object_list(subject, verb);
    for (;;) {
      skip_ws();
      if (in_.peek() != ';') break;
      while (in_.peek() == ';') {
        in_.get();
        skip_ws();
      }
      if (in_.peek() == '.' || in_.eof()) break;
      Term next = read_verb();
      object_list(subject, next);
    }
  }

  void object_list(const Term& subject, const Term& verb) {
    for (;;) {
      skip_ws();
      Term object = read_object();
      graph_.insert(Triple(subject, verb, std::move(object)));
      skip_ws();
      if (in_.peek() != ',') break;
      in_.get();
    }
  }

  Term read_verb() {
    if (in_.peek() == 'a') {
      char next = in_.peek(1);
      if (!is_name_char(next) && next != ':' && next != '.') {
        in_.get();
        return Term::iri(kRdfType);
      }
    }
    if (in_.starts_with("_:")) in_.fail("blank node cannot be a predicate");
    return read_iri();
  }

  Term read_object() {
    char c = in_.peek();
    if (c == '[') in_.unsupported("anonymous blank node '[ ]'");
    if (c == '(') in_.unsupported("collection '( )'");
    if (c == '"' || c == '\'') return read_literal();
    if (in_.starts_with("_:")) return read_blank();
    if (c == '+' || c == '-' || c == '.' || (c >= '0' && c <= '9')) {
      return read_number();
    }
    std::string_view word = peek_keyword();
    if (word == "true" || word == "false") {
      in_.advance(word.size());
      return Term::typed_literal(word, std::string(kXsd) + "boolean");
    }
    return read_iri();
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
      if (static_cast<unsigned char>(c) <= 0x20) in_.fail("invalid character in IRI");
      iri += c;
    }
    if (!is_absolute_iri(iri)) {
      throw UnsupportedError("relative IRI reference <" + iri + ">", line,
                             column);
    }
    return iri;
  }

  Term read_iri() {
    if (in_.peek() == '<') return Term::iri(read_iriref());
    return read_prefixed_name();
  }

  Term read_prefixed_name() {
    std::size_t line = in_.line();
    std::size_t column = in_.column();
    std::string prefix;
    while (!in_.eof() && in_.peek() != ':') {
      char c = in_.peek();
      if (!is_name_char(c) && c != '.') break;
      prefix += in_.get();
    }
    if (in_.peek() != ':') {
      if (prefix.empty()) {
        in_.fail(std::string("unexpected character '") + in_.peek() + "'");
      }
      in_.fail("expected prefixed name, found '" + prefix + "'");
    }
    in_.get();
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) {
      throw ParseError("unknown prefix '" + prefix + ":'", line, column);
    }
    return Term::iri(it->second + read_local_name());
  }

  std::string read_local_name() {
    // Measure the extent first: a trailing '.' belongs to the statement.
    std::string_view rest = in_.text().substr(in_.position());
    std::size_t i = 0;
    std::size_t end = 0;
    while (i < rest.size()) {
      char c = rest[i];
      if (is_name_char(c) || c == ':') {
        ++i;
        end = i;
      } else if (c == '.') {
        ++i;
      } else if (c == '%' && i + 2 < rest.size() &&
                 detail::is_hex(rest[i + 1]) && detail::is_hex(rest[i + 2])) {
        i += 3;
        end = i;
      } else if (c == '\\' && i + 1 < rest.size() &&
                 is_local_escape(rest[i + 1])) {
        i += 2;
        end = i;
      } else {
        break;
      }
    }
    std::string local;
    for (std::size_t k = 0; k < end;) {
      if (rest[k] == '\\') {
        local += rest[k + 1];
        k += 2;
      } else {
        local += rest[k];
        ++k;
      }
    }
    in_.advance(end);
    return local;
  }

  Term read_blank() {
    in_.advance(2);
    std::string_view rest = in_.text().substr(in_.position());
    std::size_t i = 0;
    std::size_t end = 0;
    while (i < rest.size() && (is_name_char(rest[i]) || rest[i] == '.')) {
      ++i;
      if (rest[i - 1] != '.') end = i;
    }
    std::string label(rest.substr(0, end));
    if (!is_valid_blank_label(label)) {
      in_.fail("blank node label must match [A-Za-z0-9_]+: '_:" + label + "'");
    }
    in_.advance(end);
    return Term::blank(label);
  }

  Term read_literal() {
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
      while (!in_.eof() &&
             (std::isalnum(static_cast<unsigned char>(in_.peek())) ||
              in_.peek() == '-')) {
        tag += in_.get();
      }
      if (!is_valid_language_tag(tag)) in_.fail("invalid language tag");
      return Term::lang_literal(lexical, tag);
    }
    if (in_.starts_with("^^")) {
      in_.advance(2);
      Term datatype = read_iri();
      return Term::typed_literal(lexical, datatype.value());
    }
    return Term::literal(lexical);
  }

  Term read_number() {
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
    if (in_.peek() == '.' &&
        std::isdigit(static_cast<unsigned char>(in_.peek(1)))) {
      text += in_.get();
      digits();
      decimal = true;
    }
    bool exponent = false;
    if (in_.peek() == 'e' || in_.peek() == 'E') {
      text += in_.get();
      if (in_.peek() == '+' || in_.peek() == '-') text += in_.get();
      if (digits() == 0) in_.fail("malformed exponent");
      exponent = true;
    }
    if (int_digits == 0 && !decimal) in_.fail("malformed number");
    const char* type = exponent ? "double" : decimal ? "decimal" : "integer";
    return Term::typed_literal(text, std::string(kXsd) + type);
  }

  TextCursor in_;
  PrefixMap prefixes_;
  Graph graph_;
};

}  // namespace

Graph parse_turtle(std::string_view text, const PrefixMap& predeclared) {
  return TurtleReader(text, predeclared).read();
}

}  // namespace plexflow::rdf
