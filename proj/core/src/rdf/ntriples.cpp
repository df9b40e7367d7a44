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

#include "plexflow/rdf/ntriples.hpp"

#include <optional>

#include "rdf/text_cursor.hpp"

namespace plexflow::rdf {
namespace {

using detail::TextCursor;

class NTriplesReader {
 public:
  NTriplesReader(std::string_view text, bool allow_graph_label)
      : in_(text), allow_graph_label_(allow_graph_label) {}

  Graph read() {
    Graph g;
    while (!in_.eof()) {
      skip_blanks();
      if (in_.eof()) break;
      char c = in_.peek();
      if (c == '#' || c == '\n' || c == '\r') {
        skip_to_eol();
        continue;
      }
      Term s = read_subject();
      skip_blanks();
      Term p = read_iri();
      skip_blanks();
      Term o = read_object();
      skip_blanks();
      if (allow_graph_label_ && (in_.peek() == '<' || in_.peek() == '_')) {
        // The graph label is validated and discarded.
        if (in_.peek() == '<') {
          read_iri();
        } else {
          read_blank();
        }
        skip_blanks();
      }
      if (in_.peek() != '.') in_.fail("expected '.' at end of statement");
      in_.get();
      skip_blanks();
      if (!in_.eof() && in_.peek() != '#' && in_.peek() != '\n' &&
          in_.peek() != '\r') {
        in_.fail("unexpected content after '.'");
      }
      skip_to_eol();
      g.insert(Triple(std::move(s), std::move(p), std::move(o)));
    }
    return g;
  }

 private:
  void skip_blanks() {
    while (in_.peek() == ' ' || in_.peek() == '\t') in_.get();
  }

  void skip_to_eol() {
    while (!in_.eof() && in_.peek() != '\n') in_.get();
    if (!in_.eof()) in_.get();
  }

  Term read_subject() {
    if (in_.peek() == '<') return read_iri();
    if (in_.peek() == '_') return read_blank();
    in_.fail("expected IRI or blank node as subject");
  }

  Term read_object() {
    char c = in_.peek();
    if (c == '<') return read_iri();
    if (c == '_') return read_blank();
    if (c == '"') return read_literal();
    in_.fail("expected IRI, blank node or literal as object");
  }

  std::string read_iri_text() {
    if (in_.peek() != '<') in_.fail("expected '<'");
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
      iri += c;
    }
    return iri;
  }

  Term read_iri() {
    std::size_t line = in_.line();
    std::size_t column = in_.column();
    std::string iri = read_iri_text();
    if (!is_absolute_iri(iri)) {
      throw ParseError("not an absolute IRI: <" + iri + ">", line, column);
    }
    return Term::iri(iri);
  }

  Term read_blank() {
    if (!in_.starts_with("_:")) in_.fail("expected blank node label '_:'");
    in_.advance(2);
    std::string label;
    for (;;) {
      char c = in_.peek();
      bool name_char = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                       (c >= '0' && c <= '9') || c == '_' || c == '-' ||
                       c == '.' || static_cast<unsigned char>(c) >= 0x80;
      if (!name_char || in_.eof()) break;
      // A trailing '.' terminates the statement instead.
      if (c == '.') {
        char next = in_.peek(1);
        if (next == ' ' || next == '\t' || next == '\n' || next == '\r' ||
            next == '\0' || next == '#') {
          break;
        }
      }
      label += in_.get();
    }
    if (!is_valid_blank_label(label)) {
      in_.fail("blank node label must match [A-Za-z0-9_]+: '_:" + label + "'");
    }
    return Term::blank(label);
  }

  Term read_literal() {
    in_.get();  // opening quote
    std::string lexical;
    for (;;) {
      if (in_.eof() || in_.peek() == '\n' || in_.peek() == '\r') {
        in_.fail("unterminated string literal");
      }
      char c = in_.get();
      if (c == '"') break;
      if (c == '\\') {
        detail::read_string_escape(in_, lexical);
        continue;
      }
      lexical += c;
    }
    if (in_.peek() == '@') {
      in_.get();
      std::string tag;
      while (!in_.eof()) {
        char c = in_.peek();
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '-';
        if (!ok) break;
        tag += in_.get();
      }
      if (!is_valid_language_tag(tag)) in_.fail("invalid language tag");
      return Term::lang_literal(lexical, tag);
    }
    if (in_.starts_with("^^")) {
      in_.advance(2);
      Term datatype = read_iri();
      if (datatype.value() == kRdfLangString) {
        in_.fail("rdf:langString literal without language tag");
      }
      return Term::typed_literal(lexical, datatype.value());
    }
    return Term::literal(lexical);
  }

  TextCursor in_;
  bool allow_graph_label_;
};

}  // namespace

Graph parse_ntriples(std::string_view text) {
  return NTriplesReader(text, false).read();
}

Graph parse_nquads_as_triples(std::string_view text) {
  return NTriplesReader(text, true).read();
}

std::string to_ntriples_line(const Triple& t) {
  return t.subject.ntriples() + " " + t.predicate.ntriples() + " " +
         t.object.ntriples() + " .\n";
}

std::string serialize_ntriples(const Graph& g) {
  std::string out;
  for (const Triple& t : g.triples()) out += to_ntriples_line(t);
  return out;
}

}  // namespace plexflow::rdf
