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

#include "plexflow/rdf/term.hpp"

#include <cctype>
#include <cstdio>
#include <utility>

namespace plexflow::rdf {
namespace {

bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

bool is_absolute_iri(std::string_view iri) noexcept {
  if (iri.empty() || !is_alpha(iri.front())) return false;
  std::size_t i = 1;
  while (i < iri.size() && (is_alpha(iri[i]) || is_digit(iri[i]) ||
                            iri[i] == '+' || iri[i] == '-' || iri[i] == '.')) {
    ++i;
  }
  if (i >= iri.size() || iri[i] != ':') return false;
  for (char c : iri) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20) return false;
    switch (c) {
      case '<': case '>': case '"': case '{': case '}':
      case '|': case '^': case '`': case '\\':
        return false;
      default:
        break;
    }
  }
  return true;
}

bool is_valid_blank_label(std::string_view label) noexcept {
  if (label.empty()) return false;
  for (char c : label) {
    if (!is_alpha(c) && !is_digit(c) && c != '_') return false;
  }
  return true;
}

bool is_valid_language_tag(std::string_view tag) noexcept {
  // [a-zA-Z]+ ('-' [a-zA-Z0-9]+)*
  std::size_t i = 0;
  while (i < tag.size() && is_alpha(tag[i])) ++i;
  if (i == 0) return false;
  while (i < tag.size()) {
    if (tag[i] != '-') return false;
    std::size_t start = ++i;
    while (i < tag.size() && (is_alpha(tag[i]) || is_digit(tag[i]))) ++i;
    if (i == start) return false;
  }
  return true;
}

std::string escape_literal(std::string_view lexical) {
  std::string out;
  out.reserve(lexical.size() + 2);
  for (char c : lexical) {
    switch (c) {
      case '\b': out += "\\b"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\f': out += "\\f"; break;
      case '\r': out += "\\r"; break;
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default: {
        auto u = static_cast<unsigned char>(c);
        if (u < 0x20 || u == 0x7F) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", u);
          out += buf;
        } else {
          out += c;
        }
      }
    }
  }
  return out;
}

Term::Term(TermKind kind, std::string value, std::string datatype,
           std::string language)
    : kind_(kind),
      value_(std::move(value)),
      datatype_(std::move(datatype)),
      language_(std::move(language)) {
  switch (kind_) {
    case TermKind::kIri:
      ntriples_ = "<" + value_ + ">";
      break;
    case TermKind::kBlank:
      ntriples_ = "_:" + value_;
      break;
    case TermKind::kLiteral:
      ntriples_ = "\"" + escape_literal(value_) + "\"";
      if (!language_.empty()) {
        ntriples_ += "@" + language_;
      } else if (datatype_ != kXsdString) {
        ntriples_ += "^^<" + datatype_ + ">";
      }
      break;
  }
}

Term Term::iri(std::string_view iri) {
  if (!is_absolute_iri(iri)) {
    throw TermError("not an absolute IRI: '" + std::string(iri) + "'");
  }
  return Term(TermKind::kIri, std::string(iri), {}, {});
}

Term Term::blank(std::string_view label) {
  if (!is_valid_blank_label(label)) {
    throw TermError("invalid blank node label: '" + std::string(label) + "'");
  }
  return Term(TermKind::kBlank, std::string(label), {}, {});
}

Term Term::literal(std::string_view lexical) {
  return Term(TermKind::kLiteral, std::string(lexical),
              std::string(kXsdString), {});
}

Term Term::typed_literal(std::string_view lexical, std::string_view datatype) {
  if (datatype == kRdfLangString) {
    throw TermError("rdf:langString literal requires a language tag");
  }
  if (!is_absolute_iri(datatype)) {
    throw TermError("literal datatype is not an absolute IRI: '" +
                    std::string(datatype) + "'");
  }
  return Term(TermKind::kLiteral, std::string(lexical), std::string(datatype),
              {});
}

Term Term::lang_literal(std::string_view lexical, std::string_view language) {
  if (!is_valid_language_tag(language)) {
    throw TermError("invalid language tag: '" + std::string(language) + "'");
  }
  return Term(TermKind::kLiteral, std::string(lexical),
              std::string(kRdfLangString), to_lower(language));
}

}  // namespace plexflow::rdf
