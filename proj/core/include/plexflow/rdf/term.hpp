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

#ifndef PLEXFLOW_RDF_TERM_HPP_
#define PLEXFLOW_RDF_TERM_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "plexflow/util/error.hpp"

namespace plexflow::rdf {

inline constexpr std::string_view kXsdString =
    "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kRdfLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";

// Raised when a term would violate its invariants (relative IRI, bad blank
// label, malformed language tag).
class TermError : public Error {
 public:
  using Error::Error;
};

enum class TermKind : std::uint8_t { kIri, kBlank, kLiteral };

/// An RDF term. Immutable; equality and ordering follow the canonical
/// N-Triples form, so sorting terms sorts their serializations.
///
/// Literal identity is (lexical form, datatype, language): no value-space
/// normalization, so "01"^^xsd:int and "1"^^xsd:int are distinct terms.
/// Language tags are stored lower-cased.
class Term {
 public:
  static Term iri(std::string_view iri);
  static Term blank(std::string_view label);
  static Term literal(std::string_view lexical);
  static Term typed_literal(std::string_view lexical, std::string_view datatype);
  static Term lang_literal(std::string_view lexical, std::string_view language);

  TermKind kind() const noexcept { return kind_; }
  bool is_iri() const noexcept { return kind_ == TermKind::kIri; }
  bool is_blank() const noexcept { return kind_ == TermKind::kBlank; }
  bool is_literal() const noexcept { return kind_ == TermKind::kLiteral; }

  // IRI string, blank label, or literal lexical form.
  const std::string& value() const noexcept { return value_; }
  // Datatype IRI; empty for non-literals.
  const std::string& datatype() const noexcept { return datatype_; }
  // Lower-cased language tag; empty unless rdf:langString.
  const std::string& language() const noexcept { return language_; }

  // Canonical N-Triples serialization of this term.
  const std::string& ntriples() const noexcept { return ntriples_; }

  friend bool operator==(const Term& a, const Term& b) noexcept {
    return a.ntriples_ == b.ntriples_;
  }
  friend std::strong_ordering operator<=>(const Term& a,
                                          const Term& b) noexcept {
    return a.ntriples_.compare(b.ntriples_) <=> 0;
  }

 private:
  Term(TermKind kind, std::string value, std::string datatype,
       std::string language);

  TermKind kind_;
  std::string value_;
  std::string datatype_;
  std::string language_;
  std::string ntriples_;
};

// Syntactic check: a scheme followed by ':' and no characters that N-Triples
// forbids inside an IRIREF.
bool is_absolute_iri(std::string_view iri) noexcept;
bool is_valid_blank_label(std::string_view label) noexcept;
bool is_valid_language_tag(std::string_view tag) noexcept;

// Canonical string escaping: ECHAR for backspace, tab, LF, FF, CR, quote and
// backslash; uppercase UCHAR for other control characters; UTF-8 otherwise.
std::string escape_literal(std::string_view lexical);

}  // namespace plexflow::rdf

template <>
struct std::hash<plexflow::rdf::Term> {
  std::size_t operator()(const plexflow::rdf::Term& t) const noexcept {
    return std::hash<std::string>{}(t.ntriples());
  }
};

#endif  // PLEXFLOW_RDF_TERM_HPP_
