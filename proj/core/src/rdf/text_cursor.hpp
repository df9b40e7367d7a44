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

// Character cursor shared by the hand-written RDF and SPARQL readers.

#ifndef PLEXFLOW_SRC_RDF_TEXT_CURSOR_HPP_
#define PLEXFLOW_SRC_RDF_TEXT_CURSOR_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "plexflow/util/error.hpp"

namespace plexflow::detail {

class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  bool eof() const noexcept { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const noexcept {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const noexcept {
    return text_.substr(pos_, s.size()) == s;
  }
  char get() noexcept {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && !eof(); ++i) get();
  }

  std::size_t position() const noexcept { return pos_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  std::string_view text() const noexcept { return text_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }
  [[noreturn]] void unsupported(const std::string& construct) const {
    throw UnsupportedError(construct, line_, column_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

inline bool is_hex(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') ||
         (c >= 'A' && c <= 'F');
}

inline void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Reads the hex digits of a UCHAR after "\u" or "\U" has been consumed.
inline void read_uchar(TextCursor& in, std::size_t digits, std::string& out) {
  std::uint32_t cp = 0;
  for (std::size_t i = 0; i < digits; ++i) {
    char c = in.peek();
    if (!is_hex(c)) in.fail("bad escape sequence: expected hex digit");
    in.get();
    cp = cp * 16 + static_cast<std::uint32_t>(
                       c <= '9' ? c - '0' : (c | 0x20) - 'a' + 10);
  }
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    in.fail("bad escape sequence: invalid code point");
  }
  append_utf8(out, cp);
}

// Reads an ECHAR or UCHAR; the backslash has already been consumed.
inline void read_string_escape(TextCursor& in, std::string& out) {
  if (in.eof()) in.fail("bad escape sequence at end of input");
  char c = in.get();
  switch (c) {
    case 't': out += '\t'; break;
    case 'b': out += '\b'; break;
    case 'n': out += '\n'; break;
    case 'r': out += '\r'; break;
    case 'f': out += '\f'; break;
    case '"': out += '"'; break;
    case '\'': out += '\''; break;
    case '\\': out += '\\'; break;
    case 'u': read_uchar(in, 4, out); break;
    case 'U': read_uchar(in, 8, out); break;
    default:
      in.fail(std::string("bad escape sequence '\\") + c + "'");
  }
}

}  // namespace plexflow::detail

#endif  // PLEXFLOW_SRC_RDF_TEXT_CURSOR_HPP_
