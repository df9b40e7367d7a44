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

#ifndef PLEXFLOW_TRACE_TIMESTAMP_HPP_
#define PLEXFLOW_TRACE_TIMESTAMP_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace plexflow::trace {

// UTC instant with millisecond precision. Rendered as
// "YYYY-MM-DDTHH:MM:SS.mmm", the lexical form used for xsd:dateTime values.
class Timestamp {
 public:
  constexpr Timestamp() = default;
  static constexpr Timestamp from_epoch_ms(std::int64_t ms) { return Timestamp(ms); }
  static constexpr Timestamp from_epoch_seconds(std::int64_t s) { return Timestamp(s * 1000); }
  // Accepts an optional fractional part of 1-3 digits and an optional
  // trailing "Z". Throws ParseError otherwise.
  static Timestamp parse(std::string_view iso);

  constexpr std::int64_t epoch_ms() const { return ms_; }
  // Floor division, so instants before 1970 stay ordered.
  constexpr std::int64_t epoch_seconds() const {
    return ms_ >= 0 ? ms_ / 1000 : -((-ms_ + 999) / 1000);
  }
  std::string iso() const;

  friend constexpr auto operator<=>(const Timestamp&, const Timestamp&) = default;

 private:
  constexpr explicit Timestamp(std::int64_t ms) : ms_(ms) {}
  std::int64_t ms_ = 0;
};

}  // namespace plexflow::trace

#endif  // PLEXFLOW_TRACE_TIMESTAMP_HPP_
