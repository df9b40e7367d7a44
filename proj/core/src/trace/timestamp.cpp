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

#include "plexflow/trace/timestamp.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>

#include "plexflow/util/error.hpp"

namespace plexflow::trace {
namespace {

// Reads exactly `width` digits at `pos`.
bool digits(std::string_view s, std::size_t pos, std::size_t width, int& out) {
  if (pos + width > s.size()) return false;
  for (std::size_t i = pos; i < pos + width; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  std::from_chars(s.data() + pos, s.data() + pos + width, out);
  return true;
}

}  // namespace

Timestamp Timestamp::parse(std::string_view iso) {
  using namespace std::chrono;
  auto fail = [&](std::size_t col) -> Timestamp {
    throw ParseError("malformed timestamp '" + std::string(iso) + "'", 1, col + 1);
  };
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, sec = 0;
  if (!digits(iso, 0, 4, y) || iso.size() < 19 || iso[4] != '-') return fail(0);
  if (!digits(iso, 5, 2, mo) || iso[7] != '-') return fail(5);
  if (!digits(iso, 8, 2, d) || iso[10] != 'T') return fail(8);
  if (!digits(iso, 11, 2, h) || iso[13] != ':') return fail(11);
  if (!digits(iso, 14, 2, mi) || iso[16] != ':') return fail(14);
  if (!digits(iso, 17, 2, sec)) return fail(17);
  std::size_t pos = 19;
  int ms = 0;
  if (pos < iso.size() && iso[pos] == '.') {
    std::size_t n = 0;
    while (pos + 1 + n < iso.size() && n < 4 && iso[pos + 1 + n] >= '0' && iso[pos + 1 + n] <= '9') ++n;
    if (n == 0 || n > 3) return fail(pos);
    digits(iso, pos + 1, n, ms);
    for (std::size_t k = n; k < 3; ++k) ms *= 10;
    pos += 1 + n;
  }
  if (pos < iso.size() && iso[pos] == 'Z') ++pos;
  if (pos != iso.size()) return fail(pos);

  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || sec > 59) return fail(0);
  std::int64_t days_since = sys_days{ymd}.time_since_epoch().count();
  std::int64_t total = ((days_since * 24 + h) * 60 + mi) * 60 + sec;
  return from_epoch_ms(total * 1000 + ms);
}

std::string Timestamp::iso() const {
  using namespace std::chrono;
  const std::int64_t secs = epoch_seconds();
  const int ms = static_cast<int>(ms_ - secs * 1000);
  std::int64_t days_since = secs >= 0 ? secs / 86400 : -((-secs + 86399) / 86400);
  std::int64_t rem = secs - days_since * 86400;
  year_month_day ymd{sys_days{days{days_since}}};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d.%03d",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), static_cast<int>(rem / 3600),
                static_cast<int>(rem / 60 % 60), static_cast<int>(rem % 60), ms);
  return buf;
}

}  // namespace plexflow::trace
