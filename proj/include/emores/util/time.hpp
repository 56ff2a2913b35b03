// Copyright 2026 the emores authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy of
// the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations under
// the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace emores::util {

/// Seconds since the Unix epoch, always UTC.
using UtcSeconds = std::int64_t;

constexpr std::int64_t kSecondsPerDay = 86400;

/// Parses an ISO-8601 timestamp ("2017-08-25T12:34:56Z", space separator,
/// fractional seconds, or a +HH:MM / +HHMM / +HH numeric offset). Fractions
/// are truncated; the result is normalized to UTC. Returns nullopt on any
/// syntactic or calendar violation.
std::optional<UtcSeconds> parse_iso8601(std::string_view s);

/// Formats as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_iso8601(UtcSeconds t);

/// Floor division (round toward negative infinity).
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

/// UTC calendar day number (days since 1970-01-01).
constexpr std::int64_t utc_day(UtcSeconds t) { return floor_div(t, kSecondsPerDay); }

/// Civil date <-> day count (Howard Hinnant's algorithms).
std::int64_t days_from_civil(int y, unsigned m, unsigned d);
void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d);

}  // namespace emores::util
