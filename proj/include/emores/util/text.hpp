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
#include <string>
#include <string_view>
#include <vector>

namespace emores::util {

// Text primitives matching CPython string semantics where the sentiment
// rule engine depends on them: whitespace splitting uses the full Unicode
// whitespace set str.split() recognizes, and case handling covers ASCII plus
// the Latin-1 supplement (the lexicon's full alphabet). Code points beyond
// Latin-1 pass through caseless.

/// Decodes one UTF-8 code point at byte offset i, advancing i. Invalid bytes
/// are consumed one at a time and returned as-is (0x80..0xFF), which keeps
/// them opaque: never whitespace, never cased, never punctuation.
std::uint32_t decode_utf8(std::string_view s, std::size_t& i);

/// Number of code points in the string.
std::size_t utf8_length(std::string_view s);

bool is_py_whitespace(std::uint32_t cp);

/// Splits on runs of whitespace, discarding empties (Python str.split()).
std::vector<std::string> split_whitespace(std::string_view text);

/// Lowercases ASCII and Latin-1 uppercase letters; other code points are
/// returned unchanged.
std::uint32_t lower_cp(std::uint32_t cp);

std::string to_lower(std::string_view s);

/// True iff the token has at least one cased character and no lowercase one
/// (Python str.isupper(), restricted to ASCII + Latin-1 cased letters).
bool is_upper_token(std::string_view s);

/// Strips leading and trailing ASCII punctuation (the 32 characters of
/// Python's string.punctuation).
std::string_view strip_ascii_punct(std::string_view token);

bool is_ascii_punct(char c);

/// Number of '!' (resp. '?') bytes anywhere in the text.
int count_char(std::string_view text, char c);

bool starts_with(std::string_view s, std::string_view prefix);

}  // namespace emores::util
