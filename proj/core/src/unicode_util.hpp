// core/src/unicode_util.hpp

// Copyright 2026  Phonoscore Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// Thin ICU wrappers used by the profile loader and the segmenter.  Not
// installed; everything here is an implementation detail.

#ifndef PHONOSCORE_UNICODE_UTIL_HPP_
#define PHONOSCORE_UNICODE_UTIL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace phonoscore::uni {

// Invalid UTF-8 byte sequences decode to U+FFFD.
std::u32string utf8_to_u32(std::string_view s);
std::string u32_to_utf8(std::u32string_view s);
std::string cp_to_utf8(char32_t cp);

// Canonical decomposition with canonical mark reordering (NFD).
std::u32string nfd(std::u32string_view s);

char32_t to_lower(char32_t cp);
bool is_space(char32_t cp);
std::uint8_t combining_class(char32_t cp);

}  // namespace phonoscore::uni

#endif  // PHONOSCORE_UNICODE_UTIL_HPP_
