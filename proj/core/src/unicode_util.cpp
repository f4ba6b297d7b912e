// core/src/unicode_util.cpp

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

#include "unicode_util.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf16.h>

#include "phonoscore/error.hpp"

namespace phonoscore::uni {

namespace {

const icu::Normalizer2& nfd_instance() {
  UErrorCode ec = U_ZERO_ERROR;
  const icu::Normalizer2* inst = icu::Normalizer2::getNFDInstance(ec);
  if (U_FAILURE(ec) || inst == nullptr)
    throw Error(std::string("ICU NFD unavailable: ") + u_errorName(ec));
  return *inst;
}

std::u32string ustring_to_u32(const icu::UnicodeString& us) {
  std::u32string out;
  out.reserve(static_cast<size_t>(us.countChar32()));
  for (int32_t i = 0; i < us.length();) {
    UChar32 c = us.char32At(i);
    out.push_back(static_cast<char32_t>(c));
    i += U16_LENGTH(c);
  }
  return out;
}

}  // namespace

std::u32string utf8_to_u32(std::string_view s) {
  icu::UnicodeString us = icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
  return ustring_to_u32(us);
}

std::string u32_to_utf8(std::u32string_view s) {
  icu::UnicodeString us;
  for (char32_t cp : s) us.append(static_cast<UChar32>(cp));
  std::string out;
  us.toUTF8String(out);
  return out;
}

std::string cp_to_utf8(char32_t cp) {
  return u32_to_utf8(std::u32string_view(&cp, 1));
}

std::u32string nfd(std::u32string_view s) {
  icu::UnicodeString us;
  for (char32_t cp : s) us.append(static_cast<UChar32>(cp));
  UErrorCode ec = U_ZERO_ERROR;
  icu::UnicodeString norm = nfd_instance().normalize(us, ec);
  if (U_FAILURE(ec))
    throw Error(std::string("Unicode normalization failed: ") + u_errorName(ec));
  return ustring_to_u32(norm);
}

char32_t to_lower(char32_t cp) {
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
}

bool is_space(char32_t cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp));
}

std::uint8_t combining_class(char32_t cp) {
  return u_getCombiningClass(static_cast<UChar32>(cp));
}

}  // namespace phonoscore::uni
