// core/src/builtin_profiles.hpp

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

#ifndef PHONOSCORE_BUILTIN_PROFILES_HPP_
#define PHONOSCORE_BUILTIN_PROFILES_HPP_

namespace phonoscore::detail {

// Bundled profile documents, embedded at build time from core/data/*.json.
extern const char* const kUnemeProfileJson;
extern const char* const kYorubaProfileJson;
extern const char* const kEnglishProfileJson;

}  // namespace phonoscore::detail

#endif  // PHONOSCORE_BUILTIN_PROFILES_HPP_
