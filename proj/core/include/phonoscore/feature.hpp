// core/include/phonoscore/feature.hpp

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

#ifndef PHONOSCORE_FEATURE_HPP_
#define PHONOSCORE_FEATURE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace phonoscore {

// Every segment of every language is described by a fixed-width ternary
// articulatory vector: +1 feature present, -1 absent, 0 not applicable.
inline constexpr int kFeatureDims = 24;

struct FeatureVector {
  std::array<std::int8_t, kFeatureDims> v{};

  bool operator==(const FeatureVector&) const = default;

  // True iff every component is in {-1, 0, +1}.
  bool ternary() const {
    for (std::int8_t x : v)
      if (x != -1 && x != 0 && x != 1) return false;
    return true;
  }
  bool all_zero() const {
    for (std::int8_t x : v)
      if (x != 0) return false;
    return true;
  }
};

enum class ToneCategory { None, High, Low, Mid, Downstep };

const char* ToneCategoryName(ToneCategory t);
std::optional<ToneCategory> ToneCategoryFromName(const std::string& name);

enum class DimensionCategory {
  MajorClass, Laryngeal, Place, Manner, Vowel, Suprasegmental, Padding
};

const char* DimensionCategoryName(DimensionCategory c);
std::optional<DimensionCategory> DimensionCategoryFromName(const std::string& name);

// One named slot of the 24-vector.  The slot layout is per-language: two
// profiles may put unrelated features at the same index, which is fine
// because evaluation is always monolingual.
struct FeatureDimension {
  int index = 0;
  std::string abbr;       // e.g. "SYL", "VBK", "TH"
  std::string long_name;  // e.g. "Syllabic", "V_Back", "Tone_H"
  DimensionCategory category = DimensionCategory::Padding;
  bool is_tone = false;

  bool operator==(const FeatureDimension&) const = default;
};

}  // namespace phonoscore

#endif  // PHONOSCORE_FEATURE_HPP_
