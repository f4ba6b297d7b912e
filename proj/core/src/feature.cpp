// core/src/feature.cpp

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

#include "phonoscore/feature.hpp"

namespace phonoscore {

const char* ToneCategoryName(ToneCategory t) {
  switch (t) {
    case ToneCategory::None: return "None";
    case ToneCategory::High: return "High";
    case ToneCategory::Low: return "Low";
    case ToneCategory::Mid: return "Mid";
    case ToneCategory::Downstep: return "Downstep";
  }
  return "None";
}

std::optional<ToneCategory> ToneCategoryFromName(const std::string& name) {
  if (name == "None") return ToneCategory::None;
  if (name == "High") return ToneCategory::High;
  if (name == "Low") return ToneCategory::Low;
  if (name == "Mid") return ToneCategory::Mid;
  if (name == "Downstep") return ToneCategory::Downstep;
  return std::nullopt;
}

const char* DimensionCategoryName(DimensionCategory c) {
  switch (c) {
    case DimensionCategory::MajorClass: return "major-class";
    case DimensionCategory::Laryngeal: return "laryngeal";
    case DimensionCategory::Place: return "place";
    case DimensionCategory::Manner: return "manner";
    case DimensionCategory::Vowel: return "vowel";
    case DimensionCategory::Suprasegmental: return "suprasegmental";
    case DimensionCategory::Padding: return "padding";
  }
  return "padding";
}

std::optional<DimensionCategory> DimensionCategoryFromName(const std::string& name) {
  if (name == "major-class") return DimensionCategory::MajorClass;
  if (name == "laryngeal") return DimensionCategory::Laryngeal;
  if (name == "place") return DimensionCategory::Place;
  if (name == "manner") return DimensionCategory::Manner;
  if (name == "vowel") return DimensionCategory::Vowel;
  if (name == "suprasegmental") return DimensionCategory::Suprasegmental;
  if (name == "padding") return DimensionCategory::Padding;
  return std::nullopt;
}

}  // namespace phonoscore
