// core/src/profile.cpp

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

#include "phonoscore/profile.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "builtin_profiles.hpp"
#include "phonoscore/error.hpp"
#include "unicode_util.hpp"

namespace phonoscore {

using nlohmann::ordered_json;

namespace {

std::string codepoint_key(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

std::optional<char32_t> parse_codepoint_key(const std::string& key) {
  if (key.size() > 2 && (key[0] == 'U' || key[0] == 'u') && key[1] == '+') {
    char32_t cp = 0;
    for (size_t i = 2; i < key.size(); ++i) {
      char c = key[i];
      int d;
      if (c >= '0' && c <= '9') d = c - '0';
      else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
      else return std::nullopt;
      cp = cp * 16 + static_cast<char32_t>(d);
    }
    return cp;
  }
  // Also accept the literal character.
  std::u32string u = uni::utf8_to_u32(key);
  if (u.size() == 1) return u[0];
  return std::nullopt;
}

void add(std::vector<Diagnostic>* diags, std::string location, std::string message) {
  if (diags) diags->push_back({std::move(location), std::move(message)});
}

int label_unit_count(const std::u32string& nfd_label) {
  int units = 0;
  for (char32_t cp : nfd_label)
    if (uni::combining_class(cp) == 0) ++units;
  return std::max(units, 1);
}

}  // namespace

FeatureVector LanguageProfile::realized_vector(const FeatureVector& base,
                                               ToneCategory tone) const {
  if (tone == ToneCategory::None) return base;
  auto it = tone_rules.tone_dims.find(tone);
  if (it == tone_rules.tone_dims.end())
    throw Error(std::string("tone category ") + ToneCategoryName(tone) +
                " is not defined by profile '" + language_id + "'");
  FeatureVector out = base;
  for (const auto& [cat, dim] : tone_rules.tone_dims)
    out.v[dim] = (cat == tone) ? 1 : -1;
  return out;
}

FeatureVector LanguageProfile::realized_vector(const std::string& label,
                                               ToneCategory tone) const {
  const FeatureVector* base = find_base(label);
  if (base == nullptr)
    throw Error("unknown segment label '" + label + "' in profile '" +
                language_id + "'");
  return realized_vector(*base, tone);
}

bool LanguageProfile::tone_bearing(const FeatureVector& base) const {
  return syllabic_dim_ >= 0 && base.v[syllabic_dim_] == 1;
}

const FeatureVector* LanguageProfile::find_base(const std::string& label) const {
  auto it = match_table_.find(uni::nfd(uni::utf8_to_u32(label)));
  if (it == match_table_.end()) return nullptr;
  return &it->second.base;
}

std::optional<int> LanguageProfile::dim_index(const std::string& abbr) const {
  for (const FeatureDimension& d : dimensions)
    if (d.abbr == abbr) return d.index;
  return std::nullopt;
}

std::optional<char32_t> LanguageProfile::diacritic_for(ToneCategory tone) const {
  for (const auto& [cp, cat] : tone_rules.diacritics)
    if (cat == tone) return cp;
  return std::nullopt;
}

void LanguageProfile::finalize() {
  match_table_.clear();
  max_label_units_ = 1;
  for (const auto& [label, vec] : base_table) {
    std::u32string key = uni::nfd(uni::utf8_to_u32(label));
    MatchEntry entry{label, vec, label_unit_count(key)};
    max_label_units_ = std::max(max_label_units_, entry.units);
    match_table_.emplace(std::move(key), std::move(entry));
  }
  syllabic_dim_ = -1;
  if (auto idx = dim_index("SYL")) syllabic_dim_ = *idx;
}

bool LanguageProfile::operator==(const LanguageProfile& other) const {
  return language_id == other.language_id && input_mode == other.input_mode &&
         dimensions == other.dimensions && base_table == other.base_table &&
         tone_rules == other.tone_rules && normalization == other.normalization;
}

LanguageProfile parse_profile(const std::string& json_text,
                              std::vector<Diagnostic>* diagnostics) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ProfileError(std::string("profile is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ProfileError("profile document must be a JSON object");

  LanguageProfile p;

  if (j.contains("schema_version") && j["schema_version"] != 1)
    add(diagnostics, "schema_version", "unsupported schema_version (expected 1)");

  if (!j.contains("language_id") || !j["language_id"].is_string())
    throw ProfileError("profile field 'language_id' (string) is required");
  p.language_id = j["language_id"].get<std::string>();

  const std::string mode = j.value("input_mode", std::string("orthographic"));
  if (mode == "orthographic") {
    p.input_mode = InputMode::Orthographic;
  } else if (mode == "phonemic-tokens") {
    p.input_mode = InputMode::PhonemicTokens;
  } else {
    add(diagnostics, "input_mode",
        "unknown mode '" + mode + "' (expected orthographic or phonemic-tokens)");
  }

  if (!j.contains("dimensions") || !j["dimensions"].is_array())
    throw ProfileError("profile field 'dimensions' (array) is required");
  {
    int pos = 0;
    for (const auto& dj : j["dimensions"]) {
      const std::string loc = "dimensions[" + std::to_string(pos) + "]";
      FeatureDimension d;
      if (!dj.is_object()) {
        add(diagnostics, loc, "dimension entry must be an object");
        ++pos;
        continue;
      }
      d.index = dj.value("index", pos);
      d.abbr = dj.value("abbr", std::string());
      d.long_name = dj.value("long_name", std::string());
      const std::string cat = dj.value("category", std::string("padding"));
      if (auto c = DimensionCategoryFromName(cat)) {
        d.category = *c;
      } else {
        add(diagnostics, loc + ".category", "unknown category '" + cat + "'");
      }
      d.is_tone = dj.value("is_tone", false);
      if (d.abbr.empty()) add(diagnostics, loc + ".abbr", "abbr must be non-empty");
      p.dimensions.push_back(std::move(d));
      ++pos;
    }
  }

  if (!j.contains("segments") || !j["segments"].is_object())
    throw ProfileError("profile field 'segments' (object) is required");
  for (const auto& [label, arr] : j["segments"].items()) {
    const std::string loc = "segments[\"" + label + "\"]";
    FeatureVector vec{};
    if (!arr.is_array()) {
      add(diagnostics, loc, "segment row must be an array of integers");
    } else {
      if (arr.size() != kFeatureDims)
        add(diagnostics, loc,
            "expected " + std::to_string(kFeatureDims) + " values, got " +
                std::to_string(arr.size()));
      for (size_t i = 0; i < arr.size() && i < kFeatureDims; ++i) {
        if (!arr[i].is_number_integer()) {
          add(diagnostics, loc, "value " + std::to_string(i) + " is not an integer");
          continue;
        }
        long long value = arr[i].get<long long>();
        if (value < -127 || value > 127) {
          // Preserve something out-of-range so validation still flags it.
          add(diagnostics, loc, "value " + std::to_string(i) + " out of range");
          value = 127;
        }
        vec.v[i] = static_cast<std::int8_t>(value);
      }
    }
    p.base_table.emplace_back(label, vec);
  }

  if (j.contains("tone_rules")) {
    const auto& tj = j["tone_rules"];
    if (!tj.is_object()) {
      add(diagnostics, "tone_rules", "must be an object");
    } else {
      if (tj.contains("diacritics") && tj["diacritics"].is_object()) {
        for (const auto& [key, value] : tj["diacritics"].items()) {
          auto cp = parse_codepoint_key(key);
          if (!cp) {
            add(diagnostics, "tone_rules.diacritics", "bad code point key '" + key + "'");
            continue;
          }
          auto cat = ToneCategoryFromName(value.is_string() ? value.get<std::string>() : "");
          if (!cat || *cat == ToneCategory::None) {
            add(diagnostics, "tone_rules.diacritics[" + key + "]",
                "bad tone category '" + value.dump() + "'");
            continue;
          }
          p.tone_rules.diacritics[*cp] = *cat;
        }
      }
      const std::string dflt = tj.value("default_tone", std::string("None"));
      if (auto cat = ToneCategoryFromName(dflt)) {
        p.tone_rules.default_tone = *cat;
      } else {
        add(diagnostics, "tone_rules.default_tone", "bad tone category '" + dflt + "'");
      }
      if (tj.contains("tone_dims") && tj["tone_dims"].is_object()) {
        for (const auto& [key, value] : tj["tone_dims"].items()) {
          auto cat = ToneCategoryFromName(key);
          if (!cat || *cat == ToneCategory::None) {
            add(diagnostics, "tone_rules.tone_dims", "bad tone category '" + key + "'");
            continue;
          }
          if (!value.is_number_integer()) {
            add(diagnostics, "tone_rules.tone_dims." + key, "dimension index must be an integer");
            continue;
          }
          p.tone_rules.tone_dims[*cat] = value.get<int>();
        }
      }
    }
  }

  if (j.contains("normalization")) {
    const auto& nj = j["normalization"];
    if (!nj.is_object()) {
      add(diagnostics, "normalization", "must be an object");
    } else {
      p.normalization.lowercase = nj.value("lowercase", true);
      if (nj.contains("strip")) {
        if (!nj["strip"].is_array()) {
          add(diagnostics, "normalization.strip", "must be an array of characters");
        } else {
          for (const auto& s : nj["strip"]) {
            std::u32string u = uni::utf8_to_u32(s.is_string() ? s.get<std::string>() : "");
            if (u.size() != 1) {
              add(diagnostics, "normalization.strip",
                  "entry " + s.dump() + " must be a single character");
              continue;
            }
            p.normalization.strip.insert(u[0]);
          }
        }
      }
    }
  }

  return p;
}

std::vector<Diagnostic> validate_profile(const LanguageProfile& p) {
  std::vector<Diagnostic> diags;
  auto* d = &diags;

  // Dimension schema: exactly 24, indices 0..23 each used once.
  if (p.dimensions.size() != kFeatureDims)
    add(d, "dimensions",
        "expected exactly " + std::to_string(kFeatureDims) + " dimensions, got " +
            std::to_string(p.dimensions.size()));
  std::set<int> seen_indices;
  std::set<std::string> seen_abbrs;
  for (size_t i = 0; i < p.dimensions.size(); ++i) {
    const FeatureDimension& dim = p.dimensions[i];
    const std::string loc = "dimensions[" + std::to_string(i) + "]";
    if (dim.index < 0 || dim.index >= kFeatureDims)
      add(d, loc + ".index", "index " + std::to_string(dim.index) + " out of range");
    else if (!seen_indices.insert(dim.index).second)
      add(d, loc + ".index", "duplicate index " + std::to_string(dim.index));
    if (!seen_abbrs.insert(dim.abbr).second)
      add(d, loc + ".abbr", "duplicate abbreviation '" + dim.abbr + "'");
    if (dim.is_tone && dim.category != DimensionCategory::Suprasegmental)
      add(d, loc, "is_tone requires category suprasegmental");
  }

  // Segment rows: ternary values, tone slots zero, unique labels after
  // canonical decomposition.
  std::set<std::u32string> seen_labels;
  for (const auto& [label, vec] : p.base_table) {
    const std::string loc = "segments[\"" + label + "\"]";
    if (label.empty()) {
      add(d, "segments", "empty segment label");
      continue;
    }
    if (!seen_labels.insert(uni::nfd(uni::utf8_to_u32(label))).second)
      add(d, loc, "duplicate segment label (after canonical decomposition)");
    if (!vec.ternary()) add(d, loc, "vector values must be -1, 0 or +1");
    for (const FeatureDimension& dim : p.dimensions) {
      if (dim.is_tone && dim.index >= 0 && dim.index < kFeatureDims &&
          vec.v[dim.index] != 0) {
        add(d, loc, "tone dimension " + dim.abbr +
                        " must be 0 in the base table (tones are applied dynamically)");
      }
    }
  }

  // Tone rules: every named category resolves to a tone dimension.
  std::set<int> tone_targets;
  for (const auto& [cat, idx] : p.tone_rules.tone_dims) {
    const std::string loc = std::string("tone_rules.tone_dims.") + ToneCategoryName(cat);
    if (idx < 0 || idx >= static_cast<int>(p.dimensions.size())) {
      add(d, loc, "dimension index " + std::to_string(idx) + " out of range");
      continue;
    }
    if (!tone_targets.insert(idx).second)
      add(d, loc, "dimension index " + std::to_string(idx) + " assigned to two categories");
    const auto it = std::find_if(p.dimensions.begin(), p.dimensions.end(),
                                 [&](const FeatureDimension& dim) { return dim.index == idx; });
    if (it == p.dimensions.end() || !it->is_tone)
      add(d, loc, "dimension " + std::to_string(idx) + " is not a tone dimension");
  }
  for (const auto& [cp, cat] : p.tone_rules.diacritics) {
    if (!p.tone_rules.tone_dims.count(cat))
      add(d, "tone_rules.diacritics[" + codepoint_key(cp) + "]",
          std::string("category ") + ToneCategoryName(cat) + " has no tone dimension");
  }
  if (p.tone_rules.default_tone != ToneCategory::None &&
      !p.tone_rules.tone_dims.count(p.tone_rules.default_tone))
    add(d, "tone_rules.default_tone",
        std::string("category ") + ToneCategoryName(p.tone_rules.default_tone) +
            " has no tone dimension");
  if (!p.tone_rules.tone_dims.empty()) {
    bool has_syl = false;
    for (const FeatureDimension& dim : p.dimensions)
      if (dim.abbr == "SYL") has_syl = true;
    if (!has_syl)
      add(d, "dimensions", "tonal profiles need a SYL dimension to locate tone bearers");
  }

  return diags;
}

const std::vector<std::string>& builtin_profile_names() {
  static const std::vector<std::string> names = {"uneme", "yoruba", "english"};
  return names;
}

bool is_builtin_profile(const std::string& name) {
  const auto& names = builtin_profile_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

const std::string& builtin_profile_text(const std::string& name) {
  static const std::string uneme = detail::kUnemeProfileJson;
  static const std::string yoruba = detail::kYorubaProfileJson;
  static const std::string english = detail::kEnglishProfileJson;
  if (name == "uneme") return uneme;
  if (name == "yoruba") return yoruba;
  if (name == "english") return english;
  throw ProfileError("unknown builtin profile '" + name + "'");
}

LanguageProfile load_profile(const std::string& source) {
  std::string text;
  if (is_builtin_profile(source)) {
    text = builtin_profile_text(source);
  } else {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw IoError("cannot read profile file '" + source + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  std::vector<Diagnostic> diags;
  LanguageProfile p = parse_profile(text, &diags);
  auto more = validate_profile(p);
  diags.insert(diags.end(), more.begin(), more.end());
  if (!diags.empty()) {
    std::ostringstream msg;
    msg << "profile '" << source << "' failed validation:";
    for (const Diagnostic& diag : diags)
      msg << "\n  " << diag.location << ": " << diag.message;
    throw ProfileError(msg.str());
  }
  p.finalize();
  return p;
}

std::string serialize_profile(const LanguageProfile& p) {
  ordered_json j;
  j["schema_version"] = 1;
  j["language_id"] = p.language_id;
  j["input_mode"] =
      p.input_mode == InputMode::Orthographic ? "orthographic" : "phonemic-tokens";
  j["dimensions"] = ordered_json::array();
  for (const FeatureDimension& dim : p.dimensions) {
    j["dimensions"].push_back({{"index", dim.index},
                               {"abbr", dim.abbr},
                               {"long_name", dim.long_name},
                               {"category", DimensionCategoryName(dim.category)},
                               {"is_tone", dim.is_tone}});
  }
  j["segments"] = ordered_json::object();
  for (const auto& [label, vec] : p.base_table) {
    ordered_json row = ordered_json::array();
    for (int i = 0; i < kFeatureDims; ++i) row.push_back(static_cast<int>(vec.v[i]));
    j["segments"][label] = std::move(row);
  }
  ordered_json diacritics = ordered_json::object();
  for (const auto& [cp, cat] : p.tone_rules.diacritics)
    diacritics[codepoint_key(cp)] = ToneCategoryName(cat);
  ordered_json tone_dims = ordered_json::object();
  for (const auto& [cat, idx] : p.tone_rules.tone_dims)
    tone_dims[ToneCategoryName(cat)] = idx;
  j["tone_rules"] = {{"diacritics", std::move(diacritics)},
                     {"default_tone", ToneCategoryName(p.tone_rules.default_tone)},
                     {"tone_dims", std::move(tone_dims)}};
  ordered_json strip = ordered_json::array();
  for (char32_t cp : p.normalization.strip) strip.push_back(uni::cp_to_utf8(cp));
  j["normalization"] = {{"lowercase", p.normalization.lowercase},
                        {"strip", std::move(strip)}};
  return j.dump(2) + "\n";
}

}  // namespace phonoscore
