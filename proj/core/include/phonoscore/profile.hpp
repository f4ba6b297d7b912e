// core/include/phonoscore/profile.hpp

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

#ifndef PHONOSCORE_PROFILE_HPP_
#define PHONOSCORE_PROFILE_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "phonoscore/feature.hpp"

namespace phonoscore {

enum class InputMode { Orthographic, PhonemicTokens };

struct ToneRules {
  // Combining mark -> tone category, e.g. U+0301 -> High, U+0300 -> Low.
  std::map<char32_t, ToneCategory> diacritics;
  // Applied to unmarked tone-bearing segments (Downstep for Uneme, Mid for
  // Yoruba, None for English).
  ToneCategory default_tone = ToneCategory::None;
  // Which vector slot encodes each category this language distinguishes.
  std::map<ToneCategory, int> tone_dims;

  bool operator==(const ToneRules&) const = default;
};

struct NormalizationRules {
  bool lowercase = true;
  std::set<char32_t> strip;  // code points removed before segmentation

  bool operator==(const NormalizationRules&) const = default;
};

struct Diagnostic {
  std::string location;  // e.g. segments["gb"], dimensions[3].index
  std::string message;
};

// A language's complete evaluation schema: the 24 named dimensions, the
// segment -> base-vector table, tone rules, and text normalization rules.
// Immutable after load; safe to share across evaluation workers.
class LanguageProfile {
 public:
  std::string language_id;
  InputMode input_mode = InputMode::Orthographic;
  std::vector<FeatureDimension> dimensions;  // exactly 24 when valid
  // Insertion order of the profile file is preserved (serialization and
  // dumps stay diffable against the source document).
  std::vector<std::pair<std::string, FeatureVector>> base_table;
  ToneRules tone_rules;
  NormalizationRules normalization;

  // Base vector with tone dimensions rewritten: the assigned category's
  // slot gets +1 and every other slot the profile defines gets -1.  With
  // tone None the base row is returned untouched (tone slots stay 0).
  FeatureVector realized_vector(const std::string& label, ToneCategory tone) const;
  FeatureVector realized_vector(const FeatureVector& base, ToneCategory tone) const;

  // A base row can carry tone iff it is syllabic (SYL = +1).  Syllabic
  // nasals are handled by the segmenter, which also admits m/n under an
  // explicit diacritic.
  bool tone_bearing(const FeatureVector& base) const;

  bool tonal() const { return !tone_rules.tone_dims.empty(); }

  const FeatureVector* find_base(const std::string& label) const;
  std::optional<int> dim_index(const std::string& abbr) const;

  // Inverse diacritic map; None for categories written without a mark.
  std::optional<char32_t> diacritic_for(ToneCategory tone) const;

  // --- derived lookup state, built by finalize() ---------------------
  struct MatchEntry {
    std::string label;  // as written in the profile file
    FeatureVector base;
    int units = 1;  // label length in base characters ("gb" -> 2)
  };
  // Keyed by the NFD form of the label.
  const std::map<std::u32string, MatchEntry>& match_table() const { return match_table_; }
  int max_label_units() const { return max_label_units_; }
  int syllabic_dim() const { return syllabic_dim_; }

  // Builds the derived lookup structures; called by load_profile after
  // validation.  Must be re-run if the table is edited by hand.
  void finalize();

  bool operator==(const LanguageProfile& other) const;

 private:
  std::map<std::u32string, MatchEntry> match_table_;
  int max_label_units_ = 1;
  int syllabic_dim_ = -1;
};

// Parses the documented JSON profile format.  Structural problems that
// prevent building a usable profile throw ProfileError; recoverable shape
// problems (wrong vector length, out-of-range values, ...) are reported
// through `diagnostics` so `profile validate` can list all of them.
LanguageProfile parse_profile(const std::string& json_text,
                              std::vector<Diagnostic>* diagnostics);

// Semantic checks over a parsed profile; empty result iff all invariants
// hold.  Does not throw.
std::vector<Diagnostic> validate_profile(const LanguageProfile& profile);

// `source` is a builtin name ("uneme", "yoruba", "english") or a path to a
// profile file.  Throws ProfileError (schema or validation failure, with
// locations) or IoError (unreadable file).  The result is validated and
// finalized.
LanguageProfile load_profile(const std::string& source);

const std::vector<std::string>& builtin_profile_names();
bool is_builtin_profile(const std::string& name);
// Raw JSON text of a bundled profile; throws ProfileError on unknown name.
const std::string& builtin_profile_text(const std::string& name);

// Serializes back to the profile file format.  parse(serialize(p)) == p.
std::string serialize_profile(const LanguageProfile& profile);

}  // namespace phonoscore

#endif  // PHONOSCORE_PROFILE_HPP_
