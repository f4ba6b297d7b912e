// core/src/segmenter.cpp

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

#include "phonoscore/segmenter.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "phonoscore/error.hpp"
#include "unicode_util.hpp"

namespace phonoscore {

namespace {

// One base character with its combining marks, tone marks split out.
struct Unit {
  std::u32string text;        // base + all marks, in canonical order
  std::u32string label_part;  // base + non-tone marks; what labels match on
  std::vector<char32_t> tone_marks;
  int begin = 0;  // code point offsets into the word
  int end = 0;
};

std::vector<Unit> split_units(const std::u32string& word,
                              const LanguageProfile& profile) {
  std::vector<Unit> units;
  for (size_t i = 0; i < word.size(); ++i) {
    const char32_t cp = word[i];
    const bool combining = uni::combining_class(cp) != 0;
    if (!combining || units.empty()) {
      Unit u;
      u.begin = static_cast<int>(i);
      u.end = static_cast<int>(i) + 1;
      u.text.push_back(cp);
      u.label_part.push_back(cp);
      units.push_back(std::move(u));
      continue;
    }
    Unit& u = units.back();
    u.text.push_back(cp);
    u.end = static_cast<int>(i) + 1;
    if (profile.tone_rules.diacritics.count(cp)) {
      u.tone_marks.push_back(cp);
    } else {
      u.label_part.push_back(cp);
    }
  }
  return units;
}

bool is_nasal_label(const std::string& label) {
  return label == "m" || label == "n";
}

Segment make_unknown(const Unit& unit) {
  Segment s;
  s.label = uni::u32_to_utf8(unit.text);
  s.known = false;
  s.tone = ToneCategory::None;
  s.vec = FeatureVector{};
  s.begin = unit.begin;
  s.end = unit.end;
  return s;
}

// Single-token lookup for phonemic profiles.  Trailing ARPABET stress
// digits are dropped unless the exact token (AH0) is itself in the table.
const LanguageProfile::MatchEntry* lookup_token(const std::string& token,
                                                const LanguageProfile& profile) {
  const auto& table = profile.match_table();
  auto it = table.find(uni::nfd(uni::utf8_to_u32(token)));
  if (it != table.end()) return &it->second;
  std::string stripped = token;
  while (!stripped.empty() && stripped.back() >= '0' && stripped.back() <= '9')
    stripped.pop_back();
  if (stripped != token && !stripped.empty()) {
    it = table.find(uni::nfd(uni::utf8_to_u32(stripped)));
    if (it != table.end()) return &it->second;
  }
  return nullptr;
}

Segment segment_from_token(const std::string& token, const LanguageProfile& profile,
                           bool strict, int begin, int end) {
  if (const auto* entry = lookup_token(token, profile)) {
    Segment s;
    s.label = entry->label;
    s.known = true;
    s.tone = ToneCategory::None;
    s.vec = entry->base;
    s.begin = begin;
    s.end = end;
    return s;
  }
  if (strict)
    throw SegmentationError("cannot map token '" + token + "' at offset " +
                                std::to_string(begin),
                            token, begin);
  Segment s;
  s.label = token;
  s.known = false;
  s.begin = begin;
  s.end = end;
  return s;
}

std::vector<std::string> split_words(const std::string& normalized) {
  std::vector<std::string> words;
  std::istringstream in(normalized);
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

}  // namespace

std::string normalize_text(std::string_view raw, const LanguageProfile& profile) {
  std::u32string s = uni::nfd(uni::utf8_to_u32(raw));

  std::u32string kept;
  kept.reserve(s.size());
  for (char32_t cp : s) {
    if (profile.normalization.lowercase) cp = uni::to_lower(cp);
    if (profile.normalization.strip.count(cp)) continue;
    kept.push_back(cp);
  }

  std::u32string out;
  out.reserve(kept.size());
  bool pending_space = false;
  for (char32_t cp : kept) {
    if (uni::is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    out.push_back(cp);
  }
  return uni::u32_to_utf8(out);
}

std::vector<std::string> char_units(std::string_view normalized) {
  std::u32string s = uni::utf8_to_u32(normalized);
  std::vector<std::u32string> units;
  for (char32_t cp : s) {
    if (uni::combining_class(cp) != 0 && !units.empty()) {
      units.back().push_back(cp);
    } else {
      units.emplace_back(1, cp);
    }
  }
  std::vector<std::string> out;
  out.reserve(units.size());
  for (const std::u32string& u : units) out.push_back(uni::u32_to_utf8(u));
  return out;
}

std::vector<Segment> segment_word(std::string_view word,
                                  const LanguageProfile& profile, bool strict) {
  std::u32string w = uni::nfd(uni::utf8_to_u32(word));
  std::vector<Segment> segments;
  if (w.empty()) return segments;

  if (profile.input_mode == InputMode::PhonemicTokens) {
    segments.push_back(segment_from_token(std::string(word), profile, strict, 0,
                                          static_cast<int>(w.size())));
    return segments;
  }

  const std::vector<Unit> units = split_units(w, profile);
  const auto& table = profile.match_table();
  const int max_units = profile.max_label_units();

  size_t i = 0;
  while (i < units.size()) {
    const LanguageProfile::MatchEntry* entry = nullptr;
    int matched_units = 0;
    const int limit = std::min<int>(max_units, static_cast<int>(units.size() - i));
    for (int k = limit; k >= 1; --k) {
      std::u32string key;
      for (int t = 0; t < k; ++t) key += units[i + t].label_part;
      auto it = table.find(key);
      if (it != table.end()) {
        entry = &it->second;
        matched_units = k;
        break;
      }
    }

    if (entry == nullptr) {
      if (strict) {
        const std::string text = uni::u32_to_utf8(units[i].text);
        throw SegmentationError("cannot segment character '" + text +
                                    "' at offset " + std::to_string(units[i].begin),
                                text, units[i].begin);
      }
      segments.push_back(make_unknown(units[i]));
      ++i;
      continue;
    }

    // Pick up an explicit tone diacritic from the matched span.  A mark
    // only sticks on tone bearers: syllabic segments, or m/n (syllabic
    // nasals are written as nasal plus tone mark).
    std::optional<ToneCategory> explicit_tone;
    for (int t = 0; t < matched_units && !explicit_tone; ++t) {
      for (char32_t mark : units[i + t].tone_marks) {
        explicit_tone = profile.tone_rules.diacritics.at(mark);
        break;
      }
    }

    ToneCategory tone = ToneCategory::None;
    if (profile.tone_bearing(entry->base)) {
      tone = explicit_tone.value_or(profile.tone_rules.default_tone);
    } else if (explicit_tone && is_nasal_label(entry->label)) {
      tone = *explicit_tone;
    }

    Segment s;
    s.label = entry->label;
    s.known = true;
    s.tone = tone;
    s.vec = profile.realized_vector(entry->base, tone);
    s.begin = units[i].begin;
    s.end = units[i + matched_units - 1].end;
    segments.push_back(std::move(s));
    i += static_cast<size_t>(matched_units);
  }
  return segments;
}

std::vector<Segment> NormalizedUtterance::flat_segments() const {
  std::vector<Segment> flat;
  for (const auto& ws : word_segments)
    flat.insert(flat.end(), ws.begin(), ws.end());
  return flat;
}

NormalizedUtterance segment_utterance(std::string_view raw,
                                      const LanguageProfile& profile,
                                      bool strict) {
  NormalizedUtterance u;
  u.text = normalize_text(raw, profile);
  u.words = split_words(u.text);
  u.units = char_units(u.text);
  u.word_segments.reserve(u.words.size());
  for (const std::string& w : u.words)
    u.word_segments.push_back(segment_word(w, profile, strict));
  return u;
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read lexicon file '" + path + "'");
  Lexicon lex;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.size() >= 3 && line[0] == '\xEF' &&
        line[1] == '\xBB' && line[2] == '\xBF')
      line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw Error("lexicon '" + path + "' line " + std::to_string(line_no) +
                  ": expected word<TAB>TOKEN TOKEN ...");
    const std::string word = line.substr(0, tab);
    if (word.empty())
      throw Error("lexicon '" + path + "' line " + std::to_string(line_no) +
                  ": empty word");
    std::istringstream toks(line.substr(tab + 1));
    std::vector<std::string> tokens;
    std::string t;
    while (toks >> t) tokens.push_back(t);
    // First entry wins; later duplicates (pronunciation variants) are kept
    // out to stay deterministic.
    lex.emplace(word, std::move(tokens));
  }
  return lex;
}

std::vector<std::vector<Segment>> phonemize_with_lexicon(
    const std::vector<std::string>& words, const Lexicon& lexicon,
    const LanguageProfile& profile, std::vector<std::string>* warnings) {
  std::vector<std::vector<Segment>> out;
  out.reserve(words.size());
  for (const std::string& word : words) {
    auto it = lexicon.find(word);
    if (it == lexicon.end()) {
      std::string lowered = word;
      std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      it = lexicon.find(lowered);
    }
    if (it == lexicon.end()) {
      Segment s;
      s.label = word;
      s.known = false;
      out.push_back({std::move(s)});
      if (warnings) warnings->push_back("no lexicon entry for '" + word + "'");
      continue;
    }
    std::vector<Segment> segs;
    segs.reserve(it->second.size());
    for (const std::string& token : it->second) {
      Segment s = segment_from_token(token, profile, /*strict=*/false, 0, 0);
      if (!s.known && warnings)
        warnings->push_back("lexicon token '" + token + "' for '" + word +
                            "' is not in the profile");
      segs.push_back(std::move(s));
    }
    out.push_back(std::move(segs));
  }
  return out;
}

std::string reconstruct_word(const std::vector<Segment>& segments,
                             const LanguageProfile& profile) {
  std::string out;
  for (const Segment& s : segments) {
    out += s.label;
    if (s.known && s.tone != ToneCategory::None) {
      if (auto mark = profile.diacritic_for(s.tone)) out += uni::cp_to_utf8(*mark);
    }
  }
  return out;
}

}  // namespace phonoscore
