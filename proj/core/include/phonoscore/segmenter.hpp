// core/include/phonoscore/segmenter.hpp

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

#ifndef PHONOSCORE_SEGMENTER_HPP_
#define PHONOSCORE_SEGMENTER_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "phonoscore/profile.hpp"

namespace phonoscore {

// One phonological unit of a word.  For labels the profile knows, `vec` is
// the realized vector (base row plus tone rewrite); unknown characters get
// an all-zero vector and keep their raw text as the label.
struct Segment {
  std::string label;
  bool known = true;
  ToneCategory tone = ToneCategory::None;
  FeatureVector vec{};
  // Code point offsets of the source unit(s) in the normalized word.
  int begin = 0;
  int end = 0;
};

struct NormalizedUtterance {
  std::string text;                 // normalized utterance text
  std::vector<std::string> words;   // whitespace-split words of `text`
  std::vector<std::string> units;   // base char + combining marks; single
                                    // inter-word spaces are units too
  std::vector<std::vector<Segment>> word_segments;  // one list per word

  std::vector<Segment> flat_segments() const;
  bool empty() const { return words.empty(); }
};

// Canonical decomposition (NFD, which orders a dot-below before a tone
// mark), per-profile lowercasing and character stripping, whitespace
// collapsing and trimming.  Idempotent.
std::string normalize_text(std::string_view raw, const LanguageProfile& profile);

// Splits normalized text into units of one base character plus its
// combining marks; spaces are their own units.
std::vector<std::string> char_units(std::string_view normalized);

// Rule-based G2P over one whitespace-free normalized word: greedy
// longest-match over profile labels (digraphs beat single letters), tone
// diacritics stripped and recorded, default tone applied to unmarked
// tone-bearing segments, syllabic nasals recognized by their explicit
// diacritic.  Unmatched characters become UNKNOWN segments in lenient mode
// and raise SegmentationError in strict mode.
std::vector<Segment> segment_word(std::string_view word,
                                  const LanguageProfile& profile,
                                  bool strict = false);

// Full pipeline: normalize, split words, build char units and per-word
// segments.  For phonemic-token profiles each whitespace token is looked
// up as a single segment label (trailing ARPABET stress digits are dropped
// unless the exact token, e.g. AH0, is itself in the table).
NormalizedUtterance segment_utterance(std::string_view raw,
                                      const LanguageProfile& profile,
                                      bool strict = false);

// word -> phoneme token sequence, e.g. "low" -> [L, OW].
using Lexicon = std::map<std::string, std::vector<std::string>>;

// Reads a lexicon file: one `word<TAB>TOKEN TOKEN ...` entry per line,
// `#` starts a comment.  Throws IoError / Error on unreadable or malformed
// input.
Lexicon load_lexicon(const std::string& path);

// Looks every word up in the lexicon and converts its token sequence to
// segments.  Out-of-lexicon words yield one UNKNOWN segment and a warning.
std::vector<std::vector<Segment>> phonemize_with_lexicon(
    const std::vector<std::string>& words, const Lexicon& lexicon,
    const LanguageProfile& profile, std::vector<std::string>* warnings);

// Reassembles the normalized word a segment sequence came from: profile
// label plus tone diacritic for known segments, raw text for unknown ones.
std::string reconstruct_word(const std::vector<Segment>& segments,
                             const LanguageProfile& profile);

}  // namespace phonoscore

#endif  // PHONOSCORE_SEGMENTER_HPP_
