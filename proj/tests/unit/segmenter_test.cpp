// tests/unit/segmenter_test.cpp

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

#include <doctest.h>

#include <random>

#include "phonoscore/error.hpp"
#include "phonoscore/segmenter.hpp"
#include "test_util.hpp"

using namespace phonoscore;
using namespace pstest;

namespace {

std::string labels_of(const std::vector<Segment>& segs) {
  std::string out;
  for (const Segment& s : segs) {
    if (!out.empty()) out += ' ';
    out += s.known ? s.label : "?" + s.label;
    if (s.tone != ToneCategory::None)
      out += std::string("(") + ToneCategoryName(s.tone) + ")";
  }
  return out;
}

}  // namespace

TEST_CASE("normalize_text") {
  const LanguageProfile& u = uneme();

  // The output is decomposed (NFD), so compare canonically.
  CHECK(normalize_text("Ọ́mọ́  kirì", u) == normalize_text("ọ́mọ́ kirì", u));
  CHECK(normalize_text("", u) == "");
  CHECK(normalize_text("  \t ", u) == "");

  // Precomposed and decomposed spellings normalize identically.
  const std::string precomposed = "rẹ";          // r + ẹ
  const std::string decomposed = "rẹ";          // r + e + dot below
  CHECK(normalize_text(precomposed, u) == normalize_text(decomposed, u));

  // Dot-below sorts before the tone mark regardless of input order.
  const std::string tone_first = "ọ́";
  const std::string dot_first = "ọ́";
  CHECK(normalize_text(tone_first, u) == normalize_text(dot_first, u));

  // Profile strip set removes punctuation.
  CHECK(normalize_text("ọmọ, kirì.", u) == normalize_text("ọmọ kirì", u));

  SUBCASE("idempotence on random inventory text") {
    std::mt19937 rng(42);
    for (int i = 0; i < 200; ++i) {
      const std::string text = random_inventory_utterance(u, rng);
      const std::string once = normalize_text(text, u);
      CHECK(normalize_text(once, u) == once);
    }
  }
}

TEST_CASE("char_units") {
  CHECK(char_units("ọ́mọ́").size() == 3);
  CHECK(char_units("").empty());

  const std::string ref = normalize_text(kWorkedUnemeRef, uneme());
  const auto units = char_units(ref);
  CHECK(units.size() == 40);  // 34 letters + 6 inter-word spaces
  int spaces = 0;
  for (const auto& unit : units) spaces += unit == " ";
  CHECK(spaces == 6);

  // Concatenating the units reproduces the normalized text.
  std::string joined;
  for (const auto& unit : units) joined += unit;
  CHECK(joined == ref);
}

TEST_CASE("segment_word follows the published letter rules") {
  const LanguageProfile& u = uneme();
  const LanguageProfile& y = yoruba();

  SUBCASE("digraph with tone mark") {
    const auto segs = segment_word(normalize_text("gbà", u), u);
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].label == "gb");
    CHECK(segs[0].tone == ToneCategory::None);
    CHECK(segs[1].label == "a");
    CHECK(segs[1].tone == ToneCategory::Low);
  }

  SUBCASE("unmarked Yoruba vowels default to Mid") {
    const auto segs = segment_word(normalize_text("ọmọ", y), y);
    REQUIRE(segs.size() == 3);
    CHECK(segs[0].tone == ToneCategory::Mid);
    CHECK(segs[1].label == "m");
    CHECK(segs[1].tone == ToneCategory::None);
    CHECK(segs[2].tone == ToneCategory::Mid);
  }

  SUBCASE("kwágù: kw is not an inventory digraph") {
    const auto segs = segment_word(normalize_text("kwágù", u), u);
    CHECK(labels_of(segs) == "k w a(High) g u(Low)");
  }

  SUBCASE("unmarked Uneme vowels default to Downstep") {
    const auto segs = segment_word(normalize_text("mariki", u), u);
    CHECK(labels_of(segs) ==
          "m a(Downstep) r i(Downstep) k i(Downstep)");
  }

  SUBCASE("syllabic nasal only under an explicit diacritic") {
    const auto marked = segment_word(normalize_text("ḿ", u), u);
    REQUIRE(marked.size() == 1);
    CHECK(marked[0].tone == ToneCategory::High);
    const auto plain = segment_word(normalize_text("m", u), u);
    CHECK(plain[0].tone == ToneCategory::None);
    // The realized nasal flips tone slots relative to the base row.
    CHECK(marked[0].vec != plain[0].vec);
  }

  SUBCASE("lenient mode emits UNKNOWN, strict mode throws with position") {
    const auto segs = segment_word("q1", u);
    REQUIRE(segs.size() == 2);
    CHECK_FALSE(segs[0].known);
    CHECK(segs[0].vec.all_zero());
    CHECK_FALSE(segs[1].known);
    try {
      segment_word("aq1", u, /*strict=*/true);
      FAIL("expected SegmentationError");
    } catch (const SegmentationError& e) {
      CHECK(e.character() == "q");
      CHECK(e.offset() == 1);
    }
  }
}

TEST_CASE("segmentation properties over the bundled inventories") {
  std::mt19937 rng(20260808);

  SUBCASE("digraphs never split and two-label concatenations stay known") {
    for (const LanguageProfile* p : {&uneme(), &yoruba()}) {
      std::vector<std::string> labels;
      for (const auto& [label, vec] : p->base_table) labels.push_back(label);
      for (const std::string& label : labels) {
        if (char_units(label).size() < 2) continue;  // digraphs only
        const auto segs = segment_word(label, *p);
        REQUIRE(segs.size() == 1);
        CHECK(segs[0].label == label);
      }
      // Greedy never produces UNKNOWN on any two-label concatenation.
      for (const std::string& a : labels) {
        for (const std::string& b : labels) {
          const auto segs = segment_word(a + b, *p);
          for (const Segment& s : segs) {
            CAPTURE(a + b);
            CHECK(s.known);
          }
        }
      }
    }
  }

  SUBCASE("round-trip: labels plus tone marks rebuild the word") {
    for (const LanguageProfile* p : {&uneme(), &yoruba()}) {
      for (int i = 0; i < 300; ++i) {
        const std::string word = normalize_text(random_inventory_word(*p, rng), *p);
        const auto segs = segment_word(word, *p);
        const std::string rebuilt = normalize_text(reconstruct_word(segs, *p), *p);
        CAPTURE(word);
        CHECK(rebuilt == word);
      }
    }
  }

  SUBCASE("UNKNOWN segments reproduce their raw characters") {
    const auto segs = segment_word("q1a", uneme());
    CHECK(reconstruct_word(segs, uneme()) == "q1a");
  }

  SUBCASE("tone totality: vowels always carry tone, bare consonants never") {
    for (const LanguageProfile* p : {&uneme(), &yoruba()}) {
      for (int i = 0; i < 200; ++i) {
        const std::string word = normalize_text(random_inventory_word(*p, rng), *p);
        for (const Segment& s : segment_word(word, *p)) {
          if (!s.known) continue;
          const FeatureVector& base = *p->find_base(s.label);
          if (p->tone_bearing(base)) {
            CHECK(s.tone != ToneCategory::None);
          } else if (s.label != "m" && s.label != "n") {
            CHECK(s.tone == ToneCategory::None);
          }
        }
      }
    }
  }

  SUBCASE("determinism") {
    const std::string text = random_inventory_utterance(uneme(), rng);
    const NormalizedUtterance a = segment_utterance(text, uneme());
    const NormalizedUtterance b = segment_utterance(text, uneme());
    REQUIRE(a.words == b.words);
    REQUIRE(a.units == b.units);
    for (size_t w = 0; w < a.word_segments.size(); ++w) {
      REQUIRE(a.word_segments[w].size() == b.word_segments[w].size());
      for (size_t s = 0; s < a.word_segments[w].size(); ++s) {
        CHECK(a.word_segments[w][s].label == b.word_segments[w][s].label);
        CHECK(a.word_segments[w][s].vec == b.word_segments[w][s].vec);
      }
    }
  }
}

TEST_CASE("segment_utterance") {
  const LanguageProfile& u = uneme();

  SUBCASE("words, units and segments line up") {
    const NormalizedUtterance utt = segment_utterance("è kwágù", u);
    REQUIRE(utt.words.size() == 2);
    CHECK(utt.words[0] == normalize_text("è", u));
    CHECK(labels_of(utt.word_segments[0]) == "e(Low)");
    CHECK(labels_of(utt.word_segments[1]) == "k w a(High) g u(Low)");
    // Units concatenate back to the text.
    std::string joined;
    for (const auto& unit : utt.units) joined += unit;
    CHECK(joined == utt.text);
  }

  SUBCASE("empty input") {
    const NormalizedUtterance utt = segment_utterance("", u);
    CHECK(utt.empty());
    CHECK(utt.units.empty());
    CHECK(utt.word_segments.empty());
  }

  SUBCASE("phonemic token lines: one segment per token, tones None") {
    const NormalizedUtterance utt = segment_utterance("HH AH0 L OW", english());
    REQUIRE(utt.words == std::vector<std::string>{"HH", "AH0", "L", "OW"});
    for (const auto& segs : utt.word_segments) {
      REQUIRE(segs.size() == 1);
      CHECK(segs[0].known);
      CHECK(segs[0].tone == ToneCategory::None);
    }
    CHECK(utt.word_segments[1][0].label == "AH0");
  }

  SUBCASE("ARPABET stress digits strip unless the exact token exists") {
    const NormalizedUtterance utt = segment_utterance("AH1 IY2 AH0", english());
    CHECK(utt.word_segments[0][0].label == "AH");
    CHECK(utt.word_segments[1][0].label == "IY");
    CHECK(utt.word_segments[2][0].label == "AH0");
  }
}

TEST_CASE("lexicon") {
  const LanguageProfile& e = english();

  SUBCASE("load, hit, miss, determinism") {
    const Lexicon lex = load_lexicon(data_path("lexicon_en.tsv"));
    REQUIRE(lex.count("low"));

    std::vector<std::string> warnings;
    const auto segs = phonemize_with_lexicon({"low"}, lex, e, &warnings);
    REQUIRE(segs.size() == 1);
    REQUIRE(segs[0].size() == 2);
    CHECK(segs[0][0].label == "L");
    CHECK(segs[0][1].label == "OW");
    CHECK(warnings.empty());

    const auto miss = phonemize_with_lexicon({"zzz"}, lex, e, &warnings);
    REQUIRE(miss[0].size() == 1);
    CHECK_FALSE(miss[0][0].known);
    CHECK(warnings.size() == 1);

    const auto twice = phonemize_with_lexicon({"a", "a"}, lex, e, nullptr);
    REQUIRE(twice.size() == 2);
    CHECK(twice[0][0].label == twice[1][0].label);
    CHECK(twice[0][0].vec == twice[1][0].vec);
  }

  SUBCASE("malformed lexicon") {
    const std::string bad = data_path("lexicon_bad_tmp.tsv");
    {
      std::ofstream out(bad, std::ios::binary);
      out << "word-without-tab\n";
    }
    CHECK_THROWS_AS(load_lexicon(bad), Error);
    std::remove(bad.c_str());
    CHECK_THROWS_AS(load_lexicon("/nonexistent/lex.tsv"), IoError);
  }
}
