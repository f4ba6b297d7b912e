// tests/unit/report_test.cpp

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

#include <json.hpp>

#include "phonoscore/report.hpp"
#include "test_util.hpp"

using namespace phonoscore;
using namespace pstest;
using nlohmann::json;

namespace {

WordCategory classify_pair(const std::string& ref, const std::string& hyp,
                           const LanguageProfile& p) {
  const auto ru = segment_utterance(ref, p);
  const auto hu = segment_utterance(hyp, p);
  const RateResult w = wer(ru.words, hu.words);
  const auto classes = classify_words(w.alignment, ru, hu, p);
  REQUIRE(classes.size() == 1);
  return classes[0].category;
}

}  // namespace

TEST_CASE("classify_words categories") {
  const LanguageProfile& y = yoruba();
  const LanguageProfile& u = uneme();

  SUBCASE("tone error only") {
    CHECK(classify_pair("rẹ", "rẹ̀", y) == WordCategory::ToneErrorOnly);
  }
  SUBCASE("mixed vowel-quality and tone damage") {
    CHECK(classify_pair("mariki", "marekí", u) == WordCategory::Mixed);
  }
  SUBCASE("featural error only") {
    CHECK(classify_pair("ba", "pa", u) == WordCategory::FeaturalError);
  }
  SUBCASE("identical words are correct") {
    CHECK(classify_pair("gbà", "gbà", u) == WordCategory::Correct);
  }
  SUBCASE("length changes inside a substituted word are mixed") {
    CHECK(classify_pair("baku", "bak", u) == WordCategory::Mixed);
  }
  SUBCASE("deletion and insertion columns") {
    const auto ru = segment_utterance("ba ku", u);
    const auto hu = segment_utterance("ba", u);
    const RateResult w = wer(ru.words, hu.words);
    const auto classes = classify_words(w.alignment, ru, hu, u);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].category == WordCategory::Correct);
    CHECK(classes[1].category == WordCategory::Deletion);
    CHECK_FALSE(classes[1].hyp_word.has_value());

    const RateResult w2 = wer(hu.words, ru.words);
    const auto classes2 = classify_words(w2.alignment, hu, ru, u);
    REQUIRE(classes2.size() == 2);
    CHECK(classes2[1].category == WordCategory::Insertion);
    CHECK_FALSE(classes2[1].ref_word.has_value());
  }
  SUBCASE("partition: one classification per word-alignment column") {
    std::mt19937 rng(404);
    for (int i = 0; i < 40; ++i) {
      const std::string a = random_inventory_utterance(u, rng);
      const std::string b = random_inventory_utterance(u, rng);
      const auto ru = segment_utterance(a, u);
      const auto hu = segment_utterance(b, u);
      const RateResult w = wer(ru.words, hu.words);
      const auto classes = classify_words(w.alignment, ru, hu, u);
      CHECK(classes.size() == w.alignment.ops.size());
    }
  }
}

TEST_CASE("json rendering round-trips every numeric field") {
  const UtteranceReport r =
      evaluate_utterance(kWorkedUnemeRef, kWorkedUnemeHyp, uneme(),
                         {.utterance_id = "t5"});
  const std::string text = render(r, ReportFormat::Json);
  const json j = json::parse(text);

  CHECK(j["schema_version"] == 1);
  CHECK(j["kind"] == "utterance");
  const json& utt = j["utterance"];
  CHECK(utt["id"] == "t5");
  CHECK(utt["counts"]["wer_errors"].get<long long>() == r.counts.wer_errors);
  CHECK(utt["counts"]["cer_ref_chars"].get<long long>() == r.counts.cer_ref_chars);
  CHECK(utt["counts"]["fer_cost"].get<double>() == r.counts.fer_cost);
  CHECK(utt["rates"]["wer"].get<double>() == *r.wer);
  CHECK(utt["rates"]["cer"].get<double>() == *r.cer);
  CHECK(utt["rates"]["fer"].get<double>() == *r.fer);
  CHECK(utt["rates"]["ter"].get<double>() == *r.ter);
  CHECK(utt["words"].size() == r.word_classifications.size());
  CHECK(utt["feature_alignment"]["total_cost"].get<double>() ==
        r.feature_alignment.total_cost);
  // Per-feature block recovers the exact per-dimension counters.
  for (const FeatureDimension& dim : r.dimensions) {
    auto it = r.counts.per_dimension.find(dim.index);
    if (it == r.counts.per_dimension.end()) continue;
    if (it->second.ref_active == 0 && it->second.error_count == 0.0) continue;
    CHECK(utt["per_feature"][dim.abbr]["errors"].get<double>() ==
          it->second.error_count);
    CHECK(utt["per_feature"][dim.abbr]["ref_active"].get<long long>() ==
          it->second.ref_active);
  }
}

TEST_CASE("tsv rendering") {
  const LanguageProfile& u = uneme();

  SUBCASE("zero-error utterance renders four zero rates") {
    const UtteranceReport r =
        evaluate_utterance("gbà", "gbà", u, {.utterance_id = "x"});
    const std::string text = render(r, ReportFormat::Tsv);
    CHECK(text.find("x\t0.0000\t0.0000\t0.0000\t0.0000") != std::string::npos);
  }
  SUBCASE("undefined TER prints as --") {
    const UtteranceReport r = evaluate_utterance("HH", "HH", english(),
                                                 {.utterance_id = "en"});
    const std::string text = render(r, ReportFormat::Tsv);
    CHECK(text.find("en\t0.0000\t0.0000\t0.0000\t--") != std::string::npos);
  }
  SUBCASE("corpus tsv ends with the aggregate row") {
    std::vector<UtteranceReport> reports;
    reports.push_back(evaluate_utterance("ba", "pa", u, {.utterance_id = "1"}));
    reports.push_back(evaluate_utterance("ku", "ku", u, {.utterance_id = "2"}));
    const CorpusReport corpus = aggregate_corpus(std::move(reports), u, 1, true);
    const std::string text = render(corpus, ReportFormat::Tsv);
    const auto lines = [&] {
      std::vector<std::string> out;
      std::istringstream in(text);
      std::string line;
      while (std::getline(in, line)) out.push_back(line);
      return out;
    }();
    REQUIRE(lines.size() == 4);  // header, two utterances, ALL
    CHECK(lines[0] == "id\twer\tcer\tfer\tter\tworst_f\tworst_t");
    CHECK(lines[3].rfind("ALL\t", 0) == 0);
  }
}

TEST_CASE("corpus json keeps per-utterance reports when asked") {
  const LanguageProfile& u = uneme();
  std::vector<UtteranceReport> reports;
  reports.push_back(evaluate_utterance("ba", "pa", u, {.utterance_id = "1"}));
  reports.push_back(evaluate_utterance("ku", "ku", u, {.utterance_id = "2"}));
  const CorpusReport kept = aggregate_corpus(reports, u, 1, true);
  const json j = json::parse(render(kept, ReportFormat::Json));
  CHECK(j["kind"] == "corpus");
  CHECK(j["num_utterances"] == 2);
  REQUIRE(j["utterances"].size() == 2);
  CHECK(j["utterances"][0]["id"] == "1");
  CHECK(j["rates"].contains("wer"));

  const CorpusReport dropped = aggregate_corpus(reports, u, 1, false);
  const json j2 = json::parse(render(dropped, ReportFormat::Json));
  CHECK(j2["utterances"].empty());
  CHECK(j2["rates"] == j["rates"]);
}

TEST_CASE("pretty rendering") {
  const UtteranceReport r =
      evaluate_utterance(kWorkedUnemeRef, kWorkedUnemeHyp, uneme(),
                         {.utterance_id = "t5"});

  SUBCASE("every hypothesis word appears exactly once, in order") {
    const std::string text = render(r, ReportFormat::Pretty);
    const std::string hyp_line = text.substr(text.find("HYP:"));
    size_t cursor = 0;
    for (const std::string& w : r.hyp_words) {
      const size_t at = hyp_line.find(" " + w + "[", cursor);
      REQUIRE(at != std::string::npos);
      cursor = at + 1;
      CHECK(hyp_line.find(" " + w + "[", cursor) == std::string::npos);
    }
  }
  SUBCASE("bracket tags without color, ANSI with color") {
    const std::string plain = render(r, ReportFormat::Pretty);
    CHECK(plain.find("\x1b[") == std::string::npos);
    CHECK(plain.find("[ok]") != std::string::npos);
    const std::string colored = render(r, ReportFormat::Pretty, {.color = true});
    CHECK(colored.find("\x1b[32m") != std::string::npos);
    CHECK(colored.find("[ok]") == std::string::npos);
  }
  SUBCASE("deleted reference words leave a placeholder") {
    const UtteranceReport del =
        evaluate_utterance("ba ku", "ba", uneme(), {.utterance_id = "d"});
    const std::string text = render(del, ReportFormat::Pretty);
    CHECK(text.find("*[del]") != std::string::npos);
  }
}
