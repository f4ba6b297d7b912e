// tests/unit/runner_test.cpp

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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "phonoscore/error.hpp"
#include "phonoscore/runner.hpp"
#include "test_util.hpp"

using namespace phonoscore;
using namespace pstest;

namespace {

// Scratch files for corpus IO tests, removed on scope exit.
class TempFile {
 public:
  TempFile(const std::string& stem, const std::string& content) {
    path_ = (std::filesystem::temp_directory_path() /
             ("phonoscore_test_" + stem + "_" + std::to_string(counter_++)))
                .string();
    std::ofstream out(path_, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::string path_;
};

RunConfig base_config(const std::string& ref_path, const std::string& hyp_path) {
  RunConfig c;
  c.profile_source = "uneme";
  c.ref_path = ref_path;
  c.hyp_path = hyp_path;
  c.per_utterance = true;
  return c;
}

}  // namespace

TEST_CASE("lines mode pairs by line number") {
  TempFile ref("ref", "gbà\nba ku\n");
  TempFile hyp("hyp", "gbà\nba gu\n");
  const CorpusReport report = evaluate_corpus(base_config(ref.path(), hyp.path()));
  CHECK(report.num_utterances == 2);
  REQUIRE(report.utterances.size() == 2);
  CHECK(report.utterances[0].utterance_id == "1");
  CHECK(*report.utterances[0].wer == 0.0);
  CHECK(report.utterances[1].counts.wer_errors == 1);
  CHECK(report.counts.wer_ref_words == 3);
}

TEST_CASE("lines mode rejects mismatched line counts") {
  TempFile ref("ref", "gbà\nba ku\n");
  TempFile hyp("hyp", "gbà\n");
  CHECK_THROWS_WITH_AS(evaluate_corpus(base_config(ref.path(), hyp.path())),
                       doctest::Contains("line count mismatch"), Error);
}

TEST_CASE("keyed-tsv mode") {
  SUBCASE("hypothesis order does not matter") {
    TempFile ref("ref", "u1\tgbà\nu2\tba ku\n");
    TempFile hyp("hyp", "u2\tba ku\nu1\tgbà\n");
    RunConfig c = base_config(ref.path(), hyp.path());
    c.input_format = InputFormat::KeyedTsv;
    const CorpusReport report = evaluate_corpus(c);
    REQUIRE(report.utterances.size() == 2);
    CHECK(report.utterances[0].utterance_id == "u1");
    CHECK(*report.wer == 0.0);
  }
  SUBCASE("hypothesis keys must exist in the reference") {
    TempFile ref("ref", "u1\tgbà\n");
    TempFile hyp("hyp", "u1\tgbà\nzz\tba\n");
    RunConfig c = base_config(ref.path(), hyp.path());
    c.input_format = InputFormat::KeyedTsv;
    CHECK_THROWS_WITH_AS(evaluate_corpus(c), doctest::Contains("missing key"), Error);
  }
  SUBCASE("reference entries without a hypothesis score against empty") {
    TempFile ref("ref", "u1\tgbà\nu2\tba\n");
    TempFile hyp("hyp", "u1\tgbà\n");
    RunConfig c = base_config(ref.path(), hyp.path());
    c.input_format = InputFormat::KeyedTsv;
    const CorpusReport report = evaluate_corpus(c);
    CHECK(*report.utterances[1].wer == 1.0);
  }
  SUBCASE("duplicate keys are rejected") {
    TempFile ref("ref", "u1\tgbà\nu1\tba\n");
    TempFile hyp("hyp", "u1\tgbà\n");
    RunConfig c = base_config(ref.path(), hyp.path());
    c.input_format = InputFormat::KeyedTsv;
    CHECK_THROWS_WITH_AS(evaluate_corpus(c), doctest::Contains("duplicate key"), Error);
  }
  SUBCASE("malformed line") {
    TempFile ref("ref", "no-tab-here\n");
    TempFile hyp("hyp", "");
    RunConfig c = base_config(ref.path(), hyp.path());
    c.input_format = InputFormat::KeyedTsv;
    CHECK_THROWS_AS(evaluate_corpus(c), Error);
  }
}

TEST_CASE("a leading byte-order mark is tolerated") {
  TempFile ref("ref", "\xEF\xBB\xBFgbà\n");
  TempFile hyp("hyp", "gbà\n");
  const CorpusReport report = evaluate_corpus(base_config(ref.path(), hyp.path()));
  CHECK(*report.wer == 0.0);
}

TEST_CASE("CRLF line endings behave like LF") {
  TempFile ref("ref", "gbà\r\nba ku\r\n");
  TempFile hyp("hyp", "gbà\nba ku\n");
  const CorpusReport report = evaluate_corpus(base_config(ref.path(), hyp.path()));
  CHECK(report.num_utterances == 2);
  CHECK(*report.wer == 0.0);
}

TEST_CASE("indel cost reaches the feature alignment") {
  TempFile ref("ref", "a\n");
  TempFile hyp("hyp", "\n");
  RunConfig c = base_config(ref.path(), hyp.path());
  c.indel_cost = 0.25;
  const CorpusReport report = evaluate_corpus(c);
  CHECK(report.counts.fer_cost == 0.25);  // one deletion at the custom cost
  CHECK(*report.fer == 0.25);
  c.indel_cost = 0.0;
  CHECK_THROWS_AS(evaluate_corpus(c), Error);
}

TEST_CASE("worker fan-out is invisible in the output") {
  std::mt19937 rng(63);
  std::string ref_text, hyp_text;
  for (int i = 0; i < 24; ++i) {
    ref_text += random_inventory_utterance(uneme(), rng) + "\n";
    hyp_text += random_inventory_utterance(uneme(), rng) + "\n";
  }
  TempFile ref("ref", ref_text);
  TempFile hyp("hyp", hyp_text);

  auto run_with_workers = [&](int workers) {
    RunConfig c = base_config(ref.path(), hyp.path());
    c.worker_count = workers;
    std::ostringstream out;
    REQUIRE(run_eval(c, out) == 0);
    return out.str();
  };
  const std::string w1 = run_with_workers(1);
  CHECK(w1 == run_with_workers(4));
  CHECK(w1 == run_with_workers(8));
}

TEST_CASE("strict mode reports the utterance and the character") {
  TempFile ref("ref", "gbà\naqa\n");
  TempFile hyp("hyp", "gbà\ngbà\n");
  RunConfig c = base_config(ref.path(), hyp.path());
  c.strict = true;
  try {
    evaluate_corpus(c);
    FAIL("expected Error");
  } catch (const Error& e) {
    const std::string what = e.what();
    CHECK(what.find("utterance '2'") != std::string::npos);
    CHECK(what.find("'q'") != std::string::npos);
  }
}

TEST_CASE("empty reference lines are flagged, not fatal") {
  TempFile ref("ref", "\ngbà\n");
  TempFile hyp("hyp", "ba\ngbà\n");
  const CorpusReport report = evaluate_corpus(base_config(ref.path(), hyp.path()));
  REQUIRE(report.utterances.size() == 2);
  CHECK_FALSE(report.utterances[0].wer.has_value());
  REQUIRE_FALSE(report.utterances[0].warnings.empty());
  CHECK(report.utterances[0].warnings[0].find("empty reference") != std::string::npos);
}

TEST_CASE("english end-to-end through a lexicon") {
  TempFile ref("ref", "hello world\n");
  TempFile hyp("hyp", "hello world\n");
  RunConfig c = base_config(ref.path(), hyp.path());
  c.profile_source = "english";
  c.lexicon_path = data_path("lexicon_en.tsv");
  const CorpusReport report = evaluate_corpus(c);
  CHECK(*report.wer == 0.0);
  CHECK(*report.fer == 0.0);
  CHECK_FALSE(report.ter.has_value());

  SUBCASE("lexicon with an orthographic profile is a config error") {
    RunConfig bad = base_config(ref.path(), hyp.path());
    bad.lexicon_path = data_path("lexicon_en.tsv");
    CHECK_THROWS_AS(evaluate_corpus(bad), Error);
  }
}

TEST_CASE("run_segment dumps labels, tones and vectors") {
  std::ostringstream out;
  REQUIRE(run_segment("gbà", "uneme", false, out) == 0);
  const std::string text = out.str();
  CHECK(text.find("word: gb") != std::string::npos);  // vowel prints decomposed
  CHECK(text.find("gb\tNone") != std::string::npos);
  CHECK(text.find("a\tLow") != std::string::npos);

  std::ostringstream empty_out;
  REQUIRE(run_segment("", "uneme", false, empty_out) == 0);
  CHECK(empty_out.str().empty());

  std::ostringstream unk;
  REQUIRE(run_segment("q1", "uneme", false, unk) == 0);
  CHECK(unk.str().find("UNKNOWN") != std::string::npos);
}

TEST_CASE("run_profile_validate") {
  SUBCASE("bundled profile file validates cleanly") {
    std::ostringstream out;
    CHECK(run_profile_validate(std::string(PHONOSCORE_PROFILE_DIR) + "/uneme.json",
                               out) == 0);
    CHECK(out.str() == "ok\n");
  }
  SUBCASE("broken profile lists diagnostics and fails") {
    TempFile bad("profile",
                 "{\"language_id\":\"x\",\"dimensions\":[],\"segments\":{}}");
    std::ostringstream out;
    CHECK(run_profile_validate(bad.path(), out) == 1);
    CHECK(out.str().find("dimensions") != std::string::npos);
  }
  SUBCASE("unreadable path") {
    std::ostringstream out;
    CHECK(run_profile_validate("/nonexistent/p.json", out) == 1);
  }
}
