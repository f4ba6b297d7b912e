// tools/phonoscore_main.cpp

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

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "phonoscore/error.hpp"
#include "phonoscore/runner.hpp"

namespace {

std::string read_file_or_die(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw phonoscore::IoError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace phonoscore;

  CLI::App app{"phonoscore: phonologically informed scoring of ASR transcripts\n"
               "(WER, CER, feature and tone error rates)"};
  app.require_subcommand(1);

  // --- eval ------------------------------------------------------------
  RunConfig config;
  std::string input_format = "lines";
  std::string output_format = "json";
  std::string lexicon_path;
  CLI::App* eval = app.add_subcommand(
      "eval", "score a hypothesis corpus against a reference corpus");
  eval->add_option("--lang", config.profile_source,
                   "language profile: uneme, yoruba, english, or a profile file")
      ->required();
  eval->add_option("--ref", config.ref_path, "reference transcript file")->required();
  eval->add_option("--hyp", config.hyp_path, "hypothesis transcript file")->required();
  eval->add_option("--input-format", input_format,
                   "corpus layout: lines (parallel line numbers) or keyed-tsv "
                   "(id<TAB>text)")
      ->check(CLI::IsMember({"lines", "keyed-tsv"}));
  eval->add_option("--format", output_format, "output format: json, tsv or pretty")
      ->check(CLI::IsMember({"json", "tsv", "pretty"}));
  eval->add_option("--indel-cost", config.indel_cost,
                   "insertion/deletion cost for the feature alignment")
      ->check(CLI::PositiveNumber);
  eval->add_flag("--strict", config.strict,
                 "fail on characters the profile cannot segment");
  eval->add_option("--lexicon", lexicon_path,
                   "pronunciation lexicon (word<TAB>TOKEN ...) for orthographic "
                   "input under a phonemic-tokens profile");
  eval->add_flag("--per-utterance", config.per_utterance,
                 "keep per-utterance reports in the output");
  eval->add_option("--min-support", config.min_support,
                   "minimum reference activity for the corpus worst-feature pick")
      ->check(CLI::NonNegativeNumber);
  eval->add_option("--workers", config.worker_count, "evaluation worker threads")
      ->check(CLI::PositiveNumber);

  // --- segment ----------------------------------------------------------
  std::string segment_lang, segment_text, segment_file;
  bool segment_strict = false;
  CLI::App* segment = app.add_subcommand(
      "segment", "dump the per-word segments, tones and vectors for text");
  segment->add_option("--lang", segment_lang, "language profile")->required();
  segment->add_option("text", segment_text, "text to segment");
  segment->add_option("--file", segment_file, "read the text from a file");
  segment->add_flag("--strict", segment_strict,
                    "fail on characters the profile cannot segment");

  // --- profile validate ---------------------------------------------------
  std::string validate_path;
  CLI::App* profile = app.add_subcommand("profile", "profile file utilities");
  profile->require_subcommand(1);
  CLI::App* validate =
      profile->add_subcommand("validate", "check a profile file and list problems");
  validate->add_option("path", validate_path, "profile file (or builtin name)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) {
      config.input_format =
          input_format == "lines" ? InputFormat::Lines : InputFormat::KeyedTsv;
      config.output_format = *ReportFormatFromName(output_format);
      if (!lexicon_path.empty()) config.lexicon_path = lexicon_path;
      config.color =
          config.output_format == ReportFormat::Pretty && isatty(fileno(stdout));
      return run_eval(config, std::cout);
    }
    if (segment->parsed()) {
      if (!segment_file.empty() && !segment_text.empty())
        throw Error("pass either TEXT or --file, not both");
      const std::string text =
          segment_file.empty() ? segment_text : read_file_or_die(segment_file);
      return run_segment(text, segment_lang, segment_strict, std::cout);
    }
    if (validate->parsed()) {
      return run_profile_validate(validate_path, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
