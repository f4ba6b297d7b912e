// core/include/phonoscore/runner.hpp

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

#ifndef PHONOSCORE_RUNNER_HPP_
#define PHONOSCORE_RUNNER_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "phonoscore/report.hpp"

namespace phonoscore {

enum class InputFormat { Lines, KeyedTsv };

struct RunConfig {
  std::string profile_source;  // builtin name or profile file path
  std::string ref_path;
  std::string hyp_path;
  InputFormat input_format = InputFormat::Lines;
  ReportFormat output_format = ReportFormat::Json;
  double indel_cost = 1.0;
  bool strict = false;
  std::optional<std::string> lexicon_path;
  bool per_utterance = false;
  int min_support = 5;
  int worker_count = 1;
  bool color = false;
};

// One keyed utterance pair.
struct CorpusPair {
  std::string id;
  std::string ref;
  std::string hyp;
};

// Reads a transcript file (UTF-8; a leading BOM is stripped).  In lines
// mode ids are 1-based line numbers; in keyed-tsv mode each line is
// `id<TAB>text`.
std::vector<std::pair<std::string, std::string>> read_corpus_file(
    const std::string& path, InputFormat format);

// Pairs reference and hypothesis corpora.  Lines mode requires equal line
// counts; keyed mode requires every hypothesis key to exist in the
// reference (reference entries without a hypothesis score against the
// empty string).  Pairs keep reference order.
std::vector<CorpusPair> pair_corpora(const std::string& ref_path,
                                     const std::string& hyp_path,
                                     InputFormat format);

// Evaluates every pair (fanning out to config.worker_count workers),
// aggregates and renders to `out`.  Output is byte-identical for a fixed
// config regardless of worker count.  Returns 0 on success; precondition
// failures throw (the CLI maps them to a nonzero exit).
int run_eval(const RunConfig& config, std::ostream& out);

// Mirrors run_eval but hands back the corpus report instead of rendering.
CorpusReport evaluate_corpus(const RunConfig& config);

// Per-word segment dump for debugging G2P rules.
int run_segment(const std::string& text, const std::string& profile_source,
                bool strict, std::ostream& out);

// Prints profile diagnostics; returns 0 iff the file is valid.
int run_profile_validate(const std::string& path, std::ostream& out);

}  // namespace phonoscore

#endif  // PHONOSCORE_RUNNER_HPP_
